#pragma once

#include <cstdint>
#include <string>

#include "romsched/schedule.hpp"
#include "romsched/stockyard.hpp"

namespace romsched {

/// Filesystem-level failure (unreadable or unwritable path).
struct IoError : Error {
    using Error::Error;
};

enum class Tightness { Loose, Medium, Tight };

const char* tightness_name(Tightness t);
bool parse_tightness(const std::string& s, Tightness& out);

/// Parameters of the synthetic stockyard generator. The yard layout is fixed
/// (4 rows x 4 stockpiles x 4 benches x 10 cuts); deliveries, reclaimers and
/// declared directions follow the (D-R-phi) instance tuple.
struct GeneratorSpec {
    int deliveries = 6;   // D, <= 10; more than 9 requires 3 reclaimers
    int reclaimers = 2;   // R, 2 or 3
    int directions = 2;   // phi count, 1 or 2
    uint64_t seed = 1;
    int minerals = 4;
    Tightness tightness = Tightness::Medium;
    double reclaim_rate = 100.0;  // tonnes per minute -> tau = gamma / rate
    CostModel cost;
    int safety_min_columns = 10;
    double cut_tonnage_lo = 1000.0;
    double cut_tonnage_hi = 5000.0;
    double delivery_tonnage_lo = 100000.0;
    double delivery_tonnage_hi = 200000.0;
};

/// Renders the instance tuple, e.g. "(6-2-2)".
std::string instance_tuple_name(int deliveries, int reclaimers, int directions);

/// Deterministic synthetic instance: equal seeds yield equal instances.
/// Throws ModelError for specs violating the tuple invariants.
Instance generate(const GeneratorSpec& spec);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);
std::string instance_to_string(const Instance& inst);

Schedule load_schedule(const std::string& path, const Instance& inst);
void save_schedule(const Schedule& s, const Instance& inst, const std::string& path);
std::string schedule_to_string(const Schedule& s, const Instance& inst);

}  // namespace romsched
