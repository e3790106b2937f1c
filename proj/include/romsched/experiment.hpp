#pragma once

#include <span>
#include <string>
#include <vector>

#include "romsched/instance_io.hpp"
#include "romsched/mmas.hpp"
#include "romsched/selection.hpp"

namespace romsched {

enum class Algorithm { Dga, Rga, Mmas, MmasLocal };

const char* algorithm_name(Algorithm a);
bool parse_algorithm(const std::string& s, Algorithm& out);

struct SolverParams {
    Algorithm algorithm = Algorithm::Mmas;
    uint64_t seed = 1;
    GreedyParams greedy;
    MmasParams mmas;
    double compare_eps = 0.0;   // lexicographic comparison tolerance (off by default)
    std::string history_csv;    // per-generation best-so-far (mmas variants)
    std::string trace_log;      // construction event trace
    std::string swap_log;       // local search swap log (mmas-local)
};

/// One end-to-end solve. mmas-local runs the colony and then the local search.
Schedule solve(const Instance& inst, const SolverParams& params);

struct RunResult {
    int run = 0;
    uint64_t seed = 0;
    bool ok = false;
    ObjectiveValue objective;
    long long wall_ms = 0;
    std::string error;
};

/// Percentage of successful runs with v1 exactly 0.
double success_rate(std::span<const RunResult> runs);

struct SummaryRow {
    std::string instance;
    Algorithm algorithm = Algorithm::Dga;
    int runs = 0;
    int failed = 0;
    ObjectiveValue median;  // rank runs/2 (0-based) under the lexicographic order
    ObjectiveValue best;
    ObjectiveValue worst;
    double sr = 0.0;
};

struct ExperimentConfig {
    int runs = 51;
    uint64_t master_seed = 1;
    int threads = 1;
    bool include_timing = true;  // wall_time_ms column; 0 when disabled
};

struct NamedInstance {
    std::string name;
    const Instance* instance = nullptr;
};

struct ExperimentResult {
    std::vector<SummaryRow> summary;
    std::vector<std::vector<RunResult>> runs;  // parallel to summary
    int failures = 0;
};

/// Repeated seeded trials of each algorithm on each instance. Per-run seeds
/// derive from the master seed, the instance index and the run index (not the
/// algorithm), so algorithms are compared on paired streams. The deterministic
/// dga runs once regardless of cfg.runs. Rows land in csv_path in run order;
/// a human-readable summary goes to summary_path when non-empty.
ExperimentResult run_experiment(std::span<const NamedInstance> instances,
                                std::span<const Algorithm> algorithms,
                                const SolverParams& base,
                                const ExperimentConfig& cfg,
                                const std::string& csv_path,
                                const std::string& summary_path);

std::string format_summary(std::span<const SummaryRow> rows);
std::string format_objective(const ObjectiveValue& v);  // "(v1, v2, u)"

}  // namespace romsched
