#pragma once

#include <cstdint>
#include <vector>

#include "romsched/stockyard.hpp"

namespace romsched {

/// One executed job with its timestamps. `ahead` marks jobs selected through
/// the material exhaustion exception (attributed to a delivery ahead of the
/// global counter at selection time).
struct TimedJob {
    uint32_t cut = 0;
    Direction dir = Direction::Phi1;
    double start = 0.0;
    double completion = 0.0;
    bool ahead = false;
};

/// A complete solution: per (delivery, reclaimer) segments x_d^r, each a
/// time-ordered job list.
struct Schedule {
    int deliveries = 0;
    int reclaimers = 0;
    std::vector<std::vector<TimedJob>> segments;  // index (d-1)*reclaimers + r

    Schedule() = default;
    Schedule(int d, int r) : deliveries(d), reclaimers(r), segments(size_t(d) * r) {}

    std::vector<TimedJob>& segment(int delivery, int reclaimer) {
        return segments[size_t(delivery - 1) * reclaimers + reclaimer];
    }
    const std::vector<TimedJob>& segment(int delivery, int reclaimer) const {
        return segments[size_t(delivery - 1) * reclaimers + reclaimer];
    }

    size_t job_count() const {
        size_t n = 0;
        for (const auto& s : segments) n += s.size();
        return n;
    }

    /// Accumulated tonnage per delivery (index 0 = delivery 1).
    std::vector<double> delivery_tonnage(const Instance& inst) const {
        std::vector<double> acc(size_t(deliveries), 0.0);
        for (int d = 1; d <= deliveries; ++d)
            for (int r = 0; r < reclaimers; ++r)
                for (const TimedJob& j : segment(d, r))
                    acc[size_t(d - 1)] += inst.cuts[j.cut].tonnage;
        return acc;
    }

    /// All jobs of one reclaimer in start-time order, tagged with their delivery.
    std::vector<std::pair<int, TimedJob>> reclaimer_sequence(int r) const;

    friend bool operator==(const Schedule& a, const Schedule& b);
};

bool operator==(const TimedJob& a, const TimedJob& b);

}  // namespace romsched
