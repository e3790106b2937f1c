#include "romsched/schedule.hpp"

#include <algorithm>

namespace romsched {

bool operator==(const TimedJob& a, const TimedJob& b) {
    return a.cut == b.cut && a.dir == b.dir && a.start == b.start &&
           a.completion == b.completion && a.ahead == b.ahead;
}

bool operator==(const Schedule& a, const Schedule& b) {
    return a.deliveries == b.deliveries && a.reclaimers == b.reclaimers &&
           a.segments == b.segments;
}

std::vector<std::pair<int, TimedJob>> Schedule::reclaimer_sequence(int r) const {
    std::vector<std::pair<int, TimedJob>> seq;
    for (int d = 1; d <= deliveries; ++d)
        for (const TimedJob& j : segment(d, r))
            seq.emplace_back(d, j);
    std::sort(seq.begin(), seq.end(), [](const auto& a, const auto& b) {
        return a.second.start < b.second.start;
    });
    return seq;
}

}  // namespace romsched
