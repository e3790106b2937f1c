#include "romsched/objective.hpp"

#include <algorithm>
#include <cmath>

#include "romsched/construction.hpp"

namespace romsched {

int lexicographic_compare(const ObjectiveValue& a, const ObjectiveValue& b, double eps) {
    auto cmp = [eps](double x, double y) -> int {
        if (eps > 0.0 && std::abs(x - y) <= eps) return 0;
        if (x < y) return -1;
        if (x > y) return 1;
        return 0;
    };
    if (int c = cmp(a.v1, b.v1)) return c;
    if (int c = cmp(a.v2, b.v2)) return c;
    return cmp(a.u, b.u);
}

double bracket_violation(double value, double lo, double hi) {
    if (value > hi) return std::abs(value - hi) / std::abs(hi);
    if (value < lo) return std::abs(value - lo) / std::abs(lo);
    return 0.0;
}

std::vector<AssemblyJob> delivery_assembly(const Schedule& s, int delivery) {
    std::vector<AssemblyJob> jobs;
    for (int r = 0; r < s.reclaimers; ++r)
        for (const TimedJob& j : s.segment(delivery, r))
            jobs.push_back({j.cut, r, j.completion, j.completion - j.start});
    std::sort(jobs.begin(), jobs.end(), [](const AssemblyJob& a, const AssemblyJob& b) {
        if (a.completion != b.completion) return a.completion < b.completion;
        return a.reclaimer < b.reclaimer;
    });
    return jobs;
}

double average_quality_violation(const Instance& inst, const Delivery& d,
                                 std::span<const AssemblyJob> assembly) {
    if (assembly.empty())
        throw ModelError("average_quality_violation: empty delivery assembly");
    // Sum grades in cut-id order: v1 is then bit-identical under any
    // reordering of the same job set.
    std::vector<uint32_t> ids;
    ids.reserve(assembly.size());
    for (const AssemblyJob& j : assembly) ids.push_back(j.cut);
    std::sort(ids.begin(), ids.end());

    double total = 0.0;
    for (int k = 0; k < inst.minerals; ++k) {
        double sum = 0.0;
        for (uint32_t id : ids) sum += inst.cuts[id].grades[size_t(k)];
        double mean = sum / double(ids.size());
        total += bracket_violation(mean, d.bounds[size_t(k)].lo, d.bounds[size_t(k)].hi);
    }
    return total;
}

double window_quality_violation(const Instance& inst, const Delivery& d,
                                std::span<const AssemblyJob> assembly) {
    if (assembly.size() < 4) return 0.0;
    double total = 0.0;
    for (int k = 0; k < inst.minerals; ++k) {
        const Bounds& b = d.bounds[size_t(k)];
        for (size_t j = 3; j < assembly.size(); ++j) {
            double mean = (inst.cuts[assembly[j].cut].grades[size_t(k)] +
                           inst.cuts[assembly[j - 1].cut].grades[size_t(k)] +
                           inst.cuts[assembly[j - 2].cut].grades[size_t(k)]) / 3.0;
            total += bracket_violation(mean, b.lo, b.hi);
        }
    }
    return total;
}

double utility(const Instance& inst, std::span<const AssemblyJob> assembly) {
    double total = 0.0;
    for (const AssemblyJob& j : assembly)
        total += j.duration / inst.cuts[j.cut].tonnage;
    return total;
}

ObjectiveValue evaluate_delivery(const Instance& inst, const Delivery& d,
                                 std::span<const AssemblyJob> assembly) {
    return {average_quality_violation(inst, d, assembly),
            window_quality_violation(inst, d, assembly),
            utility(inst, assembly)};
}

ObjectiveValue evaluate_schedule_unchecked(const Instance& inst, const Schedule& s) {
    ObjectiveValue total;
    for (int d = 1; d <= s.deliveries; ++d) {
        auto assembly = delivery_assembly(s, d);
        ObjectiveValue v = evaluate_delivery(inst, inst.deliveries[size_t(d - 1)], assembly);
        total.v1 += v.v1;
        total.v2 += v.v2;
        total.u += v.u;
    }
    return total;
}

ObjectiveValue evaluate_schedule(const Instance& inst, const Schedule& s) {
    FeasibilityReport report = validate(inst, s);
    if (!report.ok)
        throw ModelError("evaluate_schedule: infeasible schedule: " + report.violation);
    return evaluate_schedule_unchecked(inst, s);
}

}  // namespace romsched
