#pragma once

#include <span>
#include <vector>

#include "romsched/schedule.hpp"
#include "romsched/stockyard.hpp"

namespace romsched {

/// The lexicographic triple (sum v1, sum v2, sum u), minimised in that order.
struct ObjectiveValue {
    double v1 = 0.0;
    double v2 = 0.0;
    double u = 0.0;
};

/// Three-way lexicographic comparison: -1 if a < b, 0 if equal, 1 if a > b.
/// Components within eps of each other are treated as equal (eps defaults to
/// 0, i.e. exact comparison on the stored representation).
int lexicographic_compare(const ObjectiveValue& a, const ObjectiveValue& b, double eps = 0.0);

inline bool lex_less(const ObjectiveValue& a, const ObjectiveValue& b, double eps = 0.0) {
    return lexicographic_compare(a, b, eps) < 0;
}

/// Relative bound violation: 0 inside [lo, hi], |value-bound|/|bound| outside,
/// normalised by the violated bound.
double bracket_violation(double value, double lo, double hi);

/// One job as seen by a delivery assembly: completion-stamped, with the
/// realised job cost T = completion - start.
struct AssemblyJob {
    uint32_t cut = 0;
    int reclaimer = 0;
    double completion = 0.0;
    double duration = 0.0;
};

/// Jobs of one delivery across all reclaimers, ordered by completion time
/// (ties by reclaimer id).
std::vector<AssemblyJob> delivery_assembly(const Schedule& s, int delivery);

/// v1: per mineral, the unweighted mean grade over the assembly is
/// bracket-scored against the delivery bounds; returns the sum over minerals.
/// Grades are accumulated in cut-id order so the result is invariant, bit for
/// bit, under reordering of the assembly. Assembly must be non-empty.
double average_quality_violation(const Instance& inst, const Delivery& d,
                                 std::span<const AssemblyJob> assembly);

/// v2: bracket-scored trailing 3-cut mean at every position j >= 4 of the
/// time-ordered assembly, summed over windows and minerals.
double window_quality_violation(const Instance& inst, const Delivery& d,
                                std::span<const AssemblyJob> assembly);

/// u: sum of realised job cost over cut tonnage.
double utility(const Instance& inst, std::span<const AssemblyJob> assembly);

ObjectiveValue evaluate_delivery(const Instance& inst, const Delivery& d,
                                 std::span<const AssemblyJob> assembly);

/// Component-wise sum over all deliveries. Refuses infeasible schedules
/// (throws ModelError with the validator's report).
ObjectiveValue evaluate_schedule(const Instance& inst, const Schedule& s);

/// Same, but skips the feasibility check; for callers that just validated.
ObjectiveValue evaluate_schedule_unchecked(const Instance& inst, const Schedule& s);

}  // namespace romsched
