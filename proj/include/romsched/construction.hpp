#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "romsched/objective.hpp"
#include "romsched/rng.hpp"
#include "romsched/schedule.hpp"
#include "romsched/stockyard.hpp"

namespace romsched {

/// Construction deadlocked: all reclaimers idle with empty neighborhoods
/// while deliveries remain. Carries the partial schedule for diagnosis.
struct ConstructionError : Error {
    Schedule partial;
    ConstructionError(const std::string& msg, Schedule p)
        : Error(msg), partial(std::move(p)) {}
};

/// One reclaimer's share of a candidate selection step.
struct CandidateJob {
    int reclaimer = 0;
    Job job;
    int delivery = 1;          // attributed delivery d^r
    bool ahead = false;        // selected via the material exhaustion exception
    double cost = 0.0;         // T = relocation + tau
    double completion = 0.0;   // tentative completion if committed now
};

/// A joint candidate: one job per simultaneously selecting reclaimer, with its
/// delta score (v1 of the extended assembly, v2 of the new trailing windows,
/// sum T/Gamma of the tuple).
struct Candidate {
    ObjectiveValue score;
    int size = 0;
    std::array<CandidateJob, 3> jobs;

    std::span<const CandidateJob> parts() const { return {jobs.data(), size_t(size)}; }
};

/// Deterministic tie-break order on the (cut, direction, reclaimer) sequence.
bool candidate_key_less(const Candidate& a, const Candidate& b);

/// Selection strategy plugged into the construction loop. Returns the index
/// of the chosen candidate; candidates is never empty.
class SelectionPolicy {
public:
    virtual ~SelectionPolicy() = default;
    virtual size_t select(std::span<const Candidate> candidates, RandomEngine& rng) = 0;
};

/// Jobs a reclaimer may start right now for a given delivery material:
/// accessible_cuts filtered by material, claim status, and safety distance
/// against every position in `reserved` (cut ids other reclaimers occupy or
/// move toward).
std::vector<Job> eligible_jobs(const Instance& inst,
                               const std::vector<bool>& reclaimed,
                               const std::vector<bool>& claimed,
                               const Reclaimer& r,
                               int material,
                               std::span<const uint32_t> reserved);

/// Cartesian product of per-reclaimer job sets, excluding tuples with a
/// repeated cut or a pairwise safety conflict between destinations.
std::vector<std::vector<Job>> joint_job_tuples(const Instance& inst,
                                               std::span<const std::vector<Job>> neighborhoods);

/// Product size above which the engine falls back to sequential
/// per-reclaimer selection in reclaimer-id order.
inline constexpr size_t kJointTupleLimit = 10000;

/// Builds a complete feasible schedule for all deliveries (discrete-event loop:
/// fixed initial jobs, per-step neighborhoods, joint selection for idle
/// reclaimers of matching material, material exhaustion exception, sequential
/// delivery filling). Throws ConstructionError on deadlock.
Schedule construct(const Instance& inst, SelectionPolicy& policy, uint64_t seed,
                   std::ostream* trace = nullptr);

struct FeasibilityReport {
    bool ok = true;
    std::string violation;  // first violated constraint, with timestamps
};

/// Independent feasibility check: precedence, non-preemption, safety distance
/// at every event time, cut uniqueness, material/delivery consistency,
/// tonnage accounting, lateral ordering.
FeasibilityReport validate(const Instance& inst, const Schedule& s);

struct ReplayResult {
    bool ok = false;
    Schedule schedule;
    std::string violation;
};

/// Re-executes fixed per-reclaimer job sequences through the event loop,
/// recomputing all timestamps. A job must be startable (predecessors complete,
/// safety clear) the moment its reclaimer frees up; otherwise the replay
/// reports the violation. Delivery attribution is taken from the input
/// segments and left untouched.
ReplayResult replay(const Instance& inst, const Schedule& sequences);

}  // namespace romsched
