#pragma once

#include <span>
#include <vector>

#include "romsched/construction.hpp"
#include "romsched/selection.hpp"

namespace romsched {

/// Pheromone trail per (cut, direction), clamped to [1/J, 1 - 1/J] where J is
/// the total cut count. Initialised to the upper bound.
class PheromoneTable {
public:
    explicit PheromoneTable(size_t total_cuts);

    double lower_bound() const { return 1.0 / double(cuts_); }
    double upper_bound() const { return 1.0 - 1.0 / double(cuts_); }

    double get(Job j) const { return xi_[index(j)]; }
    void set(Job j, double v) { xi_[index(j)] = v; }

    /// Joint tuples carry the product of their member jobs' trail values.
    double tuple_value(std::span<const CandidateJob> parts) const;

    /// xi <- (1 - rho) * xi, clamped up to the lower bound.
    void evaporate(double rho);

    /// min{xi + rho, upper} on (cut, direction) pairs of the solution,
    /// max{xi, lower} elsewhere.
    void deposit(const Schedule& solution, double rho);

    std::span<const double> values() const { return xi_; }

private:
    size_t index(Job j) const { return size_t(j.cut) * 2 + size_t(direction_index(j.dir)); }

    size_t cuts_;
    std::vector<double> xi_;
};

enum class Depositor { Iba, Bsfa };

struct MmasParams {
    double alpha = 2.0;  // pheromone exponent
    double beta = 6.0;   // heuristic exponent
    double rho = 0.4;    // evaporation rate, in (0, 1]
    double sp = 1.8;     // selection pressure for eta
    int ants = 10;
    int generations = 1000;
    Depositor depositor = Depositor::Iba;
};

/// Samples proportional to xi^alpha * eta^beta.
class MmasPolicy : public SelectionPolicy {
public:
    MmasPolicy(const PheromoneTable& table, double alpha, double beta, double sp)
        : table_(&table), alpha_(alpha), beta_(beta), sp_(sp) {}
    size_t select(std::span<const Candidate> candidates, RandomEngine& rng) override;

private:
    const PheromoneTable* table_;
    double alpha_, beta_, sp_;
};

struct GenerationRecord {
    int generation = 0;          // 1-based
    ObjectiveValue best_so_far;  // after this generation
};

struct ColonyResult {
    Schedule best;
    ObjectiveValue best_objective;
    std::vector<GenerationRecord> history;
};

/// Max-Min Ant System: each generation runs `ants` constructions with the
/// pheromone-guided policy, updates the best-so-far, evaporates, and lets the
/// depositor ant (iteration best or best so far) reinforce its trail.
/// Per-ant random streams derive from `seed`, so results do not depend on
/// execution order. Construction failure of any ant aborts the run.
ColonyResult run_colony(const Instance& inst, const MmasParams& params, uint64_t seed);

}  // namespace romsched
