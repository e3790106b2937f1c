#include "romsched/mmas.hpp"

#include <algorithm>
#include <cmath>

namespace romsched {

PheromoneTable::PheromoneTable(size_t total_cuts)
    : cuts_(total_cuts), xi_(total_cuts * 2, 0.0) {
    if (total_cuts < 2)
        throw ModelError("pheromone table needs at least 2 cuts for valid bounds");
    std::fill(xi_.begin(), xi_.end(), upper_bound());
}

double PheromoneTable::tuple_value(std::span<const CandidateJob> parts) const {
    double v = 1.0;
    for (const CandidateJob& p : parts) v *= get(p.job);
    return v;
}

void PheromoneTable::evaporate(double rho) {
    const double lo = lower_bound();
    for (double& v : xi_) v = std::max(lo, v * (1.0 - rho));
}

void PheromoneTable::deposit(const Schedule& solution, double rho) {
    const double lo = lower_bound();
    const double hi = upper_bound();
    std::vector<bool> on_path(xi_.size(), false);
    for (const auto& segment : solution.segments)
        for (const TimedJob& j : segment) on_path[index({j.cut, j.dir})] = true;
    for (size_t i = 0; i < xi_.size(); ++i)
        xi_[i] = on_path[i] ? std::min(xi_[i] + rho, hi) : std::max(xi_[i], lo);
}

size_t MmasPolicy::select(std::span<const Candidate> candidates, RandomEngine& rng) {
    if (candidates.empty()) throw Error("mmas_select: empty candidate set");
    if (candidates.size() == 1) return 0;

    auto eta = heuristic_info(candidates, sp_);

    double xi_max = 0.0, eta_max = 0.0;
    std::vector<double> xi(candidates.size());
    for (size_t i = 0; i < candidates.size(); ++i) {
        xi[i] = table_->tuple_value(candidates[i].parts());
        xi_max = std::max(xi_max, xi[i]);
        eta_max = std::max(eta_max, eta[i]);
    }

    std::vector<double> w(candidates.size());
    double total = 0.0;
    for (size_t i = 0; i < candidates.size(); ++i) {
        double xw = alpha_ == 0.0 ? 1.0 : std::pow(xi[i] / xi_max, alpha_);
        double ew = beta_ == 0.0 ? 1.0 : (eta[i] == 0.0 ? 0.0 : std::pow(eta[i] / eta_max, beta_));
        w[i] = xw * ew;
        total += w[i];
    }
    if (total > 0.0) return roulette(w, rng);

    // vanished mass: uniform over candidates of maximal eta
    std::vector<size_t> top;
    for (size_t i = 0; i < eta.size(); ++i)
        if (eta[i] == eta_max) top.push_back(i);
    return top[rng.index(top.size())];
}

ColonyResult run_colony(const Instance& inst, const MmasParams& params, uint64_t seed) {
    if (params.ants < 1) throw ModelError("run_colony: need at least one ant");
    if (params.generations < 1) throw ModelError("run_colony: need at least one generation");
    if (!(params.rho > 0.0 && params.rho <= 1.0))
        throw ModelError("run_colony: evaporation rate must be in (0, 1]");

    PheromoneTable xi(inst.cut_count());

    ColonyResult result;
    bool have_best = false;
    result.history.reserve(size_t(params.generations));

    for (int gen = 1; gen <= params.generations; ++gen) {
        Schedule iter_best;
        ObjectiveValue iter_best_f;
        bool have_iter = false;

        for (int ant = 0; ant < params.ants; ++ant) {
            uint64_t ant_seed = mix_seed(seed, uint64_t(gen), uint64_t(ant));
            MmasPolicy policy(xi, params.alpha, params.beta, params.sp);
            Schedule s;
            try {
                s = construct(inst, policy, ant_seed);
            } catch (ConstructionError& e) {
                throw ConstructionError("generation " + std::to_string(gen) + ", ant " +
                                            std::to_string(ant) + ": " + e.what(),
                                        std::move(e.partial));
            }
            ObjectiveValue f = evaluate_schedule(inst, s);
            if (!have_iter || lex_less(f, iter_best_f)) {
                iter_best = s;
                iter_best_f = f;
                have_iter = true;
            }
            if (!have_best || lex_less(f, result.best_objective)) {
                result.best = std::move(s);
                result.best_objective = f;
                have_best = true;
            }
        }

        result.history.push_back({gen, result.best_objective});
        xi.evaporate(params.rho);
        const Schedule& depositor =
            params.depositor == Depositor::Iba ? iter_best : result.best;
        xi.deposit(depositor, params.rho);
    }
    return result;
}

}  // namespace romsched
