#include "romsched/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace romsched {

namespace {

bool score_order_less(const Candidate& a, const Candidate& b) {
    int c = lexicographic_compare(a.score, b.score);
    if (c != 0) return c < 0;
    return candidate_key_less(a, b);
}

}  // namespace

size_t dga_select(std::span<const Candidate> candidates) {
    if (candidates.empty()) throw Error("dga_select: empty candidate set");
    size_t best = 0;
    for (size_t i = 1; i < candidates.size(); ++i)
        if (score_order_less(candidates[i], candidates[best])) best = i;
    return best;
}

std::vector<double> heuristic_info(std::span<const Candidate> candidates, double sp) {
    const size_t mu = candidates.size();
    if (mu == 0) return {};
    if (mu == 1) return {1.0};

    bool all_feasible = true;
    for (const Candidate& c : candidates)
        if (c.score.v1 != 0.0 || c.score.v2 != 0.0) { all_feasible = false; break; }

    std::vector<double> eta(mu);
    if (all_feasible) {
        // utility is always positive (reclaim times are), so 1/u is finite
        double total = 0.0;
        for (size_t i = 0; i < mu; ++i) {
            eta[i] = 1.0 / candidates[i].score.u;
            total += eta[i];
        }
        for (double& e : eta) e /= total;
        return eta;
    }

    std::vector<size_t> order(mu);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return score_order_less(candidates[a], candidates[b]);
    });
    // linear ranking; the best candidate takes the largest rank index
    const double m = double(mu);
    for (size_t p = 0; p < mu; ++p) {
        double rank = double(mu - 1 - p);
        eta[order[p]] = (2.0 - sp) / m + 2.0 * rank * (sp - 1.0) / (m * (m - 1.0));
    }
    return eta;
}

std::vector<double> rga_weights(std::span<const double> eta, double lambda) {
    std::vector<double> w(eta.size(), 0.0);
    double max = 0.0;
    for (double e : eta) max = std::max(max, e);
    if (max <= 0.0) return w;
    for (size_t i = 0; i < eta.size(); ++i)
        w[i] = eta[i] == 0.0 ? 0.0 : std::pow(eta[i] / max, lambda);
    return w;
}

size_t roulette(std::span<const double> weights, RandomEngine& rng) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0)) {
        for (size_t i = 0; i < weights.size(); ++i)
            if (weights[i] == *std::max_element(weights.begin(), weights.end())) return i;
        return 0;
    }
    double r = rng.uniform01() * total;
    double acc = 0.0;
    size_t last_positive = 0;
    for (size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) continue;
        acc += weights[i];
        last_positive = i;
        if (r < acc) return i;
    }
    return last_positive;  // floating-point residue lands on the last mass
}

size_t RgaPolicy::select(std::span<const Candidate> candidates, RandomEngine& rng) {
    if (candidates.empty()) throw Error("rga_select: empty candidate set");
    if (candidates.size() == 1) return 0;
    auto eta = heuristic_info(candidates, params_.sp);
    auto w = rga_weights(eta, params_.lambda);
    double total = 0.0;
    for (double x : w) total += x;
    if (total > 0.0) return roulette(w, rng);
    // all mass vanished: uniform over candidates of maximal eta
    double max = *std::max_element(eta.begin(), eta.end());
    std::vector<size_t> top;
    for (size_t i = 0; i < eta.size(); ++i)
        if (eta[i] == max) top.push_back(i);
    return top[rng.index(top.size())];
}

}  // namespace romsched
