#pragma once

#include <functional>
#include <span>
#include <vector>

#include "romsched/construction.hpp"

namespace romsched {

struct GreedyParams {
    double lambda = 10.0;  // greediness exponent, >= 0
    double sp = 1.8;       // selection pressure, in (1, 2]
};

/// Heuristic information per candidate, summing to 1. When every candidate
/// has v1 = v2 = 0, eta is normalised 1/u (cheaper jobs score higher);
/// otherwise linear ranking by lexicographic score with the best candidate
/// taking the largest rank index.
std::vector<double> heuristic_info(std::span<const Candidate> candidates, double sp);

/// Lexicographic argmin; ties broken by the (cut, direction, reclaimer) key.
size_t dga_select(std::span<const Candidate> candidates);

/// Roulette wheel over non-negative weights. Falls back to the first maximal
/// weight if the total mass underflows to zero.
size_t roulette(std::span<const double> weights, RandomEngine& rng);

class DgaPolicy : public SelectionPolicy {
public:
    size_t select(std::span<const Candidate> candidates, RandomEngine&) override {
        return dga_select(candidates);
    }
};

/// Samples proportional to eta^lambda.
class RgaPolicy : public SelectionPolicy {
public:
    explicit RgaPolicy(GreedyParams params) : params_(params) {}
    size_t select(std::span<const Candidate> candidates, RandomEngine& rng) override;

private:
    GreedyParams params_;
};

/// Test hook: delegates each step to a callback.
class ScriptedPolicy : public SelectionPolicy {
public:
    using Chooser = std::function<size_t(std::span<const Candidate>)>;
    explicit ScriptedPolicy(Chooser c) : choose_(std::move(c)) {}
    size_t select(std::span<const Candidate> candidates, RandomEngine&) override {
        return choose_(candidates);
    }

private:
    Chooser choose_;
};

/// Selection weights eta^lambda (zero eta stays zero for any lambda,
/// including lambda = 0); normalised by the max for numeric stability.
std::vector<double> rga_weights(std::span<const double> eta, double lambda);

}  // namespace romsched
