#pragma once

// Shared builders for hand-crafted instances plus the independent oracles the
// implementation is checked against. Everything here recomputes from raw
// instance data with straight-line code; none of it calls into the scoring or
// engine paths it verifies.

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <vector>

#include "romsched/instance_io.hpp"
#include "romsched/objective.hpp"
#include "romsched/schedule.hpp"
#include "romsched/stockyard.hpp"

namespace testsup {

using namespace romsched;

// One reclaimer, one stockpile, 2 benches x 2 cuts, Phi1 only, one delivery
// needing all four cuts. Two feasible orders exist: 0,1,2,3 and 0,2,1,3.
inline Instance tiny_oracle_instance() {
    Instance inst;
    inst.name = "tiny-oracle";
    inst.minerals = 1;
    inst.directions = 1;
    inst.safety_min_columns = 0;
    inst.cuts_per_bench = 2;
    inst.cost = {5.0, 1.0, 10.0};

    // ids: 0=(b1,p1) 1=(b1,p2) 2=(b2,p1) 3=(b2,p2)
    double tonnage[4] = {1000.0, 1200.0, 1100.0, 1300.0};
    double grades[4] = {1.0, 1.2, 0.9, 1.1};
    int idx = 0;
    for (int bench = 1; bench <= 2; ++bench) {
        for (int pos = 1; pos <= 2; ++pos) {
            Cut c;
            c.id = uint32_t(idx);
            c.row = 0;
            c.stockpile = 0;
            c.bench = bench;
            c.position = pos;
            c.material = 0;
            c.tonnage = tonnage[idx];
            c.reclaim_time = tonnage[idx] / 100.0;
            c.grades = {grades[idx]};
            inst.cuts.push_back(c);
            ++idx;
        }
    }

    Reclaimer r;
    r.id = 0;
    r.rows = {0};
    r.dirs = {Direction::Phi1};
    r.entry_cut = 0;
    r.entry_dir = Direction::Phi1;
    inst.reclaimers.push_back(r);

    Delivery d;
    d.id = 1;
    d.material = 0;
    d.tonnage = 4000.0;  // forces all four cuts (sum 4600 > 4000 > any 3-cut sum)
    d.bounds = {{0.5, 2.0}};
    inst.deliveries.push_back(d);

    inst.finalize();
    return inst;
}

// Single reclaimer, one row with a 3-cut chain stockpile, loose bounds.
inline Instance chain_instance(int cuts_in_chain, double delivery_tonnage) {
    Instance inst;
    inst.name = "chain";
    inst.minerals = 1;
    inst.directions = 1;
    inst.safety_min_columns = 0;
    inst.cuts_per_bench = 10;
    inst.cost = {5.0, 1.0, 10.0};
    for (int p = 1; p <= cuts_in_chain; ++p) {
        Cut c;
        c.id = uint32_t(p - 1);
        c.row = 0;
        c.stockpile = 0;
        c.bench = 1;
        c.position = p;
        c.material = 0;
        c.tonnage = 1000.0 + 100.0 * p;
        c.reclaim_time = c.tonnage / 100.0;
        c.grades = {1.0 + 0.01 * p};
        inst.cuts.push_back(c);
    }
    Reclaimer r;
    r.id = 0;
    r.rows = {0};
    r.dirs = {Direction::Phi1};
    r.entry_cut = 0;
    r.entry_dir = Direction::Phi1;
    inst.reclaimers.push_back(r);
    Delivery d;
    d.id = 1;
    d.material = 0;
    d.tonnage = delivery_tonnage;
    d.bounds = {{0.1, 10.0}};
    inst.deliveries.push_back(d);
    inst.finalize();
    return inst;
}

// Brute-force enumeration of all feasible full reclamation orders for a
// single-reclaimer instance (ignores tonnage stopping; callers pick targets
// that need every cut). Walks the precedence relation directly.
inline std::vector<std::vector<uint32_t>> enumerate_feasible_orders(const Instance& inst) {
    const Reclaimer& r = inst.reclaimers.at(0);
    std::vector<std::vector<uint32_t>> result;
    std::vector<uint32_t> order{r.entry_cut};
    std::vector<bool> used(inst.cut_count(), false);
    used[r.entry_cut] = true;

    std::function<void()> rec = [&]() {
        if (order.size() == inst.cut_count()) {
            result.push_back(order);
            return;
        }
        for (uint32_t c = 0; c < inst.cut_count(); ++c) {
            if (used[c]) continue;
            if (std::find(r.rows.begin(), r.rows.end(), inst.cuts[c].row) == r.rows.end())
                continue;
            bool ready = false;
            for (Direction d : r.dirs) {
                bool ok = true;
                for (uint32_t p : inst.predecessors({c, d}))
                    if (!used[p]) { ok = false; break; }
                if (ok) { ready = true; break; }
            }
            if (!ready) continue;
            used[c] = true;
            order.push_back(c);
            rec();
            order.pop_back();
            used[c] = false;
        }
    };
    rec();
    return result;
}

// Independent evaluation of a single-reclaimer cut order: times from plain
// cost sums, v1/v2/u per their definitions, everything recomputed from the
// raw instance.
inline ObjectiveValue oracle_evaluate_order(const Instance& inst,
                                            const std::vector<uint32_t>& order) {
    const Reclaimer& r = inst.reclaimers.at(0);
    const Delivery& d = inst.deliveries.at(0);
    std::vector<double> costs;
    Job prev{r.entry_cut, r.entry_dir};
    for (uint32_t c : order) {
        Job j{c, Direction::Phi1};
        const Cut& cut = inst.cuts[c];
        double reloc = std::abs(inst.cuts[prev.cut].row - cut.row) * inst.cost.row_move +
                       std::abs(inst.column(prev.cut) - inst.column(c)) * inst.cost.col_move;
        costs.push_back(reloc + cut.reclaim_time);
        prev = j;
    }

    ObjectiveValue v;
    for (int k = 0; k < inst.minerals; ++k) {
        double sum = 0;
        for (uint32_t c : order) sum += inst.cuts[c].grades[size_t(k)];
        double mean = sum / double(order.size());
        const Bounds& b = d.bounds[size_t(k)];
        if (mean > b.hi) v.v1 += (mean - b.hi) / std::abs(b.hi);
        else if (mean < b.lo) v.v1 += (b.lo - mean) / std::abs(b.lo);
    }
    for (int k = 0; k < inst.minerals; ++k) {
        const Bounds& b = d.bounds[size_t(k)];
        for (size_t j = 3; j < order.size(); ++j) {
            double m = (inst.cuts[order[j]].grades[size_t(k)] +
                        inst.cuts[order[j - 1]].grades[size_t(k)] +
                        inst.cuts[order[j - 2]].grades[size_t(k)]) / 3.0;
            if (m > b.hi) v.v2 += (m - b.hi) / std::abs(b.hi);
            else if (m < b.lo) v.v2 += (b.lo - m) / std::abs(b.lo);
        }
    }
    for (size_t i = 0; i < order.size(); ++i)
        v.u += costs[i] / inst.cuts[order[i]].tonnage;
    return v;
}

// Flattened single-reclaimer cut order of a schedule, by start time.
inline std::vector<uint32_t> schedule_order(const Schedule& s) {
    std::vector<std::pair<double, uint32_t>> seq;
    for (const auto& seg : s.segments)
        for (const TimedJob& j : seg) seq.emplace_back(j.start, j.cut);
    std::sort(seq.begin(), seq.end());
    std::vector<uint32_t> order;
    for (auto& [t, c] : seq) order.push_back(c);
    return order;
}

inline GeneratorSpec quick_spec(int deliveries, int reclaimers, int directions, uint64_t seed,
                                Tightness tightness = Tightness::Medium) {
    GeneratorSpec spec;
    spec.deliveries = deliveries;
    spec.reclaimers = reclaimers;
    spec.directions = directions;
    spec.seed = seed;
    spec.tightness = tightness;
    return spec;
}

}  // namespace testsup
