#include "doctest.h"

#include <algorithm>
#include <set>

#include "romsched/rng.hpp"
#include "test_support.hpp"

using namespace romsched;
using testsup::tiny_oracle_instance;

namespace {

Instance cost_instance(CostModel cost) {
    // two rows, three columns worth of cuts for relocation arithmetic
    Instance inst;
    inst.name = "cost";
    inst.minerals = 1;
    inst.directions = 2;
    inst.safety_min_columns = 0;
    inst.cuts_per_bench = 10;
    inst.cost = cost;
    auto add = [&](int row, int pos, double tau) {
        Cut c;
        c.id = uint32_t(inst.cuts.size());
        c.row = row;
        c.stockpile = 0;
        c.bench = 1;
        c.position = pos;
        c.material = 0;
        c.tonnage = 1000.0;
        c.reclaim_time = tau;
        c.grades = {1.0};
        inst.cuts.push_back(c);
    };
    add(0, 1, 20.0);  // 0
    add(0, 2, 15.0);  // 1
    add(0, 3, 4.0);   // 2
    add(1, 1, 15.0);  // 3
    Reclaimer r;
    r.id = 0;
    r.rows = {0, 1};
    r.dirs = {Direction::Phi1, Direction::Phi2};
    r.entry_cut = 0;
    r.entry_dir = Direction::Phi1;
    inst.reclaimers.push_back(r);
    Delivery d;
    d.id = 1;
    d.material = 0;
    d.tonnage = 3000.0;
    d.bounds = {{0.5, 2.0}};
    inst.deliveries.push_back(d);
    inst.finalize();
    return inst;
}

}  // namespace

TEST_CASE("relocation cost: rectilinear travel plus direction change") {
    Instance inst = cost_instance({10.0, 3.0, 5.0});

    // same cut, same direction
    CHECK(inst.relocation_cost({0, Direction::Phi1}, {0, Direction::Phi1}) == 0.0);
    // one row step, same column, same direction
    CHECK(inst.relocation_cost({0, Direction::Phi1}, {3, Direction::Phi1}) == 10.0);
    // two column steps plus a direction change
    CHECK(inst.relocation_cost({0, Direction::Phi1}, {2, Direction::Phi2}) == 11.0);

    CHECK_THROWS_AS(inst.relocation_cost({0, Direction::Phi1}, {99, Direction::Phi1}),
                    ModelError);
}

TEST_CASE("relocation cost is symmetric when directions are equal") {
    Instance inst = cost_instance({7.0, 2.5, 9.0});
    for (uint32_t a = 0; a < inst.cut_count(); ++a)
        for (uint32_t b = 0; b < inst.cut_count(); ++b)
            for (Direction d : {Direction::Phi1, Direction::Phi2})
                CHECK(inst.relocation_cost({a, d}, {b, d}) == inst.relocation_cost({b, d}, {a, d}));
}

TEST_CASE("job cost: relocation plus reclaim time") {
    Instance inst = cost_instance({10.0, 3.0, 5.0});
    // relocation 10 (row step), tau = 20... destination is cut 0
    CHECK(inst.job_cost({3, Direction::Phi1}, {0, Direction::Phi1}) == doctest::Approx(30.0));
    // zero relocation
    CHECK(inst.job_cost({3, Direction::Phi1}, {3, Direction::Phi1}) == doctest::Approx(15.0));
    // relocation 11 (2 columns + direction change), tau = 4
    CHECK(inst.job_cost({0, Direction::Phi1}, {2, Direction::Phi2}) == doctest::Approx(15.0));

    for (uint32_t a = 0; a < inst.cut_count(); ++a)
        for (uint32_t b = 0; b < inst.cut_count(); ++b)
            CHECK(inst.job_cost({a, Direction::Phi1}, {b, Direction::Phi1}) >=
                  inst.cuts[b].reclaim_time);
}

TEST_CASE("accessible cuts on the 2x2 stockpile") {
    Instance inst = tiny_oracle_instance();
    const Reclaimer& r = inst.reclaimers[0];
    std::vector<bool> reclaimed(inst.cut_count(), false);

    // nothing reclaimed: only the Phi1 entry
    auto jobs = inst.accessible_cuts(reclaimed, r);
    REQUIRE(jobs.size() == 1);
    CHECK(jobs[0].cut == 0);

    // after the entry cut, the bench-1 chain continues and the overlying rule
    // frees the cut directly beneath (precedence closure enumerated by hand:
    // preds(1)={0}, preds(2)={0}, preds(3)={1,2})
    reclaimed[0] = true;
    jobs = inst.accessible_cuts(reclaimed, r);
    std::set<uint32_t> ids;
    for (const Job& j : jobs) ids.insert(j.cut);
    CHECK(ids == std::set<uint32_t>{1, 2});

    // everything reclaimed: empty
    std::fill(reclaimed.begin(), reclaimed.end(), true);
    CHECK(inst.accessible_cuts(reclaimed, r).empty());
}

TEST_CASE("accessible cuts grow monotonically as cuts are reclaimed") {
    Instance inst = tiny_oracle_instance();
    const Reclaimer& r = inst.reclaimers[0];
    RandomEngine rng(17);

    for (int trial = 0; trial < 50; ++trial) {
        std::vector<bool> reclaimed(inst.cut_count(), false);
        auto before = inst.accessible_cuts(reclaimed, r);
        // reclaim a random feasible prefix one cut at a time
        for (size_t step = 0; step < inst.cut_count(); ++step) {
            if (before.empty()) break;
            Job taken = before[rng.index(before.size())];
            reclaimed[taken.cut] = true;
            auto after = inst.accessible_cuts(reclaimed, r);
            for (const Job& j : before) {
                if (j.cut == taken.cut) continue;
                CHECK(std::find(after.begin(), after.end(), j) != after.end());
            }
            before = std::move(after);
        }
    }
}

TEST_CASE("precedence of the 2x2 stockpile matches the hand enumeration") {
    Instance inst = tiny_oracle_instance();
    CHECK(inst.predecessors({0, Direction::Phi1}).empty());
    CHECK(inst.predecessors({1, Direction::Phi1}) == std::vector<uint32_t>{0});
    CHECK(inst.predecessors({2, Direction::Phi1}) == std::vector<uint32_t>{0});
    auto p3 = inst.predecessors({3, Direction::Phi1});
    std::sort(p3.begin(), p3.end());
    CHECK(p3 == std::vector<uint32_t>{1, 2});
}

TEST_CASE("model validation rejects inconsistent instances") {
    // duplicate coordinates
    Instance dup = tiny_oracle_instance();
    dup.cuts[1].position = 1;
    CHECK_THROWS_AS(dup.finalize(), ModelError);

    // zero quality bound is degenerate for the bracket operator
    Instance zb = tiny_oracle_instance();
    zb.deliveries[0].bounds[0].lo = 0.0;
    CHECK_THROWS_AS(zb.finalize(), ModelError);

    // lower above upper
    Instance lu = tiny_oracle_instance();
    lu.deliveries[0].bounds[0] = {2.0, 0.5};
    CHECK_THROWS_WITH_AS(lu.finalize(), doctest::Contains("delivery 1"), ModelError);

    // entry cut material must match delivery 1
    Instance em = tiny_oracle_instance();
    em.cuts[0].material = 1;
    for (auto& c : em.cuts) c.grades = {1.0};
    CHECK_THROWS_AS(em.finalize(), ModelError);
}
