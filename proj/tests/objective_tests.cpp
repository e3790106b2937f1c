#include "doctest.h"

#include <vector>

#include "romsched/objective.hpp"
#include "romsched/rng.hpp"
#include "test_support.hpp"

using namespace romsched;

namespace {

// instance whose cut k grades are given directly; single delivery with the
// given bounds
Instance grades_instance(const std::vector<double>& grades, Bounds bounds) {
    Instance inst;
    inst.name = "grades";
    inst.minerals = 1;
    inst.directions = 1;
    inst.cuts_per_bench = 10;
    for (size_t i = 0; i < grades.size(); ++i) {
        Cut c;
        c.id = uint32_t(i);
        c.row = 0;
        c.stockpile = 0;
        c.bench = 1;
        c.position = int(i) + 1;
        c.material = 0;
        c.tonnage = 1000.0;
        c.reclaim_time = 10.0;
        c.grades = {grades[i]};
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
    d.tonnage = 500.0 * double(grades.size());
    d.bounds = {bounds};
    inst.deliveries.push_back(d);
    inst.finalize();
    return inst;
}

std::vector<AssemblyJob> assembly_of(size_t n, double duration = 30.0) {
    std::vector<AssemblyJob> jobs;
    for (size_t i = 0; i < n; ++i)
        jobs.push_back({uint32_t(i), 0, 100.0 * double(i + 1), duration});
    return jobs;
}

}  // namespace

TEST_CASE("bracket violation") {
    CHECK(bracket_violation(0.75, 0.5, 1.0) == 0.0);
    CHECK(bracket_violation(1.1, 0.5, 1.0) == doctest::Approx(0.1));
    CHECK(bracket_violation(0.4, 0.5, 1.0) == doctest::Approx(0.2));

    // zero inside and continuous at both bounds, growing outside
    CHECK(bracket_violation(0.5, 0.5, 1.0) == 0.0);
    CHECK(bracket_violation(1.0, 0.5, 1.0) == 0.0);
    double prev = 0.0;
    for (double step = 0.01; step < 0.5; step += 0.01) {
        double above = bracket_violation(1.0 + step, 0.5, 1.0);
        double below = bracket_violation(0.5 - step, 0.5, 1.0);
        CHECK(above > prev);
        CHECK(below > 0.0);
        prev = above;
    }
}

TEST_CASE("average quality violation") {
    // mean of {1.2, 0.8} is 1.0 against [0.5, 0.9]
    Instance inst = grades_instance({1.2, 0.8}, {0.5, 0.9});
    auto jobs = assembly_of(2);
    CHECK(average_quality_violation(inst, inst.deliveries[0], jobs) ==
          doctest::Approx((1.0 - 0.9) / 0.9));

    // exactly mid-range grades score zero
    Instance mid = grades_instance({0.7, 0.7, 0.7}, {0.5, 0.9});
    CHECK(average_quality_violation(mid, mid.deliveries[0], assembly_of(3)) == 0.0);

    // independent recomputation on a 4-cut delivery
    std::vector<double> g = {1.31, 0.77, 0.95, 1.02};
    Instance four = grades_instance(g, {0.9, 1.0});
    double mean = (g[0] + g[1] + g[2] + g[3]) / 4.0;
    double expect = mean > 1.0 ? (mean - 1.0) / 1.0 : (mean < 0.9 ? (0.9 - mean) / 0.9 : 0.0);
    CHECK(average_quality_violation(four, four.deliveries[0], assembly_of(4)) ==
          doctest::Approx(expect));

    CHECK_THROWS_AS(average_quality_violation(inst, inst.deliveries[0], {}), ModelError);
}

TEST_CASE("average quality violation is invariant, bit for bit, under reordering") {
    std::vector<double> g = {1.31, 0.77, 0.95, 1.02, 0.83, 1.17};
    Instance inst = grades_instance(g, {0.9, 1.0});
    auto jobs = assembly_of(g.size());
    double base = average_quality_violation(inst, inst.deliveries[0], jobs);
    RandomEngine rng(3);
    for (int t = 0; t < 20; ++t) {
        for (size_t i = jobs.size(); i > 1; --i)
            std::swap(jobs[i - 1], jobs[rng.index(i)]);
        CHECK(average_quality_violation(inst, inst.deliveries[0], jobs) == base);
    }
}

TEST_CASE("window quality violation") {
    // below the window start
    Instance three = grades_instance({2.0, 2.0, 2.0}, {0.5, 1.0});
    CHECK(window_quality_violation(three, three.deliveries[0], assembly_of(3)) == 0.0);

    // one window of all 2.0 against upper bound 1.0
    Instance four = grades_instance({2.0, 2.0, 2.0, 2.0}, {0.5, 1.0});
    CHECK(window_quality_violation(four, four.deliveries[0], assembly_of(4)) ==
          doctest::Approx(1.0));

    // two windows, both with mean 5/3 against [0.5, 1.5]
    Instance five = grades_instance({1.0, 1.0, 1.0, 3.0, 1.0}, {0.5, 1.5});
    CHECK(window_quality_violation(five, five.deliveries[0], assembly_of(5)) ==
          doctest::Approx(2.0 * (5.0 / 3.0 - 1.5) / 1.5));
}

TEST_CASE("window quality depends on the time order, v1 does not") {
    std::vector<double> g = {1.0, 1.0, 1.0, 3.0, 1.0};
    Instance inst = grades_instance(g, {0.5, 1.5});
    auto jobs = assembly_of(g.size());
    double v1 = average_quality_violation(inst, inst.deliveries[0], jobs);
    double v2 = window_quality_violation(inst, inst.deliveries[0], jobs);
    // move the hot cut to the front: windows change, the mean does not
    std::vector<AssemblyJob> reordered = {jobs[3], jobs[0], jobs[1], jobs[2], jobs[4]};
    CHECK(average_quality_violation(inst, inst.deliveries[0], reordered) == v1);
    CHECK(window_quality_violation(inst, inst.deliveries[0], reordered) != v2);
}

TEST_CASE("utility") {
    Instance inst = grades_instance({1.0, 1.0}, {0.5, 1.5});
    inst.cuts[0].tonnage = 1500.0;
    inst.cuts[1].tonnage = 1000.0;

    std::vector<AssemblyJob> one = {{0, 0, 30.0, 30.0}};
    CHECK(utility(inst, one) == doctest::Approx(0.02));

    CHECK(utility(inst, {}) == 0.0);

    std::vector<AssemblyJob> two = {{0, 0, 30.0, 30.0}, {1, 0, 45.0, 15.0}};
    CHECK(utility(inst, two) == doctest::Approx(0.035));
}

TEST_CASE("lexicographic comparison") {
    ObjectiveValue x{0.01, 0.0, 35.0};
    ObjectiveValue z{0.0, 0.01, 15.0};
    ObjectiveValue w{0.0, 0.0, 45.0};
    CHECK(lex_less(w, z));
    CHECK(lex_less(z, x));
    CHECK(lex_less(w, x));

    CHECK(lexicographic_compare({0, 0, 10}, {0, 0, 10}) == 0);
    CHECK(lex_less({0, 4, 100}, {0, 5, 1}));

    // optional tolerance knob: within eps components compare equal
    CHECK(lexicographic_compare({0.001, 0, 10}, {0.0, 0, 10}, 0.01) == 0);
    CHECK(lexicographic_compare({0.001, 0, 10}, {0.0, 0, 20}, 0.01) < 0);
}

TEST_CASE("lexicographic comparison is a total order") {
    RandomEngine rng(11);
    auto rnd = [&]() -> ObjectiveValue {
        auto pick = [&]() { return rng.index(3) == 0 ? 0.0 : rng.uniform(0.0, 2.0); };
        return {pick(), pick(), pick()};
    };
    for (int t = 0; t < 2000; ++t) {
        ObjectiveValue a = rnd(), b = rnd(), c = rnd();
        // antisymmetry
        CHECK(lexicographic_compare(a, b) == -lexicographic_compare(b, a));
        // transitivity
        if (lexicographic_compare(a, b) <= 0 && lexicographic_compare(b, c) <= 0)
            CHECK(lexicographic_compare(a, c) <= 0);
        // reflexivity
        CHECK(lexicographic_compare(a, a) == 0);
    }
}
