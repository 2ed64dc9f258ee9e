#include "test_support.hpp"

#include "incidence/errors.hpp"
#include "incidence/generators.hpp"
#include "incidence/inequalities.hpp"

#include <doctest.h>

using namespace incidence;
using test_support::points;

namespace {

const ArrangementStats& grid3() {
    static const ArrangementStats s = build_arrangement(test_support::grid(3, 3));
    return s;
}

ArrangementStats near_pencil(int n) { return build_arrangement(generate(NearPencil{n})); }

ArrangementStats triangle() { return build_arrangement(points({{0, 0}, {1, 0}, {0, 1}})); }

}  // namespace

TEST_CASE("hirzebruch_check") {
    const auto g = hirzebruch_check(grid3());
    CHECK(g.applicable);
    CHECK(g.lhs_q == 72);
    CHECK(g.rhs_q == 36);
    CHECK(g.slack_q == 36);
    CHECK(g.satisfied);
    CHECK(g.scale == 4);

    CHECK_FALSE(hirzebruch_check(near_pencil(5)).applicable);
    CHECK_FALSE(hirzebruch_check(triangle()).applicable);
}

TEST_CASE("hirzebruch_check counts r >= 5 terms") {
    // 5x5 grid: l_5 = 12 (rows, columns, two diagonals).
    const auto s = build_arrangement(test_support::grid(5, 5));
    REQUIRE(s.rich_lines(5) == 12);
    const auto v = hirzebruch_check(s);
    CHECK(v.rhs_q == 4 * 25 + 4 * (2 * 5 - 9) * 12);
    CHECK(v.lhs_q == 4 * s.rich_lines(2) + 3 * s.rich_lines(3));
    CHECK(v.applicable);
    CHECK(v.satisfied);
}

TEST_CASE("bojanowski_check") {
    const auto g = bojanowski_check(grid3());
    CHECK(g.applicable);
    CHECK(g.lhs_q == 72);
    CHECK(g.rhs_q == 36);
    CHECK(g.satisfied);

    CHECK_FALSE(bojanowski_check(near_pencil(6)).applicable);

    const auto parallel = bojanowski_check(build_arrangement(generate(two_lines_parallel(3))));
    CHECK(parallel.applicable);
    CHECK(parallel.lhs_q == 42);
    CHECK(parallel.rhs_q == 24);
    CHECK(parallel.satisfied);

    const auto five = bojanowski_check(build_arrangement(test_support::grid(5, 5)));
    CHECK(five.rhs_q == 4 * 25 + (25 - 20) * 12);
}

TEST_CASE("degree_sum_check") {
    const auto t = degree_sum_check(triangle());
    CHECK(t.applicable);
    CHECK(t.scale == 3);
    CHECK(t.lhs_q == 18);
    CHECK(t.rhs_q == 18);
    CHECK(t.slack_q == 0);
    CHECK(t.satisfied);

    const auto g = degree_sum_check(grid3());
    CHECK(g.lhs_q == 144);
    CHECK(g.rhs_q == 108);
    CHECK(g.satisfied);
    // max_collinear 3 <= ceil(9/3): the stricter hypothesis holds too.
    CHECK_FALSE(g.note.empty());

    CHECK_FALSE(degree_sum_check(near_pencil(6)).applicable);
    CHECK(degree_sum_check(build_arrangement(generate(two_lines_parallel(3)))).note.empty());
}

TEST_CASE("main_bound_check") {
    const auto t = main_bound_check(triangle());
    CHECK(t.met);
    CHECK(t.threshold == 2);

    const auto g = main_bound_check(grid3());
    CHECK(g.met);
    CHECK(g.threshold == 4);
    CHECK(g.witness_index == std::optional<std::size_t>{1});

    const auto p = main_bound_check(near_pencil(5));
    CHECK(p.met);
    CHECK(p.threshold == 3);
    CHECK(p.witness_index == std::optional<std::size_t>{4});

    CHECK_THROWS_AS(main_bound_check(build_arrangement(points({{0, 0}, {1, 1}, {2, 2}}))), HypothesisViolation);
}

TEST_CASE("bounds_report") {
    const auto parallel = bounds_report(build_arrangement(generate(two_lines_parallel(3))));
    CHECK(parallel.max_degree == 4);
    CHECK(parallel.entry("sqrt_bound").threshold == 3);
    CHECK(parallel.entry("sqrt_bound").met);
    CHECK(parallel.entry("main_bound").threshold == 3);
    CHECK(parallel.entry("main_bound").met);
    CHECK(parallel.entry("dirac_floor").threshold == 3);
    CHECK(parallel.entry("dirac_floor").met);

    const auto tri = bounds_report(triangle());
    CHECK(tri.entry("sqrt_bound").threshold == 2);
    CHECK(tri.entry("sqrt_bound").met);
    CHECK(tri.entry("dirac_floor").threshold == 1);
    CHECK(tri.entry("dirac_floor").met);
    // n/26 + 2 exceeds 2 at n = 3; the entry is reported, not enforced.
    CHECK(tri.entry("pham_phi").threshold == Rational(55, 26));
    CHECK_FALSE(tri.entry("pham_phi").met);

    const auto g = bounds_report(grid3());
    REQUIRE(g.entries.size() == 5);
    for (const auto& e : g.entries) CHECK(e.met);
    CHECK(g.entry("payne_wood").threshold == Rational(9, 37));
    CHECK(g.entry("pham_phi").threshold == Rational(9, 26) + 2);
    CHECK(g.entry("dirac_floor").conjectural);
    CHECK_FALSE(g.entry("dirac_floor").proven);
    CHECK_FALSE(g.entry("main_bound").conjectural);
    CHECK_THROWS_AS(g.entry("nope"), std::out_of_range);

    CHECK_THROWS_AS(bounds_report(build_arrangement(points({{0, 0}, {1, 1}}))), HypothesisViolation);
}

TEST_CASE("threshold helpers") {
    CHECK(ceil_sqrt(1) == 1);
    CHECK(ceil_sqrt(3) == 2);
    CHECK(ceil_sqrt(4) == 2);
    CHECK(ceil_sqrt(5) == 3);
    CHECK(main_bound_threshold(3) == 2);
    CHECK(main_bound_threshold(4) == 3);
    CHECK(main_bound_threshold(6) == 3);
    CHECK(main_bound_threshold(7) == 4);
    CHECK(bojanowski_max_collinear(6) == 4);
    CHECK(bojanowski_max_collinear(5) == 3);
}

TEST_CASE("corpus properties of the verdicts") {
    for (const auto& c : corpus(11, 300, 30)) {
        const auto s = build_arrangement(c);
        const auto h = hirzebruch_check(s);
        const auto b = bojanowski_check(s);
        const auto d = degree_sum_check(s);
        if (h.applicable) REQUIRE(h.satisfied);
        if (b.applicable) {
            REQUIRE(b.satisfied);
            REQUIRE(d.satisfied);
        }
        REQUIRE(d.applicable == b.applicable);
        REQUIRE(h.satisfied == (h.slack_q.sign() >= 0));

        // Same sides, summed point by point / line by line.
        Integer lhs = 0, rhs_h = 4 * Integer(s.n), rhs_b = 4 * Integer(s.n);
        for (const auto& dl : s.lines) {
            const Integer r(dl.richness());
            if (r == 2) lhs += 4;
            if (r == 3) lhs += 3;
            if (r >= 5) {
                rhs_h += 4 * (2 * r - 9);
                rhs_b += r * r - 4 * r;
            }
        }
        REQUIRE(lhs == h.lhs_q);
        REQUIRE(lhs == b.lhs_q);
        REQUIRE(rhs_h == h.rhs_q);
        REQUIRE(rhs_b == b.rhs_q);

        const auto m = main_bound_check(s);
        REQUIRE(m.met);
        std::size_t degree_sum = 0;
        for (const auto x : s.degrees) degree_sum += x;
        REQUIRE(s.max_degree >= (degree_sum + s.n - 1) / s.n);

        if (s.n >= 4) {
            const auto rep = bounds_report(s);
            if (rep.entry("main_bound").met) REQUIRE(rep.entry("pham_phi").met);
            if (rep.entry("pham_phi").met) REQUIRE(rep.entry("payne_wood").met);
            REQUIRE(rep.entry("sqrt_bound").met);
        }
    }
}
