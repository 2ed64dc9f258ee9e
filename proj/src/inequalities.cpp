#include "incidence/inequalities.hpp"

#include "incidence/errors.hpp"

#include <stdexcept>

namespace incidence {
namespace {

Integer quarter_lhs(const ArrangementStats& s) {
    return Integer(4) * s.rich_lines(2) + Integer(3) * s.rich_lines(3);
}

void close_verdict(InequalityVerdict& v) {
    v.slack_q = v.lhs_q - v.rhs_q;
    v.satisfied = v.slack_q.sign() >= 0;
}

void require_noncollinear(const ArrangementStats& s) {
    if (s.collinear()) throw HypothesisViolation("configuration is collinear");
}

}  // namespace

std::size_t ceil_sqrt(std::size_t n) {
    std::size_t r = 0;
    while (r * r < n) ++r;
    return r;
}

std::size_t main_bound_threshold(std::size_t n) { return (n + 2) / 3 + 1; }

std::size_t bojanowski_max_collinear(std::size_t n) { return 2 * n / 3; }

InequalityVerdict hirzebruch_check(const ArrangementStats& s) {
    InequalityVerdict v;
    v.name = "hirzebruch";
    v.applicable = s.n >= 3 && s.max_collinear <= s.n - 3;
    v.lhs_q = quarter_lhs(s);
    v.rhs_q = Integer(4) * s.n;
    for (const auto& [r, count] : s.histogram) {
        if (r < 5) continue;
        v.rhs_q += Integer(4) * (2 * Integer(r) - 9) * count;
    }
    close_verdict(v);
    return v;
}

InequalityVerdict bojanowski_check(const ArrangementStats& s) {
    InequalityVerdict v;
    v.name = "bojanowski";
    v.applicable = s.max_collinear <= bojanowski_max_collinear(s.n);
    v.lhs_q = quarter_lhs(s);
    v.rhs_q = Integer(4) * s.n;
    for (const auto& [r, count] : s.histogram) {
        if (r < 5) continue;
        const Integer rr(r);
        v.rhs_q += (rr * rr - 4 * rr) * count;
    }
    close_verdict(v);
    return v;
}

InequalityVerdict degree_sum_check(const ArrangementStats& s) {
    InequalityVerdict v;
    v.name = "degree_sum";
    v.scale = 3;
    v.applicable = s.max_collinear <= bojanowski_max_collinear(s.n);
    Integer degree_sum = 0;
    for (const std::size_t d : s.degrees) degree_sum += d;
    v.lhs_q = 3 * degree_sum;
    v.rhs_q = Integer(s.n) * (s.n + 3);
    close_verdict(v);
    if (s.max_collinear <= (s.n + 2) / 3) v.note = "at most ceil(n/3) collinear";
    return v;
}

BoundEntry main_bound_check(const ArrangementStats& s) {
    require_noncollinear(s);
    BoundEntry e;
    e.name = "main_bound";
    e.threshold = Rational(main_bound_threshold(s.n));
    e.met = Rational(s.max_degree) >= e.threshold;
    e.witness_index = s.witness_index;
    return e;
}

const BoundEntry& BoundsReport::entry(const std::string& name) const {
    for (const auto& e : entries) {
        if (e.name == name) return e;
    }
    throw std::out_of_range("no bound named " + name);
}

BoundsReport bounds_report(const ArrangementStats& s) {
    require_noncollinear(s);
    BoundsReport rep;
    rep.n = s.n;
    rep.max_degree = s.max_degree;
    const Rational degree(s.max_degree);
    const Integer n(s.n);

    auto add = [&](std::string name, Rational threshold) -> BoundEntry& {
        BoundEntry e;
        e.name = std::move(name);
        e.met = degree >= threshold;
        e.threshold = std::move(threshold);
        return rep.entries.emplace_back(std::move(e));
    };
    // An integer degree is >= sqrt(n) exactly when it is >= ceil(sqrt(n)).
    add("sqrt_bound", Rational(ceil_sqrt(s.n)));
    add("payne_wood", Rational(n, 37));
    add("pham_phi", Rational(n, 26) + 2);
    add("main_bound", Rational(main_bound_threshold(s.n))).witness_index = s.witness_index;
    auto& dirac = add("dirac_floor", Rational(s.n / 2));
    dirac.proven = false;
    dirac.conjectural = true;
    return rep;
}

}  // namespace incidence
