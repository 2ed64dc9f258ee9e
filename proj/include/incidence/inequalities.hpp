#pragma once

#include "incidence/arrangement.hpp"

#include <optional>
#include <string>
#include <vector>

namespace incidence {

/// Outcome of an inequality instantiated on one arrangement.
///
/// Both sides are stored multiplied by `scale` so every coefficient is an
/// integer: scale 4 for the Hirzebruch-type forms (coefficients 3/4, r^2/4)
/// and scale 3 for the degree-sum form (right side n(n+3)/3).
struct InequalityVerdict {
    std::string name;
    // Hypothesis on max_collinear holds.
    bool applicable = false;
    // slack_q >= 0. Computed regardless of applicability; only binding when
    // applicable.
    bool satisfied = false;
    int scale = 4;
    Integer lhs_q;
    Integer rhs_q;
    Integer slack_q;
    std::string note;
};

/// l_2 + 3/4 l_3 >= n + sum_{r>=5} (2r-9) l_r, when at most n-3 points are
/// collinear.
InequalityVerdict hirzebruch_check(const ArrangementStats& s);

/// l_2 + 3/4 l_3 >= n + sum_{r>=5} (r^2/4 - r) l_r, when at most
/// floor(2n/3) points are collinear.
InequalityVerdict bojanowski_check(const ArrangementStats& s);

/// sum_P d(P) >= n(n+3)/3, compared as 3 * sum d >= n(n+3). Applicable
/// under the same hypothesis as bojanowski_check.
InequalityVerdict degree_sum_check(const ArrangementStats& s);

/// max_degree compared with a threshold.
struct BoundEntry {
    std::string name;
    Rational threshold;
    bool met = false;
    // Established result, as opposed to the conjectural floor(n/2).
    bool proven = true;
    bool conjectural = false;
    std::optional<std::size_t> witness_index;
};

/// max_degree >= ceil(n/3) + 1. Throws HypothesisViolation on collinear
/// input.
BoundEntry main_bound_check(const ArrangementStats& s);

struct BoundsReport {
    std::size_t n = 0;
    std::size_t max_degree = 0;
    // sqrt_bound, payne_wood, pham_phi, main_bound, dirac_floor, in order.
    std::vector<BoundEntry> entries;

    const BoundEntry& entry(const std::string& name) const;
};

/// Every lower bound on max_degree. Throws HypothesisViolation on
/// collinear input.
BoundsReport bounds_report(const ArrangementStats& s);

// Threshold helpers, exposed for tests.
std::size_t ceil_sqrt(std::size_t n);
std::size_t main_bound_threshold(std::size_t n);
std::size_t bojanowski_max_collinear(std::size_t n);

}  // namespace incidence
