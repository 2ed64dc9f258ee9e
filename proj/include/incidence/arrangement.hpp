#pragma once

#include "incidence/geometry.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace incidence {

/// An ordered list of planar points. Distinctness is checked by
/// build_arrangement, not on construction.
struct Configuration {
    std::vector<Point> points;
    std::optional<std::string> name;

    std::size_t size() const noexcept { return points.size(); }
};

/// A determined line with the (sorted) indices of the points it carries.
struct DeterminedLine {
    Line line;
    std::vector<std::size_t> points;

    std::size_t richness() const noexcept { return points.size(); }
    friend bool operator==(const DeterminedLine&, const DeterminedLine&) = default;
};

/// Everything the counting lemmas and the bounds consume.
struct ArrangementStats {
    std::size_t n = 0;
    // Ordered by canonical (a, b, c).
    std::vector<DeterminedLine> lines;
    // r -> number of lines with exactly r points; only r with l_r > 0.
    std::map<std::size_t, std::size_t> histogram;
    // degrees[i] = number of determined lines through point i.
    std::vector<std::size_t> degrees;
    std::size_t max_collinear = 0;
    std::size_t max_degree = 0;
    // Least index attaining max_degree.
    std::size_t witness_index = 0;

    std::size_t rich_lines(std::size_t r) const {
        const auto it = histogram.find(r);
        return it == histogram.end() ? 0 : it->second;
    }
    bool collinear() const noexcept { return max_collinear == n; }

    friend bool operator==(const ArrangementStats&, const ArrangementStats&) = default;
};

/// Enumerates all pairs and groups them by canonical line.
///
/// Throws ConfigurationTooSmall for n < 2 and MalformedConfiguration when
/// two points coincide.
ArrangementStats build_arrangement(const Configuration& c);

/// First pair of equal points (i < j), if any.
std::optional<std::pair<std::size_t, std::size_t>> find_duplicate(const std::vector<Point>& points);

/// True iff the points do not all lie on one line. Requires n >= 2.
bool is_noncollinear(const Configuration& c);

struct IdentityReport {
    std::string name;
    Integer lhs;
    Integer rhs;
    bool equal = false;
};

/// Pair double count: sum_r C(r,2) l_r against C(n,2).
IdentityReport verify_lemma1(const ArrangementStats& s);

/// Incidence double count: sum_P d(P) against sum_r r l_r.
IdentityReport verify_lemma2(const ArrangementStats& s);

}  // namespace incidence
