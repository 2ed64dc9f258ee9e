#include "incidence/arrangement.hpp"

#include "incidence/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace incidence {

std::optional<std::pair<std::size_t, std::size_t>> find_duplicate(const std::vector<Point>& points) {
    std::unordered_map<Point, std::size_t> seen;
    seen.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto [it, inserted] = seen.emplace(points[i], i);
        if (!inserted) return std::make_pair(it->second, i);
    }
    return std::nullopt;
}

ArrangementStats build_arrangement(const Configuration& c) {
    const std::size_t n = c.size();
    if (n < 2) throw ConfigurationTooSmall("arrangement needs at least two points");
    if (const auto dup = find_duplicate(c.points)) {
        throw MalformedConfiguration("points " + std::to_string(dup->first) + " and "
                                         + std::to_string(dup->second) + " coincide",
                                     dup->first, dup->second);
    }

    // The first pair seen for a line has the line's least point as i. Only
    // pairs from that point append members, so each group is built sorted
    // and without repeats.
    std::unordered_map<Line, std::vector<std::size_t>> groups;
    groups.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            auto& members = groups[line_through(c.points[i], c.points[j])];
            if (members.empty() || members.front() == i) {
                if (members.empty()) members.push_back(i);
                members.push_back(j);
            }
        }
    }

    ArrangementStats s;
    s.n = n;
    s.degrees.assign(n, 0);
    s.lines.reserve(groups.size());
    for (auto& [line, members] : groups) {
        s.lines.push_back(DeterminedLine{line, std::move(members)});
    }
    std::sort(s.lines.begin(), s.lines.end(),
              [](const DeterminedLine& a, const DeterminedLine& b) { return a.line < b.line; });

    for (const auto& dl : s.lines) {
        ++s.histogram[dl.richness()];
        s.max_collinear = std::max(s.max_collinear, dl.richness());
        for (const std::size_t p : dl.points) ++s.degrees[p];
    }
    const auto best = std::max_element(s.degrees.begin(), s.degrees.end());
    s.max_degree = *best;
    s.witness_index = static_cast<std::size_t>(best - s.degrees.begin());
    return s;
}

bool is_noncollinear(const Configuration& c) {
    if (c.size() < 2) throw ConfigurationTooSmall("collinearity needs at least two points");
    const Point& p = c.points[0];
    // Skip copies of the first point so a genuine direction is found.
    std::size_t k = 1;
    while (k < c.size() && c.points[k] == p) ++k;
    if (k == c.size()) return false;
    const Point& q = c.points[k];
    return std::any_of(c.points.begin() + static_cast<std::ptrdiff_t>(k) + 1, c.points.end(),
                       [&](const Point& r) { return !collinear(p, q, r); });
}

IdentityReport verify_lemma1(const ArrangementStats& s) {
    IdentityReport rep{"lemma1", 0, 0, false};
    for (const auto& [r, count] : s.histogram) rep.lhs += Integer(r) * (r - 1) / 2 * count;
    rep.rhs = Integer(s.n) * (s.n - 1) / 2;
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

IdentityReport verify_lemma2(const ArrangementStats& s) {
    IdentityReport rep{"lemma2", 0, 0, false};
    for (const std::size_t d : s.degrees) rep.lhs += d;
    for (const auto& [r, count] : s.histogram) rep.rhs += Integer(r) * count;
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

}  // namespace incidence
