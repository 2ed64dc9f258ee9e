#pragma once

#include "incidence/arrangement.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace incidence {

// (i, 0) for i < k and (i, 1) for i < second. second == k is the balanced
// case; second = k - 1 gives the odd-n layout.
struct TwoLinesParallel {
    std::int64_t k = 0;
    std::int64_t second = 0;
};

// k points on each axis. With the intersection, the origin is shared
// (n = 2k - 1); without it, the axes carry 1..k (n = 2k).
struct TwoLinesCrossing {
    std::int64_t k = 0;
    bool include_intersection = false;
};

// (i, 0) for i < n - 1, plus the apex (0, 1).
struct NearPencil {
    std::int64_t n = 0;
};

// All (i, j) with 0 <= i < width, 0 <= j < height.
struct Grid {
    std::int64_t width = 0;
    std::int64_t height = 0;
};

// n distinct integer points with both coordinates in [-range, range].
struct RandomInteger {
    std::int64_t n = 0;
    std::int64_t range = 0;
    std::uint64_t seed = 0;
};

using FamilySpec = std::variant<TwoLinesParallel, TwoLinesCrossing, NearPencil, Grid, RandomInteger>;

/// Factory for the balanced two-line family.
inline TwoLinesParallel two_lines_parallel(std::int64_t k) { return {k, k}; }

/// Deterministic configuration for a family. Throws InvalidSpec on bad
/// parameters.
///
/// RandomInteger draws from std::mt19937_64 seeded with `seed`; each
/// coordinate takes one 64-bit draw, rejecting draws above the largest
/// multiple of (2*range + 1), and reduces it modulo that span. A point equal
/// to an earlier one is redrawn.
Configuration generate(const FamilySpec& spec);

/// CLI spelling of the spec, e.g. "grid 3 3" or "two-lines-crossing 4 --include-intersection".
std::string describe(const FamilySpec& spec);

/// Every non-random family instance with 3 <= n <= n_max, in a fixed order.
std::vector<Configuration> family_corpus(std::int64_t n_max);

/// `count` seeded non-collinear random configurations with 3 <= n <= n_max.
/// Even positions use coordinates in [-1000, 1000]; odd positions use a
/// small box so rich lines occur.
std::vector<Configuration> random_corpus(std::uint64_t seed, std::int64_t count, std::int64_t n_max);

/// `count` configurations: up to count/2 family instances followed by
/// random ones. All non-collinear with n <= n_max.
std::vector<Configuration> corpus(std::uint64_t seed, std::int64_t count, std::int64_t n_max);

}  // namespace incidence
