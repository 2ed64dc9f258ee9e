#pragma once

// Searches over n-subsets of the g x g integer grid for configurations with
// small maximum degree. Grid cell (x, y) has index y * g + x; subsets are
// sorted index lists and witnesses are reported in the canonical form under
// the 8 symmetries of the square.

#include "incidence/arrangement.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace incidence {

enum class SearchMode { exhaustive, hill_climb };

std::string to_string(SearchMode mode);

struct SearchSpec {
    int n = 3;
    int grid = 2;
    SearchMode mode = SearchMode::exhaustive;
    // Configurations examined per hill_climb run.
    std::uint64_t budget = 100000;
    std::uint64_t seed = 0;
    std::size_t witness_cap = 32;
    // Exhaustive searches above this many subsets are refused.
    std::uint64_t hard_cap = 10'000'000;
    // 0 picks default_worker_count().
    unsigned threads = 0;
    // Re-analyze both members of every symmetry merge through
    // build_arrangement and throw std::logic_error if their maximum degrees
    // differ. Slow; meant for tests.
    bool verify_merges = false;
};

struct GridCell {
    int x = 0;
    int y = 0;
    friend bool operator==(const GridCell&, const GridCell&) = default;
};

using Witness = std::vector<GridCell>;

struct SearchResult {
    int n = 0;
    int grid = 0;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;

    std::size_t best_max_degree = 0;
    // Lexicographically smallest canonical forms attaining the optimum,
    // at most witness_cap of them.
    std::vector<Witness> witnesses;
    std::uint64_t examined = 0;
    std::uint64_t collinear_skipped = 0;
    // Exhaustive: number of subsets attaining the optimum.
    // Hill climb: number of distinct symmetry classes seen at the optimum.
    std::uint64_t optimal_count = 0;
    std::size_t witness_cap = 0;
    std::size_t theorem_floor = 0;
    std::size_t dirac_floor = 0;

    friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Workers used when SearchSpec::threads is 0: hardware concurrency,
/// capped by INCIDENCE_LAB_THREADS when that is a positive integer.
unsigned default_worker_count();

/// C(g^2, n) as a decimal string.
std::string search_space_size(int n, int grid);

/// Throws InvalidSpec for bad parameters and SearchTooLarge when an
/// exhaustive search exceeds hard_cap. The result does not depend on the
/// number of workers.
SearchResult run_search(const SearchSpec& spec);

Configuration to_configuration(const Witness& w);

struct ProbeRow {
    int n = 0;
    bool refused = false;
    // Subset count when refused.
    std::string estimate;
    std::size_t min_max_degree = 0;
    std::size_t dirac_floor = 0;
    bool dirac_met = false;
    std::size_t theorem_floor = 0;
    std::uint64_t examined = 0;
};

struct ProbeTable {
    int grid = 0;
    std::string label = "grid-restricted evidence";
    std::vector<ProbeRow> rows;
};

/// Exhaustive minimum of the maximum degree for each 3 <= n <= n_max on the
/// g x g grid, compared with floor(n/2). Sizes that are infeasible are
/// refused row by row.
ProbeTable dirac_smalln_probe(int n_max, int grid, std::uint64_t hard_cap = 10'000'000,
                              unsigned threads = 0);

}  // namespace incidence
