#pragma once

#include "incidence/arrangement.hpp"

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace test_support {

inline incidence::Configuration points(std::initializer_list<std::pair<int, int>> xy) {
    incidence::Configuration c;
    for (const auto& [x, y] : xy) c.points.push_back(incidence::Point::integer(x, y));
    return c;
}

inline incidence::Configuration grid(int w, int h) {
    incidence::Configuration c;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) c.points.push_back(incidence::Point::integer(x, y));
    }
    return c;
}

// The n-point random configurations used by the identity properties:
// coordinates in [-range, range], duplicates dropped.
inline incidence::Configuration random_points(std::mt19937_64& rng, int n, int range) {
    std::uniform_int_distribution<int> coord(-range, range);
    incidence::Configuration c;
    std::unordered_set<incidence::Point> seen;
    for (int i = 0; i < n; ++i) {
        auto p = incidence::Point::integer(coord(rng), coord(rng));
        if (seen.insert(p).second) c.points.push_back(std::move(p));
    }
    return c;
}

// All k-subsets of {0..m-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
    std::vector<std::size_t> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    for (;;) {
        f(s);
        std::size_t i = k;
        while (i > 0 && s[i - 1] == m - k + i - 1) --i;
        if (i == 0) return;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() / ("incidence_test_" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

}  // namespace test_support
