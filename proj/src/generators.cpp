#include "incidence/generators.hpp"

#include "incidence/errors.hpp"

#include <limits>
#include <random>
#include <unordered_set>

namespace incidence {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidSpec(message);
}

// Uniform draw from [lo, hi] by rejection on std::mt19937_64 output.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(rng());
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
                                - (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
    std::uint64_t v = rng();
    while (v > limit) v = rng();
    return lo + static_cast<std::int64_t>(v % span);
}

Configuration two_lines_parallel_config(const TwoLinesParallel& s) {
    require(s.k >= 2, "two-lines-parallel: k must be at least 2");
    require(s.second >= 1, "two-lines-parallel: second line needs at least one point");
    Configuration c;
    for (std::int64_t i = 0; i < s.k; ++i) c.points.push_back(Point::integer(i, 0));
    for (std::int64_t i = 0; i < s.second; ++i) c.points.push_back(Point::integer(i, 1));
    return c;
}

Configuration two_lines_crossing_config(const TwoLinesCrossing& s) {
    require(s.k >= 2, "two-lines-crossing: k must be at least 2");
    Configuration c;
    if (s.include_intersection) {
        c.points.push_back(Point::integer(0, 0));
        for (std::int64_t i = 1; i < s.k; ++i) c.points.push_back(Point::integer(i, 0));
        for (std::int64_t j = 1; j < s.k; ++j) c.points.push_back(Point::integer(0, j));
    } else {
        for (std::int64_t i = 1; i <= s.k; ++i) c.points.push_back(Point::integer(i, 0));
        for (std::int64_t j = 1; j <= s.k; ++j) c.points.push_back(Point::integer(0, j));
    }
    return c;
}

Configuration near_pencil_config(const NearPencil& s) {
    require(s.n >= 3, "near-pencil: n must be at least 3");
    Configuration c;
    for (std::int64_t i = 0; i + 1 < s.n; ++i) c.points.push_back(Point::integer(i, 0));
    c.points.push_back(Point::integer(0, 1));
    return c;
}

Configuration grid_config(const Grid& s) {
    require(s.width >= 2 && s.height >= 2, "grid: width and height must be at least 2");
    require(s.width <= 100000 && s.height <= 100000 && s.width * s.height <= 10000000,
            "grid: too many points");
    Configuration c;
    for (std::int64_t j = 0; j < s.height; ++j) {
        for (std::int64_t i = 0; i < s.width; ++i) c.points.push_back(Point::integer(i, j));
    }
    return c;
}

Configuration random_config(const RandomInteger& s) {
    require(s.n >= 2, "random: n must be at least 2");
    require(s.range >= 1 && s.range <= std::numeric_limits<std::int64_t>::max() / 4,
            "random: range out of bounds");
    // (2r+1)^2 must host n distinct points; compare without overflow.
    const Integer box = (2 * Integer(s.range) + 1) * (2 * Integer(s.range) + 1);
    require(box >= s.n, "random: range too small for n distinct points");

    std::mt19937_64 rng(s.seed);
    Configuration c;
    std::unordered_set<Point> seen;
    while (static_cast<std::int64_t>(c.points.size()) < s.n) {
        const std::int64_t x = draw(rng, -s.range, s.range);
        const std::int64_t y = draw(rng, -s.range, s.range);
        Point p = Point::integer(x, y);
        if (seen.insert(p).second) c.points.push_back(std::move(p));
    }
    return c;
}

}  // namespace

Configuration generate(const FamilySpec& spec) {
    Configuration c = std::visit(overloaded{
                                     [](const TwoLinesParallel& s) { return two_lines_parallel_config(s); },
                                     [](const TwoLinesCrossing& s) { return two_lines_crossing_config(s); },
                                     [](const NearPencil& s) { return near_pencil_config(s); },
                                     [](const Grid& s) { return grid_config(s); },
                                     [](const RandomInteger& s) { return random_config(s); },
                                 },
                                 spec);
    c.name = describe(spec);
    return c;
}

std::string describe(const FamilySpec& spec) {
    return std::visit(
        overloaded{
            [](const TwoLinesParallel& s) {
                std::string out = "two-lines-parallel " + std::to_string(s.k);
                if (s.second != s.k) out += " " + std::to_string(s.second);
                return out;
            },
            [](const TwoLinesCrossing& s) {
                return "two-lines-crossing " + std::to_string(s.k)
                       + (s.include_intersection ? " --include-intersection" : "");
            },
            [](const NearPencil& s) { return "near-pencil " + std::to_string(s.n); },
            [](const Grid& s) { return "grid " + std::to_string(s.width) + " " + std::to_string(s.height); },
            [](const RandomInteger& s) {
                return "random " + std::to_string(s.n) + " " + std::to_string(s.range) + " "
                       + std::to_string(s.seed);
            },
        },
        spec);
}

std::vector<Configuration> family_corpus(std::int64_t n_max) {
    std::vector<Configuration> out;
    for (std::int64_t k = 2; 2 * k <= n_max; ++k) out.push_back(generate(two_lines_parallel(k)));
    for (std::int64_t k = 3; 2 * k - 1 <= n_max; ++k) out.push_back(generate(TwoLinesParallel{k, k - 1}));
    for (std::int64_t k = 2; 2 * k - 1 <= n_max; ++k) {
        out.push_back(generate(TwoLinesCrossing{k, true}));
        if (2 * k <= n_max) out.push_back(generate(TwoLinesCrossing{k, false}));
    }
    for (std::int64_t n = 3; n <= n_max; ++n) out.push_back(generate(NearPencil{n}));
    for (std::int64_t w = 2; 2 * w <= n_max; ++w) {
        for (std::int64_t h = w; w * h <= n_max; ++h) out.push_back(generate(Grid{w, h}));
    }
    return out;
}

std::vector<Configuration> random_corpus(std::uint64_t seed, std::int64_t count, std::int64_t n_max) {
    require(n_max >= 3, "corpus: n_max must be at least 3");
    std::mt19937_64 rng(seed);
    std::vector<Configuration> out;
    out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
    for (std::int64_t i = 0; i < count; ++i) {
        const std::int64_t n = draw(rng, 3, n_max);
        std::int64_t range = 1000;
        if (i % 2 == 1) {
            std::int64_t half = 1;
            while ((2 * half - 1) * (2 * half - 1) < n) ++half;
            range = half;
        }
        for (;;) {
            Configuration c = generate(RandomInteger{n, range, rng()});
            if (is_noncollinear(c)) {
                out.push_back(std::move(c));
                break;
            }
        }
    }
    return out;
}

std::vector<Configuration> corpus(std::uint64_t seed, std::int64_t count, std::int64_t n_max) {
    require(count >= 1, "corpus: count must be at least 1");
    require(n_max >= 3, "corpus: n_max must be at least 3");
    std::vector<Configuration> families = family_corpus(n_max);
    const auto take = std::min<std::size_t>(families.size(), static_cast<std::size_t>(count / 2));
    std::vector<Configuration> out(std::make_move_iterator(families.begin()),
                                   std::make_move_iterator(families.begin() + static_cast<std::ptrdiff_t>(take)));
    for (auto& c : random_corpus(seed, count - static_cast<std::int64_t>(take), n_max)) out.push_back(std::move(c));
    return out;
}

}  // namespace incidence
