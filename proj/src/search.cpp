#include "incidence/search.hpp"

#include "incidence/errors.hpp"
#include "incidence/inequalities.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <random>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace incidence {
namespace {

using Subset = std::vector<std::uint16_t>;

constexpr int kMaxGrid = 32;
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

Integer binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Saturating Pascal table, C(a, b) for a <= rows, b <= cols.
class BinomialTable {
public:
    BinomialTable(std::size_t rows, std::size_t cols) : cols_(cols + 1), data_((rows + 1) * (cols + 1), 0) {
        for (std::size_t a = 0; a <= rows; ++a) {
            at(a, 0) = 1;
            for (std::size_t b = 1; b <= std::min(a, cols); ++b) {
                const std::uint64_t x = at(a - 1, b - 1);
                const std::uint64_t y = b <= a - 1 ? at(a - 1, b) : 0;
                at(a, b) = x > kSaturated - y ? kSaturated : x + y;
            }
        }
    }
    std::uint64_t operator()(std::size_t a, std::size_t b) const { return b >= cols_ ? 0 : data_[a * cols_ + b]; }

private:
    std::uint64_t& at(std::size_t a, std::size_t b) { return data_[a * cols_ + b]; }
    std::size_t cols_;
    std::vector<std::uint64_t> data_;
};

// Line ids for every ordered pair of grid cells, plus the symmetry images of
// every cell. Lines are identified through the exact canonical Line.
class GridTables {
public:
    explicit GridTables(int g) : g_(g), cells_(static_cast<std::size_t>(g) * g) {
        std::vector<Point> pts;
        pts.reserve(cells_);
        for (std::size_t i = 0; i < cells_; ++i) pts.push_back(Point::integer(x_of(i), y_of(i)));

        std::unordered_map<Line, std::uint32_t> ids;
        line_id_.assign(cells_ * cells_, 0);
        for (std::size_t i = 0; i < cells_; ++i) {
            for (std::size_t j = i + 1; j < cells_; ++j) {
                const auto [it, fresh] = ids.emplace(line_through(pts[i], pts[j]),
                                                     static_cast<std::uint32_t>(ids.size()));
                line_id_[i * cells_ + j] = it->second;
                line_id_[j * cells_ + i] = it->second;
            }
        }
        line_count_ = ids.size();

        const int m = g - 1;
        for (int s = 0; s < 8; ++s) {
            auto& perm = symmetry_[static_cast<std::size_t>(s)];
            perm.resize(cells_);
            for (std::size_t i = 0; i < cells_; ++i) {
                const int x = x_of(i);
                const int y = y_of(i);
                int u = x, v = y;
                switch (s) {
                    case 0: u = x; v = y; break;
                    case 1: u = m - y; v = x; break;
                    case 2: u = m - x; v = m - y; break;
                    case 3: u = y; v = m - x; break;
                    case 4: u = m - x; v = y; break;
                    case 5: u = x; v = m - y; break;
                    case 6: u = y; v = x; break;
                    default: u = m - y; v = m - x; break;
                }
                perm[i] = static_cast<std::uint16_t>(v * g + u);
            }
        }
    }

    std::size_t cells() const noexcept { return cells_; }
    std::size_t line_count() const noexcept { return line_count_; }
    int x_of(std::size_t i) const noexcept { return static_cast<int>(i % static_cast<std::size_t>(g_)); }
    int y_of(std::size_t i) const noexcept { return static_cast<int>(i / static_cast<std::size_t>(g_)); }
    std::uint32_t line(std::size_t i, std::size_t j) const noexcept { return line_id_[i * cells_ + j]; }

    Subset canonical(const Subset& s) const {
        Subset best;
        Subset image(s.size());
        for (const auto& perm : symmetry_) {
            std::transform(s.begin(), s.end(), image.begin(), [&](std::uint16_t c) { return perm[c]; });
            std::sort(image.begin(), image.end());
            if (best.empty() || image < best) best = image;
        }
        return best;
    }

    Witness witness(const Subset& s) const {
        Witness w;
        w.reserve(s.size());
        for (const auto c : s) w.push_back(GridCell{x_of(c), y_of(c)});
        return w;
    }

private:
    int g_;
    std::size_t cells_;
    std::size_t line_count_ = 0;
    std::vector<std::uint32_t> line_id_;
    std::array<std::vector<std::uint16_t>, 8> symmetry_;
};

// Degree evaluation for one subset; not shareable across threads.
class Evaluator {
public:
    explicit Evaluator(const GridTables& t) : tables_(t), stamp_(t.line_count(), 0) {}

    bool collinear(const Subset& s) const {
        const std::uint32_t first = tables_.line(s[0], s[1]);
        for (std::size_t k = 2; k < s.size(); ++k) {
            if (tables_.line(s[0], s[k]) != first) return false;
        }
        return true;
    }

    // Max degree and degree sum.
    std::pair<std::size_t, std::size_t> degrees(const Subset& s) {
        std::size_t best = 0, total = 0;
        for (const auto p : s) {
            if (++epoch_ == 0) {
                std::fill(stamp_.begin(), stamp_.end(), 0);
                epoch_ = 1;
            }
            std::size_t d = 0;
            for (const auto q : s) {
                if (q == p) continue;
                const std::uint32_t id = tables_.line(p, q);
                if (stamp_[id] != epoch_) {
                    stamp_[id] = epoch_;
                    ++d;
                }
            }
            best = std::max(best, d);
            total += d;
        }
        return {best, total};
    }

private:
    const GridTables& tables_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
};

struct Partial {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::uint64_t optimal = 0;
    std::uint64_t skipped = 0;
    std::uint64_t examined = 0;
    std::set<Subset> classes;

    void offer(const Subset& canonical, std::size_t cap) {
        classes.insert(canonical);
        if (classes.size() > cap) classes.erase(std::prev(classes.end()));
    }

    void merge(Partial&& other, std::size_t cap) {
        examined += other.examined;
        skipped += other.skipped;
        if (other.best < best) {
            best = other.best;
            optimal = other.optimal;
            classes = std::move(other.classes);
        } else if (other.best == best) {
            optimal += other.optimal;
            for (auto& c : other.classes) offer(c, cap);
        }
    }
};

Configuration configuration_of(const GridTables& t, const Subset& s) {
    Configuration c;
    for (const auto i : s) c.points.push_back(Point::integer(t.x_of(i), t.y_of(i)));
    return c;
}

void check_merge(const GridTables& t, const Subset& subset, const Subset& canonical) {
    if (subset == canonical) return;
    const auto a = build_arrangement(configuration_of(t, subset));
    const auto b = build_arrangement(configuration_of(t, canonical));
    if (a.max_degree != b.max_degree) throw std::logic_error("symmetry merge changed the maximum degree");
}

// Lexicographic unranking in the combinatorial number system.
Subset unrank(std::uint64_t rank, std::size_t cells, std::size_t n, const BinomialTable& binom) {
    Subset s(n);
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (;; ++c) {
            const std::uint64_t below = binom(cells - 1 - c, n - 1 - i);
            if (rank < below) break;
            rank -= below;
        }
        s[i] = static_cast<std::uint16_t>(c++);
    }
    return s;
}

bool next_combination(Subset& s, std::size_t cells) {
    const std::size_t n = s.size();
    std::size_t i = n;
    while (i > 0 && s[i - 1] == cells - n + i - 1) --i;
    if (i == 0) return false;
    ++s[i - 1];
    for (std::size_t k = i; k < n; ++k) s[k] = static_cast<std::uint16_t>(s[k - 1] + 1);
    return true;
}

void validate(const SearchSpec& spec) {
    if (spec.n < 3) throw InvalidSpec("search: n must be at least 3");
    if (spec.grid < 2) throw InvalidSpec("search: grid must be at least 2");
    if (spec.grid > kMaxGrid) throw InvalidSpec("search: grid must be at most " + std::to_string(kMaxGrid));
    if (spec.n > spec.grid * spec.grid) throw InvalidSpec("search: n exceeds the number of grid points");
    if (spec.witness_cap == 0) throw InvalidSpec("search: witness cap must be positive");
    if (spec.mode == SearchMode::hill_climb && spec.budget == 0) throw InvalidSpec("search: budget must be positive");
}

void fill_result(SearchResult& r, const SearchSpec& spec, const GridTables& t, const Partial& p) {
    r.n = spec.n;
    r.grid = spec.grid;
    r.mode = spec.mode;
    r.budget = spec.mode == SearchMode::hill_climb ? spec.budget : 0;
    r.seed = spec.mode == SearchMode::hill_climb ? spec.seed : 0;
    r.best_max_degree = p.best;
    r.examined = p.examined;
    r.collinear_skipped = p.skipped;
    r.optimal_count = p.optimal;
    r.witness_cap = spec.witness_cap;
    r.theorem_floor = main_bound_threshold(static_cast<std::size_t>(spec.n));
    r.dirac_floor = static_cast<std::size_t>(spec.n) / 2;
    for (const auto& c : p.classes) r.witnesses.push_back(t.witness(c));
}

SearchResult exhaustive(const SearchSpec& spec) {
    const std::size_t n = static_cast<std::size_t>(spec.n);
    const GridTables tables(spec.grid);
    const std::size_t cells = tables.cells();
    const BinomialTable binom(cells, n);
    const std::uint64_t total = binom(cells, n);

    // The partition depends only on the total, so the merge order is fixed.
    const std::uint64_t chunks = std::min<std::uint64_t>(total, 256);
    const std::uint64_t per_chunk = (total + chunks - 1) / chunks;
    std::vector<Partial> partials(chunks);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        Evaluator eval(tables);
        for (;;) {
            const std::uint64_t chunk = next.fetch_add(1);
            if (chunk >= chunks) return;
            const std::uint64_t lo = chunk * per_chunk;
            const std::uint64_t hi = std::min(total, lo + per_chunk);
            Partial& part = partials[chunk];
            if (lo >= hi) continue;
            try {
                Subset s = unrank(lo, cells, n, binom);
                for (std::uint64_t rank = lo; rank < hi; ++rank) {
                    ++part.examined;
                    if (eval.collinear(s)) {
                        ++part.skipped;
                    } else {
                        const std::size_t degree = eval.degrees(s).first;
                        if (degree < part.best) {
                            part.best = degree;
                            part.optimal = 0;
                            part.classes.clear();
                        }
                        if (degree == part.best) {
                            ++part.optimal;
                            const Subset canon = tables.canonical(s);
                            if (spec.verify_merges) check_merge(tables, s, canon);
                            part.offer(canon, spec.witness_cap);
                        }
                    }
                    if (rank + 1 < hi) next_combination(s, cells);
                }
            } catch (...) {
                const std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(chunks);
                return;
            }
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(spec.threads == 0 ? default_worker_count() : spec.threads,
                                                             static_cast<unsigned>(chunks)));
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);

    Partial merged;
    for (auto& p : partials) merged.merge(std::move(p), spec.witness_cap);

    SearchResult r;
    fill_result(r, spec, tables, merged);
    return r;
}

SearchResult hill_climb(const SearchSpec& spec) {
    const std::size_t n = static_cast<std::size_t>(spec.n);
    const GridTables tables(spec.grid);
    const std::size_t cells = tables.cells();
    Evaluator eval(tables);
    std::mt19937_64 rng(spec.seed);
    auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

    Partial best;
    std::set<Subset> seen_at_best;
    auto record = [&](const Subset& s, std::size_t degree) {
        if (degree < best.best) {
            best.best = degree;
            seen_at_best.clear();
            best.classes.clear();
        }
        if (degree == best.best) {
            Subset sorted = s;
            std::sort(sorted.begin(), sorted.end());
            const Subset canon = tables.canonical(sorted);
            if (spec.verify_merges) check_merge(tables, sorted, canon);
            if (seen_at_best.insert(canon).second) best.offer(canon, spec.witness_cap);
        }
    };

    const std::uint64_t stall_limit = 50 * static_cast<std::uint64_t>(n);
    std::vector<char> member(cells, 0);
    while (best.examined < spec.budget) {
        // Random restart.
        Subset current;
        std::fill(member.begin(), member.end(), 0);
        while (current.size() < n) {
            const std::size_t c = pick(cells);
            if (!member[c]) {
                member[c] = 1;
                current.push_back(static_cast<std::uint16_t>(c));
            }
        }
        ++best.examined;
        if (eval.collinear(current)) {
            ++best.skipped;
            continue;
        }
        auto score = eval.degrees(current);
        record(current, score.first);

        std::uint64_t stall = 0;
        while (best.examined < spec.budget && stall < stall_limit) {
            const std::size_t slot = pick(n);
            std::size_t replacement = pick(cells);
            while (member[replacement]) replacement = pick(cells);
            Subset candidate = current;
            candidate[slot] = static_cast<std::uint16_t>(replacement);
            ++best.examined;
            if (eval.collinear(candidate)) {
                ++best.skipped;
                ++stall;
                continue;
            }
            const auto cand_score = eval.degrees(candidate);
            record(candidate, cand_score.first);
            if (cand_score <= score) {
                stall = cand_score < score ? 0 : stall + 1;
                member[current[slot]] = 0;
                member[replacement] = 1;
                current = std::move(candidate);
                score = cand_score;
            } else {
                ++stall;
            }
        }
    }
    if (best.classes.empty()) throw std::runtime_error("hill climb found no non-collinear configuration within budget");
    best.optimal = seen_at_best.size();

    SearchResult r;
    fill_result(r, spec, tables, best);
    return r;
}

}  // namespace

std::string to_string(SearchMode mode) { return mode == SearchMode::exhaustive ? "exhaustive" : "hill_climb"; }

unsigned default_worker_count() {
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("INCIDENCE_LAB_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap > 0) workers = std::min<unsigned>(workers, static_cast<unsigned>(cap));
    }
    return workers;
}

std::string search_space_size(int n, int grid) {
    const auto cells = static_cast<std::uint64_t>(grid) * static_cast<std::uint64_t>(grid);
    return binomial(cells, static_cast<std::uint64_t>(n)).str();
}

SearchResult run_search(const SearchSpec& spec) {
    validate(spec);
    if (spec.mode == SearchMode::exhaustive) {
        const auto cells = static_cast<std::uint64_t>(spec.grid) * static_cast<std::uint64_t>(spec.grid);
        const Integer size = binomial(cells, static_cast<std::uint64_t>(spec.n));
        if (size > spec.hard_cap) {
            throw SearchTooLarge("exhaustive search over " + size.str() + " subsets exceeds the cap of "
                                     + std::to_string(spec.hard_cap),
                                 size.str());
        }
        return exhaustive(spec);
    }
    return hill_climb(spec);
}

Configuration to_configuration(const Witness& w) {
    Configuration c;
    for (const auto& cell : w) c.points.push_back(Point::integer(cell.x, cell.y));
    return c;
}

ProbeTable dirac_smalln_probe(int n_max, int grid, std::uint64_t hard_cap, unsigned threads) {
    if (n_max < 3) throw InvalidSpec("probe: n_max must be at least 3");
    if (grid < 2 || grid > kMaxGrid) throw InvalidSpec("probe: grid out of range");
    ProbeTable table;
    table.grid = grid;
    for (int n = 3; n <= n_max; ++n) {
        ProbeRow row;
        row.n = n;
        row.dirac_floor = static_cast<std::size_t>(n) / 2;
        row.theorem_floor = main_bound_threshold(static_cast<std::size_t>(n));
        if (n > grid * grid) {
            row.refused = true;
            row.estimate = "0";
            table.rows.push_back(row);
            continue;
        }
        SearchSpec spec;
        spec.n = n;
        spec.grid = grid;
        spec.hard_cap = hard_cap;
        spec.threads = threads;
        spec.witness_cap = 1;
        try {
            const SearchResult r = run_search(spec);
            row.min_max_degree = r.best_max_degree;
            row.dirac_met = r.best_max_degree >= row.dirac_floor;
            row.examined = r.examined;
        } catch (const SearchTooLarge& e) {
            row.refused = true;
            row.estimate = e.estimate();
        }
        table.rows.push_back(row);
    }
    return table;
}

}  // namespace incidence
