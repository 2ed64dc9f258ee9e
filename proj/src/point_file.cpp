#include "incidence/point_file.hpp"

#include <fstream>
#include <unordered_map>

namespace incidence {
namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (const char ch : s) {
        if (ch < '0' || ch > '9') return false;
    }
    return true;
}

// Integer or p/q, ASCII only.
bool parse_coordinate(std::string_view token, Integer& num, Integer& den) {
    const auto slash = token.find('/');
    std::string_view p = token.substr(0, slash);
    const bool negative = !p.empty() && p.front() == '-';
    if (negative) p.remove_prefix(1);
    if (!all_digits(p)) return false;
    num = Integer(std::string(p));
    if (negative) num = -num;
    den = 1;
    if (slash != std::string_view::npos) {
        const std::string_view q = token.substr(slash + 1);
        if (!all_digits(q)) return false;
        den = Integer(std::string(q));
        if (den.is_zero()) return false;
    }
    return true;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f'; };
    while (i < line.size()) {
        while (i < line.size() && space(line[i])) ++i;
        const std::size_t start = i;
        while (i < line.size() && !space(line[i])) ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

}  // namespace

Configuration parse_point_file(std::istream& in) {
    Configuration c;
    std::unordered_map<Point, std::size_t> first_line;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            const std::string_view comment = trim(line.substr(hash + 1));
            constexpr std::string_view tag = "name:";
            if (trim(line.substr(0, hash)).empty() && comment.substr(0, tag.size()) == tag) {
                c.name = std::string(trim(comment.substr(tag.size())));
            }
            line = line.substr(0, hash);
        }
        const auto tokens = split(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) throw ParseError(lineno, "expected two coordinates, found " + std::to_string(tokens.size()));
        Integer xn, xd, yn, yd;
        if (!parse_coordinate(tokens[0], xn, xd)) throw ParseError(lineno, "bad coordinate '" + std::string(tokens[0]) + "'");
        if (!parse_coordinate(tokens[1], yn, yd)) throw ParseError(lineno, "bad coordinate '" + std::string(tokens[1]) + "'");
        Point p = point_from_fractions(xn, xd, yn, yd);
        const auto [it, fresh] = first_line.emplace(p, lineno);
        if (!fresh) {
            throw ParseError(lineno, "duplicate point: line " + std::to_string(lineno) + " repeats line "
                                         + std::to_string(it->second));
        }
        c.points.push_back(std::move(p));
    }
    return c;
}

Configuration read_point_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput("cannot open " + path);
    return parse_point_file(in);
}

std::string format_fraction(const Integer& num, const Integer& den) {
    const Integer g = boost::multiprecision::gcd(num, den);
    Integer p = num / g;
    Integer q = den / g;
    if (q.sign() < 0) {
        p = -p;
        q = -q;
    }
    if (q == 1) return p.str();
    return p.str() + "/" + q.str();
}

void write_point_file(std::ostream& out, const Configuration& c, const std::vector<std::string>& header) {
    for (const auto& h : header) out << "# " << h << '\n';
    if (c.name) out << "# name: " << *c.name << '\n';
    for (const auto& p : c.points) out << format_fraction(p.x(), p.w()) << ' ' << format_fraction(p.y(), p.w()) << '\n';
}

}  // namespace incidence
