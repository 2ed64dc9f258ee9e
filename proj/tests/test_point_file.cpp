#include "test_support.hpp"

#include "incidence/generators.hpp"
#include "incidence/point_file.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace incidence;

namespace {

Configuration parse(const std::string& text) {
    std::istringstream in(text);
    return parse_point_file(in);
}

std::size_t failing_line(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("integers, fractions, comments and blanks") {
    const auto c = parse("# a header\n\n0 0\n 1/2\t-3/4  # trailing\n-7 2/4\r\n");
    REQUIRE(c.size() == 3);
    CHECK(c.points[1] == point_from_fractions(1, 2, -3, 4));
    CHECK(c.points[2] == point_from_fractions(-7, 1, 1, 2));
    CHECK_FALSE(c.name.has_value());
}

TEST_CASE("name comment") {
    const auto c = parse("# name: grid 3 3\n0 0\n1 0\n");
    CHECK(c.name == std::optional<std::string>("grid 3 3"));
}

TEST_CASE("errors carry line numbers") {
    CHECK(failing_line("0 0\n1\n") == 2);
    CHECK(failing_line("0 0\n1 2 3\n") == 2);
    CHECK(failing_line("\n\n1 x\n") == 3);
    CHECK(failing_line("1/0 1\n") == 1);
    CHECK(failing_line("1/-2 1\n") == 1);
    CHECK(failing_line("+1 1\n") == 1);
    CHECK(failing_line("1.5 1\n") == 1);
    CHECK(failing_line("1e3 1\n") == 1);
    CHECK(failing_line("- 1\n") == 1);
}

TEST_CASE("duplicates name both lines") {
    try {
        parse("0 0\n1 1\n# x\n2/2 2/2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(std::string(e.what()).find("line 4 repeats line 2") != std::string::npos);
    }
}

TEST_CASE("format_fraction") {
    CHECK(format_fraction(6, 4) == "3/2");
    CHECK(format_fraction(-6, 3) == "-2");
    CHECK(format_fraction(0, 5) == "0");
    CHECK(format_fraction(1, -2) == "-1/2");
}

TEST_CASE("write then parse is the identity on random rational configurations") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long long> num(-1000000, 1000000), den(1, 720);
    for (int round = 0; round < 100; ++round) {
        Configuration c;
        std::unordered_set<Point> seen;
        for (int i = 0; i < 20; ++i) {
            Point p = point_from_fractions(num(rng), den(rng), num(rng), den(rng));
            if (seen.insert(p).second) c.points.push_back(std::move(p));
        }
        c.name = "round " + std::to_string(round);
        std::ostringstream out;
        write_point_file(out, c, {"header"});
        const auto back = parse(out.str());
        REQUIRE(back.points == c.points);
        REQUIRE(back.name == c.name);
    }
}

TEST_CASE("huge coordinates survive") {
    const std::string big = "123456789012345678901234567890";
    const auto c = parse(big + " -" + big + "/7\n0 0\n");
    CHECK(c.points[0].affine_x() == Rational(Integer(big)));
    CHECK(c.points[0].affine_y() == Rational(-Integer(big), 7));
}
