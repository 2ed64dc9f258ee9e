#pragma once

// Plain-text point files: one point per line, two whitespace-separated
// coordinates, each an integer or a fraction p/q with q > 0. '#' starts a
// comment; a comment line of the form "# name: <label>" names the
// configuration.

#include "incidence/arrangement.hpp"
#include "incidence/errors.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace incidence {

class ParseError : public MalformedInput {
public:
    ParseError(std::size_t line, const std::string& message)
        : MalformedInput("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Parses a whole point file. Throws ParseError naming the offending line;
/// a repeated point names both lines.
Configuration parse_point_file(std::istream& in);

/// Opens and parses `path`. Throws MalformedInput if it cannot be read.
Configuration read_point_file(const std::string& path);

/// Writes `header` lines as comments, the name line if present, then the
/// points as reduced affine fractions.
void write_point_file(std::ostream& out, const Configuration& c, const std::vector<std::string>& header = {});

/// num/den in lowest terms ("3", "-1/2").
std::string format_fraction(const Integer& num, const Integer& den);

}  // namespace incidence
