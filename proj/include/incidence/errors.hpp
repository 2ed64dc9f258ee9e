#pragma once

#include <stdexcept>
#include <string>

namespace incidence {

// Malformed numeric input, e.g. a zero denominator.
class MalformedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// line_through called with two equal points.
class DegeneratePair : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configuration with repeated points.
class MalformedConfiguration : public std::invalid_argument {
public:
    MalformedConfiguration(const std::string& what, std::size_t first, std::size_t second)
        : std::invalid_argument(what), first_(first), second_(second) {}

    std::size_t first_index() const noexcept { return first_; }
    std::size_t second_index() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

// Fewer than two points.
class ConfigurationTooSmall : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A check that needs a non-collinear configuration was handed a collinear one.
class HypothesisViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Generator or search parameters out of range.
class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exhaustive search refused because the subset count exceeds the cap.
class SearchTooLarge : public std::runtime_error {
public:
    SearchTooLarge(const std::string& what, std::string estimate)
        : std::runtime_error(what), estimate_(std::move(estimate)) {}

    const std::string& estimate() const noexcept { return estimate_; }

private:
    std::string estimate_;
};

}  // namespace incidence
