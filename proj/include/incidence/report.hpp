#pragma once

// JSON documents written by the command-line tool. Keys are emitted in a
// fixed order; integers that do not fit in a signed 64-bit value are
// written as decimal strings.

#include "incidence/arrangement.hpp"
#include "incidence/inequalities.hpp"
#include "incidence/search.hpp"

#include <json.hpp>

#include <optional>

namespace incidence {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Full analysis of one configuration.
struct Analysis {
    Configuration configuration;
    ArrangementStats stats;
    IdentityReport lemma1;
    IdentityReport lemma2;
    InequalityVerdict hirzebruch;
    InequalityVerdict bojanowski;
    InequalityVerdict degree_sum;
    // Absent for collinear input.
    std::optional<BoundsReport> bounds;
};

Analysis analyze(Configuration c);

/// Identities, applicable Hirzebruch-type verdicts and the main bound.
/// Conjectural entries and the pham_phi/payne_wood/sqrt entries never
/// count.
bool proven_checks_pass(const Analysis& a);

Json integer_json(const Integer& v);
Integer integer_from_json(const Json& j);
std::string rational_string(const Rational& r);

Json report_json(const Analysis& a);
Json verdict_json(const InequalityVerdict& v);

/// Points echoed in a report, as a configuration.
Configuration configuration_from_report(const Json& report);

Json search_json(const SearchResult& r);
SearchResult search_from_json(const Json& j);

Json probe_json(const ProbeTable& t);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace incidence
