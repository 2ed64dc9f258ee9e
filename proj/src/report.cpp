#include "incidence/report.hpp"

#include <limits>

namespace incidence {

Analysis analyze(Configuration c) {
    Analysis a;
    a.stats = build_arrangement(c);
    a.configuration = std::move(c);
    a.lemma1 = verify_lemma1(a.stats);
    a.lemma2 = verify_lemma2(a.stats);
    a.hirzebruch = hirzebruch_check(a.stats);
    a.bojanowski = bojanowski_check(a.stats);
    a.degree_sum = degree_sum_check(a.stats);
    if (!a.stats.collinear()) a.bounds = bounds_report(a.stats);
    return a;
}

bool proven_checks_pass(const Analysis& a) {
    if (!a.lemma1.equal || !a.lemma2.equal) return false;
    for (const auto* v : {&a.hirzebruch, &a.bojanowski, &a.degree_sum}) {
        if (v->applicable && !v->satisfied) return false;
    }
    return !a.bounds || a.bounds->entry("main_bound").met;
}

Json integer_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return Json(v.convert_to<std::int64_t>());
    }
    return Json(v.str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
    return Integer(j.get<std::int64_t>());
}

std::string rational_string(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Json verdict_json(const InequalityVerdict& v) {
    Json j;
    j["applicable"] = v.applicable;
    j["satisfied"] = v.satisfied;
    j["scale"] = v.scale;
    j["lhs_q"] = integer_json(v.lhs_q);
    j["rhs_q"] = integer_json(v.rhs_q);
    j["slack_q"] = integer_json(v.slack_q);
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

namespace {

Json identity_json(const IdentityReport& r) {
    Json j;
    j["lhs"] = integer_json(r.lhs);
    j["rhs"] = integer_json(r.rhs);
    j["equal"] = r.equal;
    return j;
}

Json bound_json(const BoundEntry& e) {
    Json j;
    j["name"] = e.name;
    j["threshold"] = rational_string(e.threshold);
    j["met"] = e.met;
    j["proven"] = e.proven;
    j["conjectural"] = e.conjectural;
    if (e.witness_index) j["witness_index"] = *e.witness_index;
    return j;
}

}  // namespace

Json report_json(const Analysis& a) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;

    Json& config = doc["configuration"];
    config["name"] = a.configuration.name ? Json(*a.configuration.name) : Json(nullptr);
    config["n"] = a.configuration.size();
    Json points = Json::array();
    for (const auto& p : a.configuration.points) {
        points.push_back(Json::array({integer_json(p.x()), integer_json(p.y()), integer_json(p.w())}));
    }
    config["points"] = std::move(points);

    const ArrangementStats& s = a.stats;
    Json& stats = doc["stats"];
    stats["lines"] = s.lines.size();
    Json histogram = Json::object();
    for (const auto& [r, count] : s.histogram) histogram[std::to_string(r)] = count;
    stats["histogram"] = std::move(histogram);
    stats["degrees"] = s.degrees;
    stats["max_degree"] = s.max_degree;
    stats["witness_index"] = s.witness_index;
    stats["max_collinear"] = s.max_collinear;
    stats["non_collinear"] = !s.collinear();

    doc["identities"]["lemma1"] = identity_json(a.lemma1);
    doc["identities"]["lemma2"] = identity_json(a.lemma2);

    doc["verdicts"]["hirzebruch"] = verdict_json(a.hirzebruch);
    doc["verdicts"]["bojanowski"] = verdict_json(a.bojanowski);
    doc["verdicts"]["degree_sum"] = verdict_json(a.degree_sum);

    if (a.bounds) {
        Json bounds = Json::array();
        for (const auto& e : a.bounds->entries) bounds.push_back(bound_json(e));
        doc["bounds"] = std::move(bounds);
    } else {
        doc["bounds"] = nullptr;
    }
    doc["proven_checks_pass"] = proven_checks_pass(a);
    return doc;
}

Configuration configuration_from_report(const Json& report) {
    Configuration c;
    const Json& config = report.at("configuration");
    if (!config.at("name").is_null()) c.name = config.at("name").get<std::string>();
    for (const auto& triple : config.at("points")) {
        c.points.push_back(Point::homogeneous(integer_from_json(triple.at(0)), integer_from_json(triple.at(1)),
                                              integer_from_json(triple.at(2))));
    }
    return c;
}

Json search_json(const SearchResult& r) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    Json& spec = doc["search"];
    spec["n"] = r.n;
    spec["grid"] = r.grid;
    spec["mode"] = to_string(r.mode);
    if (r.mode == SearchMode::hill_climb) {
        spec["budget"] = r.budget;
        spec["seed"] = r.seed;
    }
    Json& res = doc["result"];
    res["best_max_degree"] = r.best_max_degree;
    res["theorem_floor"] = r.theorem_floor;
    res["dirac_floor"] = r.dirac_floor;
    res["examined"] = r.examined;
    res["collinear_skipped"] = r.collinear_skipped;
    res["optimal_count"] = r.optimal_count;
    res["witness_cap"] = r.witness_cap;
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) {
        Json cells = Json::array();
        for (const auto& c : w) cells.push_back(Json::array({c.x, c.y}));
        witnesses.push_back(std::move(cells));
    }
    res["witnesses"] = std::move(witnesses);
    return doc;
}

SearchResult search_from_json(const Json& j) {
    SearchResult r;
    const Json& spec = j.at("search");
    r.n = spec.at("n").get<int>();
    r.grid = spec.at("grid").get<int>();
    const auto mode = spec.at("mode").get<std::string>();
    r.mode = mode == "hill_climb" ? SearchMode::hill_climb : SearchMode::exhaustive;
    r.budget = spec.value("budget", std::uint64_t{0});
    r.seed = spec.value("seed", std::uint64_t{0});
    const Json& res = j.at("result");
    r.best_max_degree = res.at("best_max_degree").get<std::size_t>();
    r.theorem_floor = res.at("theorem_floor").get<std::size_t>();
    r.dirac_floor = res.at("dirac_floor").get<std::size_t>();
    r.examined = res.at("examined").get<std::uint64_t>();
    r.collinear_skipped = res.at("collinear_skipped").get<std::uint64_t>();
    r.optimal_count = res.at("optimal_count").get<std::uint64_t>();
    r.witness_cap = res.value("witness_cap", std::size_t{32});
    for (const auto& w : res.at("witnesses")) {
        Witness cells;
        for (const auto& c : w) cells.push_back(GridCell{c.at(0).get<int>(), c.at(1).get<int>()});
        r.witnesses.push_back(std::move(cells));
    }
    return r;
}

Json probe_json(const ProbeTable& t) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["grid"] = t.grid;
    doc["label"] = t.label;
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json j;
        j["n"] = row.n;
        if (row.refused) {
            j["refused"] = true;
            j["estimate"] = row.estimate;
        } else {
            j["min_max_degree"] = row.min_max_degree;
            j["dirac_floor"] = row.dirac_floor;
            j["dirac_met"] = row.dirac_met;
            j["theorem_floor"] = row.theorem_floor;
            j["examined"] = row.examined;
        }
        rows.push_back(std::move(j));
    }
    doc["rows"] = std::move(rows);
    return doc;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace incidence
