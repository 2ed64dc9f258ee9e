#include "incidence/cli.hpp"

#include "incidence/generators.hpp"
#include "incidence/point_file.hpp"
#include "incidence/report.hpp"
#include "incidence/search.hpp"
#include "incidence/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

namespace incidence::cli {
namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw MalformedInput("cannot write " + path);
    f << text;
    if (!f.flush()) throw MalformedInput("cannot write " + path);
}

// Output to a file when a path is given, otherwise to `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
    } else {
        write_text(path, text);
    }
}

Configuration load(const std::string& path, std::ostream& err) {
    try {
        return read_point_file(path);
    } catch (const ParseError& e) {
        err << path << ":" << e.what() << '\n';
        throw;
    }
}

const char* mark(bool applicable, bool satisfied) {
    if (!applicable) return "N/A ";
    return satisfied ? "PASS" : "FAIL";
}

std::string verdict_text(const Analysis& a) {
    std::ostringstream os;
    for (const auto* id : {&a.lemma1, &a.lemma2}) {
        os << mark(true, id->equal) << ' ' << id->name << ": " << id->lhs << " = " << id->rhs << '\n';
    }
    for (const auto* v : {&a.hirzebruch, &a.bojanowski, &a.degree_sum}) {
        os << mark(v->applicable, v->satisfied) << ' ' << v->name << ": lhs_q=" << v->lhs_q << " rhs_q=" << v->rhs_q
           << " slack_q=" << v->slack_q << " (x" << v->scale << ")\n";
    }
    if (a.bounds) {
        for (const auto& e : a.bounds->entries) {
            os << (e.met ? "MET  " : "UNMET") << ' ' << e.name << ": max_degree=" << a.stats.max_degree
               << " threshold=" << rational_string(e.threshold);
            if (e.conjectural) os << " (conjectural, informational)";
            os << '\n';
        }
    } else {
        os << "N/A  bounds: configuration is collinear\n";
    }
    os << "proven checks: " << (proven_checks_pass(a) ? "PASS" : "FAIL") << '\n';
    return os.str();
}

std::int64_t to_int(const std::string& s, const char* what) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) throw InvalidSpec(std::string("expected an integer for ") + what + ", got '" + s + "'");
    return v;
}

FamilySpec family_from_args(const std::string& family, const std::vector<std::string>& p, bool include_intersection) {
    auto want = [&](std::size_t lo, std::size_t hi) {
        if (p.size() < lo || p.size() > hi) throw InvalidSpec("wrong number of parameters for " + family);
    };
    if (family == "two-lines-parallel") {
        want(1, 2);
        const auto k = to_int(p[0], "k");
        return TwoLinesParallel{k, p.size() == 2 ? to_int(p[1], "second") : k};
    }
    if (family == "two-lines-crossing") {
        want(1, 1);
        return TwoLinesCrossing{to_int(p[0], "k"), include_intersection};
    }
    if (family == "near-pencil") {
        want(1, 1);
        return NearPencil{to_int(p[0], "n")};
    }
    if (family == "grid") {
        want(2, 2);
        return Grid{to_int(p[0], "width"), to_int(p[1], "height")};
    }
    if (family == "random") {
        want(3, 3);
        const auto seed = to_int(p[2], "seed");
        if (seed < 0) throw InvalidSpec("seed must be non-negative");
        return RandomInteger{to_int(p[0], "n"), to_int(p[1], "range"), static_cast<std::uint64_t>(seed)};
    }
    throw InvalidSpec("unknown family '" + family + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact point-line incidence statistics, bound checks and small extremal searches", "incidence-lab"};
    app.require_subcommand(1);

    std::string input, json_path, out_path;
    bool to_stdout = false;

    auto* analyze_cmd = app.add_subcommand("analyze", "Full JSON report for a point file");
    analyze_cmd->add_option("input", input, "Point file")->required();
    auto* json_opt = analyze_cmd->add_option("--json", json_path, "Write the report to this path");
    analyze_cmd->add_flag("--stdout", to_stdout, "Write the report to standard output")->excludes(json_opt);

    auto* verify_cmd = app.add_subcommand("verify", "Like analyze, printing only the verdicts");
    verify_cmd->add_option("input", input, "Point file")->required();

    std::string family;
    std::vector<std::string> params;
    bool include_intersection = false;
    auto* generate_cmd = app.add_subcommand("generate", "Write a point file for a named family");
    generate_cmd->add_option("family", family,
                             "two-lines-parallel k [m] | two-lines-crossing k | near-pencil n | grid w h | random n range seed")
        ->required();
    generate_cmd->add_option("params", params, "Family parameters");
    generate_cmd->add_flag("--include-intersection", include_intersection, "two-lines-crossing: share the origin");
    generate_cmd->add_option("-o,--output", out_path, "Output path (default: standard output)");

    SearchSpec search_spec;
    std::string mode = "exhaustive";
    auto* search_cmd = app.add_subcommand("search", "Minimize the maximum degree over grid subsets");
    search_cmd->add_option("--n", search_spec.n, "Points per configuration")->required();
    search_cmd->add_option("--grid", search_spec.grid, "Grid side g")->required();
    search_cmd->add_option("--mode", mode, "exhaustive | hill_climb")
        ->check(CLI::IsMember({"exhaustive", "hill_climb", "hill-climb"}));
    search_cmd->add_option("--budget", search_spec.budget, "Configurations examined by hill_climb");
    search_cmd->add_option("--seed", search_spec.seed, "hill_climb seed");
    search_cmd->add_option("--witness-cap", search_spec.witness_cap, "Witnesses stored");
    search_cmd->add_option("--cap", search_spec.hard_cap, "Largest exhaustive search accepted");
    search_cmd->add_option("--threads", search_spec.threads, "Workers (default: INCIDENCE_LAB_THREADS or all cores)");
    search_cmd->add_option("--json", json_path, "Write the result to this path");

    int probe_max = 8;
    auto* probe_cmd = app.add_subcommand("probe", "Grid-restricted check of floor(n/2) for small n");
    probe_cmd->add_option("--n-max", probe_max, "Largest n")->required();
    probe_cmd->add_option("--grid", search_spec.grid, "Grid side g")->required();
    probe_cmd->add_option("--cap", search_spec.hard_cap, "Largest exhaustive search accepted per n");
    probe_cmd->add_option("--threads", search_spec.threads, "Workers");
    probe_cmd->add_option("--json", json_path, "Write the table to this path");

    SvgOptions svg;
    auto* plot_cmd = app.add_subcommand("plot", "Draw points and determined lines as SVG");
    plot_cmd->add_option("input", input, "Point file")->required();
    plot_cmd->add_option("-o,--output", out_path, "SVG path")->required();
    plot_cmd->add_option("--width", svg.width, "Width in pixels");
    plot_cmd->add_option("--rich-min", svg.rich_min, "Draw lines with at least this many points");

    std::vector<std::string> argv_storage{"incidence-lab"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (analyze_cmd->parsed() || verify_cmd->parsed()) {
            const Analysis a = analyze(load(input, err));
            if (a.stats.collinear()) err << "warning: configuration is collinear; bounds not evaluated\n";
            if (analyze_cmd->parsed()) {
                emit(json_path, dump(report_json(a)), out);
            } else {
                out << verdict_text(a);
            }
            return proven_checks_pass(a) ? kOk : kProvenCheckFailed;
        }
        if (generate_cmd->parsed()) {
            const FamilySpec spec = family_from_args(family, params, include_intersection);
            const Configuration c = generate(spec);
            std::ostringstream text;
            write_point_file(text, c, {"incidence-lab generate " + describe(spec)});
            emit(out_path, text.str(), out);
            return kOk;
        }
        if (search_cmd->parsed()) {
            search_spec.mode = mode == "exhaustive" ? SearchMode::exhaustive : SearchMode::hill_climb;
            const SearchResult r = run_search(search_spec);
            emit(json_path, dump(search_json(r)), out);
            if (r.best_max_degree < r.theorem_floor) {
                err << "error: best_max_degree " << r.best_max_degree << " is below ceil(n/3)+1 = " << r.theorem_floor
                    << '\n';
                return kProvenCheckFailed;
            }
            return kOk;
        }
        if (probe_cmd->parsed()) {
            const ProbeTable t = dirac_smalln_probe(probe_max, search_spec.grid, search_spec.hard_cap, search_spec.threads);
            emit(json_path, dump(probe_json(t)), out);
            for (const auto& row : t.rows) {
                if (!row.refused && row.min_max_degree < row.theorem_floor) return kProvenCheckFailed;
            }
            return kOk;
        }
        if (plot_cmd->parsed()) {
            const Configuration c = load(input, err);
            const ArrangementStats s = build_arrangement(c);
            if (s.collinear()) err << "warning: configuration is collinear\n";
            write_text(out_path, render_svg(c, s, svg));
            return kOk;
        }
    } catch (const ParseError&) {
        return kInputError;
    } catch (const SearchTooLarge& e) {
        err << "error: " << e.what() << " (estimate: " << e.estimate() << " subsets)\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace incidence::cli
