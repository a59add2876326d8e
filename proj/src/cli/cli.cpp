#include "monochrome/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monochrome/census.hpp"
#include "monochrome/colorsim.hpp"
#include "monochrome/edge_list_io.hpp"
#include "monochrome/errors.hpp"
#include "monochrome/extremal.hpp"
#include "monochrome/family_spec.hpp"
#include "monochrome/law_json.hpp"
#include "monochrome/limit_laws.hpp"
#include "monochrome/moments.hpp"
#include "monochrome/spectral.hpp"
#include "monochrome/stats.hpp"

namespace monochrome {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string format_of(const RunConfig& c, const char* fallback) {
    const std::string f = c.format.empty() ? fallback : c.format;
    if (f != "json" && f != "csv") throw UsageError("--format must be json or csv, got '" + f + "'");
    return f;
}

std::uint64_t require_seed(const RunConfig& c) {
    if (!c.seed) throw UsageError(c.subcommand + " draws random numbers; pass --seed");
    return *c.seed;
}

std::size_t worker_count(const RunConfig& c) {
    if (c.workers > 0) return c.workers;
    if (const char* env = std::getenv("MONOCHROME_WORKERS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw UsageError("MONOCHROME_WORKERS must be a positive integer");
    }
    return 1;
}

Graph load_graph(const RunConfig& c) {
    if (c.graph.empty()) throw UsageError(c.subcommand + " needs --graph <edge-list file | family spec>");
    if (looks_like_family_spec(c.graph)) return generate(parse_family_spec(c.graph, c.seed));
    if (!std::filesystem::exists(c.graph)) {
        throw UsageError("graph source '" + c.graph + "' is neither a family spec nor an existing file");
    }
    return load_edge_list(c.graph);
}

Json graph_json(const RunConfig& c, const Graph& g) {
    return Json{{"source", c.graph}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
}

std::string cmd_generate(const RunConfig& c) { return to_edge_list_text(load_graph(c)); }

std::string cmd_census(const RunConfig& c) {
    const Graph g = load_graph(c);
    const auto stats = basic_stats(g);
    Json j{{"schema", "monochrome.census/1"}, {"graph", graph_json(c, g)}};
    std::size_t max_degree = 0;
    for (auto d : stats.degrees) max_degree = std::max(max_degree, d);
    j["graph"]["components"] = stats.components;
    j["graph"]["min_degree"] = min_degree(g);
    j["graph"]["max_degree"] = max_degree;
    Json cycles = Json::object();
    for (std::size_t len = kMinCycleLength; len <= c.max_cycle; ++len) cycles[std::to_string(len)] = count_cycles(g, len);
    j["cycles"] = cycles;
    if (c.tuples > 0) {
        Json classes = Json::array();
        for (const auto& [key, cls] : count_multigraph_tuples(g, c.tuples)) {
            classes.push_back({{"name", cls.pattern.name()},
                               {"key", key},
                               {"vertices", cls.pattern.vertex_count()},
                               {"count", cls.count}});
        }
        j["tuples"] = {{"k", c.tuples}, {"classes", classes}};
    }
    return dump(j);
}

std::string cmd_extremal(const RunConfig& c) {
    const Graph h = load_graph(c);
    const auto sol = gamma(h);
    const auto report = structural_check(sol, h);
    Json phi = Json::array();
    for (auto half : sol.phi_half) phi.push_back(half == 0 ? "0" : half == 1 ? "1/2" : "1");
    Json j{{"schema", "monochrome.extremal/1"},
           {"graph", graph_json(c, h)},
           {"gamma", to_string(sol.gamma)},
           {"gamma_value", to_double(sol.gamma)},
           {"deficiency", deficiency(h)},
           {"phi", phi},
           {"partition", {{"zero", sol.zero_part.size()}, {"half", sol.half_part.size()}, {"one", sol.one_part.size()}}},
           {"structure",
            {{"saturating_matching", report.saturating_matching},
             {"saturating_matching_applicable", report.saturating_matching_applicable},
             {"half_part_spanning", report.half_part_spanning},
             {"union_of_stars", report.union_of_stars}}}};
    if (c.budget) j["alon_asymptotic"] = alon_asymptotic(h, *c.budget);
    return dump(j);
}

std::string cmd_spectrum(const RunConfig& c) {
    const Graph g = load_graph(c);
    const auto s = eigenvalues(g);
    if (format_of(c, "csv") == "json") {
        return dump(Json{{"schema", "monochrome.spectrum/1"},
                         {"graph", graph_json(c, g)},
                         {"eigenvalues", s.eigenvalues},
                         {"l2_norm", s.l2_norm},
                         {"usn_ratio", s.usn_ratio()}});
    }
    std::string text = "# usn_ratio=" + number(s.usn_ratio()) + "\nindex,eigenvalue\n";
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) text += std::to_string(i) + "," + number(s.eigenvalues[i]) + "\n";
    return text;
}

std::string cmd_simulate(const RunConfig& c) {
    const Graph g = load_graph(c);
    const auto stat = parse_statistic(c.statistic);
    const auto run = simulate(g, c.colors, stat, c.samples, require_seed(c), worker_count(c));
    const auto histogram = run.histogram();
    if (format_of(c, "csv") == "csv") {
        std::string text = "value,count\n";
        for (auto [v, n] : histogram) text += std::to_string(v) + "," + std::to_string(n) + "\n";
        return text;
    }
    Json pmf = Json::array();
    double mean = 0.0;
    for (auto [v, n] : histogram) {
        const double freq = static_cast<double>(n) / static_cast<double>(run.sample_count);
        pmf.push_back({{"value", v}, {"count", n}, {"frequency", freq}});
        mean += static_cast<double>(v) * freq;
    }
    return dump(Json{{"schema", "monochrome.simulation/1"},
                     {"graph", graph_json(c, g)},
                     {"colors", c.colors},
                     {"statistic", describe(stat)},
                     {"samples", c.samples},
                     {"seed", run.seed},
                     {"mean", mean},
                     {"pmf", pmf}});
}

std::string cmd_exact(const RunConfig& c) {
    const Graph g = load_graph(c);
    const auto stat = parse_statistic(c.statistic);
    const auto pmf = exact_distribution(g, c.colors, stat);
    if (format_of(c, "csv") == "csv") {
        std::string text = "value,probability\n";
        for (const auto& [v, p] : pmf) text += std::to_string(v) + "," + to_string(p) + "\n";
        return text;
    }
    Json entries = Json::array();
    for (const auto& [v, p] : pmf) entries.push_back({{"value", v}, {"probability", to_string(p)}});
    return dump(Json{{"schema", "monochrome.exact/1"},
                     {"graph", graph_json(c, g)},
                     {"colors", c.colors},
                     {"statistic", describe(stat)},
                     {"pmf", entries}});
}

MomentKind parse_kind(const std::string& s) {
    if (s == "rawN") return MomentKind::RawN;
    if (s == "rawM") return MomentKind::RawM;
    if (s == "centralZ") return MomentKind::CentralZ;
    if (s == "centralW") return MomentKind::CentralW;
    throw UsageError("--kind must be rawN, rawM, centralZ or centralW");
}

std::string cmd_moments(const RunConfig& c) {
    const Graph g = load_graph(c);
    Json j{{"schema", "monochrome.moments/1"}, {"graph", graph_json(c, g)}, {"colors", c.colors}};
    if (c.fourth) {
        const auto r = fourth_moment_report(g, c.colors);
        Json classes = Json::object();
        for (const auto& [name, value] : r.class_contributions) classes[name] = to_string(value);
        j["fourth_moment"] = {{"exact", to_string(r.exact)},
                              {"leading", to_string(r.leading)},
                              {"c4_term", to_string(r.c4_term)},
                              {"remainder", to_string(r.remainder)},
                              {"c4_contribution", to_string(r.c4_contribution)},
                              {"exact_value", to_double(r.exact)},
                              {"class_contributions", classes}};
        return dump(j);
    }
    const auto r = conditional_moment(g, MomentRequest{parse_kind(c.kind), c.order, c.colors});
    j["kind"] = c.kind;
    j["order"] = c.order;
    j["unscaled"] = to_string(r.unscaled);
    j["value"] = r.value ? Json(to_string(*r.value)) : Json(nullptr);
    j["scale_base"] = to_string(r.scale_base);
    j["scale_exponent"] = to_string(r.scale_exponent);
    j["approx"] = r.approx;
    return dump(j);
}

ColorRegime parse_regime(const RunConfig& c) {
    const std::string& s = c.regime;
    if (s.rfind("fixed:", 0) == 0) {
        try {
            return regime::Fixed{static_cast<std::uint32_t>(std::stoul(s.substr(6)))};
        } catch (const std::exception&) {
        }
    } else if (s.rfind("growing:", 0) == 0) {
        const std::string v = s.substr(8);
        if (v == "inf") return regime::Growing{std::numeric_limits<double>::infinity()};
        try {
            return regime::Growing{std::stod(v)};
        } catch (const std::exception&) {
        }
    }
    throw UsageError("--regime must be fixed:c, growing:lambda or growing:inf, got '" + s + "'");
}

std::string cmd_limit(const RunConfig& c) {
    const ColorRegime r = parse_regime(c);
    LimitLaw law;
    if (looks_like_family_spec(c.graph)) {
        law = limit_for(parse_family_spec(c.graph, c.seed.value_or(0)), r);
    } else {
        law = limit_for(load_graph(c), r);
    }
    if (c.sample > 0) {
        std::string text = "sample\n";
        for (double x : sample_law(law, c.sample, require_seed(c))) text += number(x) + "\n";
        return text;
    }
    Json j = law_to_json(law);
    j["description"] = describe(law);
    return dump(j);
}

std::vector<std::pair<double, std::uint64_t>> read_counts_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open empirical file '" + path + "'");
    std::vector<std::pair<double, std::uint64_t>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("value", 0) == 0 || line.rfind("sample", 0) == 0) continue;
        const auto comma = line.find(',');
        try {
            if (comma == std::string::npos) {
                rows.emplace_back(std::stod(line), 1);
            } else {
                rows.emplace_back(std::stod(line.substr(0, comma)), std::stoull(line.substr(comma + 1)));
            }
        } catch (const std::exception&) {
            fail(ErrorCode::ParseError, "bad empirical row '" + line + "' in " + path);
        }
    }
    if (rows.empty()) throw UsageError("empirical file '" + path + "' has no rows");
    return rows;
}

std::string cmd_compare(const RunConfig& c) {
    if (c.empirical.empty() || c.law.empty()) throw UsageError("compare needs --empirical <csv> and --law <json>");
    std::ifstream law_in(c.law);
    if (!law_in) throw UsageError("cannot open law file '" + c.law + "'");
    nlohmann::json law_json;
    try {
        law_in >> law_json;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::ParseError, std::string("law file is not JSON: ") + e.what());
    }
    const LimitLaw law = law_from_json(law_json);
    const auto rows = read_counts_csv(c.empirical);
    if (!(c.scale > 0.0)) throw UsageError("--scale must be positive");

    double value = 0.0;
    if (c.metric == "tv") {
        if (!is_discrete(law)) throw UsageError("TV comparison needs a discrete law");
        std::map<std::uint64_t, std::uint64_t> counts;
        for (auto [v, n] : rows) {
            if (v < 0 || v != std::floor(v)) throw UsageError("TV comparison needs nonnegative integer values");
            counts[static_cast<std::uint64_t>(v)] += n;
        }
        const Pmf empirical = pmf_from_counts(counts);
        Pmf reference;
        double cumulative = 0.0;
        const auto top = static_cast<std::int64_t>(counts.rbegin()->first);
        for (std::int64_t k = 0; k <= top || (cumulative < 1.0 - 1e-12 && k < 1'000'000); ++k) {
            const double p = law_pmf(law, k);
            reference[static_cast<double>(k)] = p;
            cumulative += p;
        }
        value = tv_distance(empirical, reference);
    } else if (c.metric == "ks") {
        std::vector<double> samples;
        for (auto [v, n] : rows) samples.insert(samples.end(), n, (v - c.center) / c.scale);
        value = ks_statistic(samples, [&](double x) { return law_cdf(law, x); });
    } else {
        throw UsageError("--metric must be tv or ks");
    }
    return dump(Json{{"schema", "monochrome.compare/1"},
                     {"metric", c.metric},
                     {"law", describe(law)},
                     {"value", value},
                     {"tol", c.tol},
                     {"pass", value < c.tol}});
}

std::string cmd_birthday(const RunConfig& c) {
    Json j{{"schema", "monochrome.birthday/1"}};
    if (c.lambda_from) {
        if (!c.edges || c.days_power.empty()) throw UsageError("--lambda-from needs --edges and --days-power base:exp");
        const auto colon = c.days_power.find(':');
        double base = 0.0, exponent = 0.0;
        try {
            base = std::stod(c.days_power.substr(0, colon));
            exponent = colon == std::string::npos ? 1.0 : std::stod(c.days_power.substr(colon + 1));
        } catch (const std::exception&) {
            throw UsageError("--days-power must look like 365:4");
        }
        const double colors = std::pow(base, exponent);
        const double lambda = *c.edges / colors;
        j["edges"] = *c.edges;
        j["colors"] = colors;
        j["lambda"] = lambda;
        j["match_prob"] = -std::expm1(-lambda);
        return dump(j);
    }
    if (!c.people) throw UsageError("birthday needs --people (or --lambda-from)");
    const double pairs = 0.5 * static_cast<double>(*c.people) * static_cast<double>(*c.people - (*c.people > 0));
    j["people"] = *c.people;
    j["days"] = c.days;
    j["exact"] = birthday_no_match(*c.people, c.days);
    j["poisson_approx"] = std::exp(-pairs / static_cast<double>(c.days));
    j["threshold_people"] = birthday_threshold(c.days);
    return dump(j);
}

Json config_json(const RunConfig& c) {
    Json j{{"subcommand", c.subcommand}, {"graph", c.graph},          {"colors", c.colors},
           {"statistic", c.statistic},   {"samples", c.samples},      {"format", c.format},
           {"out", c.out},               {"workers", c.workers},      {"max_cycle", c.max_cycle},
           {"tuples", c.tuples},         {"kind", c.kind},            {"order", c.order},
           {"fourth", c.fourth},         {"regime", c.regime},        {"sample", c.sample},
           {"empirical", c.empirical},   {"law", c.law},              {"metric", c.metric},
           {"tol", c.tol},               {"center", c.center},        {"scale", c.scale},
           {"days", c.days},             {"lambda_from", c.lambda_from}, {"days_power", c.days_power}};
    j["seed"] = c.seed ? Json(*c.seed) : Json(nullptr);
    j["budget"] = c.budget ? Json(*c.budget) : Json(nullptr);
    j["people"] = c.people ? Json(*c.people) : Json(nullptr);
    j["edges"] = c.edges ? Json(*c.edges) : Json(nullptr);
    return j;
}

std::string dispatch(const RunConfig& c) {
    const std::string& s = c.subcommand;
    if (s == "generate") return cmd_generate(c);
    if (s == "census") return cmd_census(c);
    if (s == "extremal") return cmd_extremal(c);
    if (s == "spectrum") return cmd_spectrum(c);
    if (s == "simulate") return cmd_simulate(c);
    if (s == "exact") return cmd_exact(c);
    if (s == "moments") return cmd_moments(c);
    if (s == "limit") return cmd_limit(c);
    if (s == "compare") return cmd_compare(c);
    if (s == "birthday") return cmd_birthday(c);
    throw UsageError("unknown subcommand '" + s + "'");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    try {
        const std::string text = dispatch(config);
        if (config.out.empty()) {
            out << text;
            return exit_code::ok;
        }
        {
            std::ofstream file(config.out, std::ios::binary);
            if (!file) throw UsageError("cannot write '" + config.out + "'");
            file << text;
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        Json manifest{{"schema", "monochrome.manifest/1"},
                      {"version", kVersion},
                      {"config", config_json(config)},
                      {"outputs", Json::array({config.out})},
                      {"wall_time_seconds", seconds}};
        std::ofstream(config.out + ".manifest.json", std::ios::binary) << dump(manifest);
        return exit_code::ok;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (is_gate_error(e.code())) return exit_code::gate;
        if (is_numerical_error(e.code())) return exit_code::numerical;
        return exit_code::usage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_code::internal;
    }
}

int run_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Monochromatic subgraph counts under uniform random colorings"};
    app.footer(
        "Graph sources: an edge-list file (\"n m\" header, then \"u v\" lines) or a family spec:\n"
        "  complete:n  bipartite:a:b  star:leaves  path:edges  cycle:g  hypercube:s\n"
        "  er:n:p[:seedS]  regular:n:d[:seedS]  gadget:a:b:g  gw:height:p0,p1,..[:seedS]\n"
        "  inhom:kernel.csv[:seedS]\n"
        "Exit codes: 0 ok, 2 usage, 3 gate exceeded, 4 numerical failure.\n"
        "MONOCHROME_WORKERS sets the default worker count.");
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    RunConfig c;

    auto add_common = [&](CLI::App* sub, bool graph = true) {
        if (graph) sub->add_option("--graph", c.graph, "Edge-list file or family spec")->required();
        sub->add_option("--seed", c.seed, "Random seed");
        sub->add_option("--format", c.format, "json or csv");
        sub->add_option("--out", c.out, "Output file (a manifest is written beside it)");
    };
    auto* generate_cmd = app.add_subcommand("generate", "Emit the edge list of a graph source");
    add_common(generate_cmd);
    auto* census_cmd = app.add_subcommand("census", "Cycle and edge-tuple counts");
    add_common(census_cmd);
    census_cmd->add_option("--max-cycle", c.max_cycle, "Count cycles of length 3..N (N <= 8)")->check(CLI::Range(2, 8));
    census_cmd->add_option("--tuples", c.tuples, "Classify ordered k-tuples of edges (k <= 4)")->check(CLI::Range(0, 4));
    auto* extremal_cmd = app.add_subcommand("extremal", "Fractional stable number, deficiency and structure");
    add_common(extremal_cmd);
    extremal_cmd->add_option("--budget", c.budget, "Edge budget l for the asymptotic copy count");
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Adjacency eigenvalues");
    add_common(spectrum_cmd);
    for (auto* sub : {app.add_subcommand("simulate", "Monte Carlo distribution of a statistic"),
                      app.add_subcommand("exact", "Exact distribution by enumerating all colorings")}) {
        add_common(sub);
        sub->add_option("--colors", c.colors, "Number of colors")->required();
        sub->add_option("--stat", c.statistic, "edges, stars:r or cycles:g");
        if (sub->get_name() == "simulate") {
            sub->add_option("--samples", c.samples, "Number of colorings");
            sub->add_option("--workers", c.workers, "Worker threads (results do not depend on it)");
        }
    }
    auto* moments_cmd = app.add_subcommand("moments", "Exact conditional moments");
    add_common(moments_cmd);
    moments_cmd->add_option("--colors", c.colors, "Number of colors")->required();
    moments_cmd->add_option("--kind", c.kind, "rawN, rawM, centralZ or centralW");
    moments_cmd->add_option("--order", c.order, "Moment order k <= 4");
    moments_cmd->add_flag("--fourth", c.fourth, "Fourth-moment decomposition report");
    auto* limit_cmd = app.add_subcommand("limit", "Select the limiting law");
    add_common(limit_cmd);
    limit_cmd->add_option("--regime", c.regime, "fixed:c, growing:lambda or growing:inf")->required();
    limit_cmd->add_option("--sample", c.sample, "Emit this many draws from the law as CSV");
    auto* compare_cmd = app.add_subcommand("compare", "Distance between an empirical CSV and a law");
    add_common(compare_cmd, false);
    compare_cmd->add_option("--empirical", c.empirical, "CSV of value,count")->required();
    compare_cmd->add_option("--law", c.law, "Law JSON as written by 'limit'")->required();
    compare_cmd->add_option("--metric", c.metric, "tv or ks");
    compare_cmd->add_option("--tol", c.tol, "Pass threshold");
    compare_cmd->add_option("--center", c.center, "Subtracted from values before KS");
    compare_cmd->add_option("--scale", c.scale, "Divides centered values before KS");
    auto* birthday_cmd = app.add_subcommand("birthday", "Birthday-problem probabilities");
    add_common(birthday_cmd, false);
    birthday_cmd->add_option("--people", c.people, "Group size");
    birthday_cmd->add_option("--days", c.days, "Number of equally likely days");
    birthday_cmd->add_flag("--lambda-from", c.lambda_from, "Compute lambda = edges / days^power");
    birthday_cmd->add_option("--edges", c.edges, "Number of pairs (edges)");
    birthday_cmd->add_option("--days-power", c.days_power, "base:exponent, e.g. 365:4");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }
    c.subcommand = app.get_subcommands().front()->get_name();
    return run(c, out, err);
}

}  // namespace monochrome
