#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "monochrome/census.hpp"
#include "monochrome/cli.hpp"
#include "monochrome/colorsim.hpp"
#include "monochrome/edge_list_io.hpp"
#include "monochrome/errors.hpp"
#include "monochrome/extremal.hpp"
#include "monochrome/family_spec.hpp"
#include "monochrome/generators.hpp"
#include "monochrome/law_json.hpp"
#include "monochrome/limit_laws.hpp"
#include "monochrome/moments.hpp"
#include "monochrome/spectral.hpp"
#include "monochrome/stats.hpp"

namespace py = pybind11;
using namespace monochrome;

namespace {

MomentKind parse_kind(const std::string& s) {
    if (s == "rawN") return MomentKind::RawN;
    if (s == "rawM") return MomentKind::RawM;
    if (s == "centralZ") return MomentKind::CentralZ;
    if (s == "centralW") return MomentKind::CentralW;
    fail(ErrorCode::InvalidArgument, "moment kind must be rawN, rawM, centralZ or centralW, got '" + s + "'");
}

ColorRegime make_regime(std::optional<std::uint32_t> colors, std::optional<double> ratio) {
    if (colors.has_value() == ratio.has_value())
        fail(ErrorCode::InvalidArgument, "give exactly one of colors (fixed) or ratio (growing)");
    if (colors) return regime::Fixed{*colors};
    return regime::Growing{*ratio};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Monochromatic subgraph counts under uniform random colorings";
    m.attr("__version__") = kVersion;

    static py::exception<Error> error(m, "MonochromeError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(py::str(e.what()));
            exc.attr("code") = to_string(e.code());
            PyErr_SetObject(error.ptr(), exc.ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init([](std::size_t n, const std::vector<VertexPair>& edges) { return Graph::from_edge_list(n, edges); }),
             py::arg("n"), py::arg("edges"))
        .def_static("family", [](const std::string& spec) { return generate(parse_family_spec(spec)); },
                    py::arg("spec"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::pair<Vertex, Vertex>> out;
                                   for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
                                   return out;
                               })
        .def("degree", &Graph::degree)
        .def("to_edge_list",
&to_edge_list_text)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
        });

    m.def("count_cycles", &count_cycles, py::arg("graph"), py::arg("length"));
    m.def("count_subgraph", &count_subgraph, py::arg("host"), py::arg("pattern"));
    m.def(
        "tuple_census",
        [](const Graph& g, std::size_t k) {
            std::map<std::string, std::uint64_t> out;
            for (const auto& [key, cls] : count_multigraph_tuples(g, k)) out[cls.pattern.name()] += cls.count;
            return out;
        },
        py::arg("graph"), py::arg("k"));

    m.def("deficiency", &deficiency, py::arg("graph"));
    m.def(
        "gamma",
        [](const Graph& g) {
            const auto sol = gamma(g);
            std::vector<double> phi;
            for (auto h : sol.phi_half) phi.push_back(h / 2.0);
            return py::make_tuple(to_string(sol.gamma), phi);
        },
        py::arg("graph"), "Returns (gamma as 'p/q', phi values).");
    m.def("is_union_of_stars", &is_union_of_stars, py::arg("graph"));

    m.def("eigenvalues", [](const Graph& g) { return eigenvalues(g).eigenvalues; }, py::arg("graph"));
    m.def("usn_ratio", [](const Graph& g) { return eigenvalues(g).usn_ratio(); }, py::arg("graph"));

    m.def(
        "mono_count",
        [](const Graph& g, const std::vector<std::uint32_t>& colors, std::uint32_t c, const std::string& stat) {
            return mono_count(g, colors, c, parse_statistic(stat));
        },
        py::arg("graph"), py::arg("colors"), py::arg("c"), py::arg("stat") = "edges");
    m.def(
        "simulate",
        [](const Graph& g, std::uint32_t c, const std::string& stat, std::size_t samples, std::uint64_t seed,
           std::size_t workers) {
            SimulationRun run;
            {
                py::gil_scoped_release release;
                run = simulate(g, c, parse_statistic(stat), samples, seed, workers);
            }
            return run.counts;
        },
        py::arg("graph"), py::arg("c"), py::arg("stat") = "edges", py::arg("samples") = 10000, py::arg("seed") = 0,
        py::arg("workers") = 1);
    m.def(
        "exact_distribution",
        [](const Graph& g, std::uint32_t c, const std::string& stat) {
            std::map<std::uint64_t, std::string> out;
            for (const auto& [k, p] : exact_distribution(g, c, parse_statistic(stat))) out[k] = to_string(p);
            return out;
        },
        py::arg("graph"), py::arg("c"), py::arg("stat") = "edges");
    m.def("birthday_no_match", &birthday_no_match, py::arg("people"), py::arg("days"));
    m.def("birthday_threshold", &birthday_threshold, py::arg("days"), py::arg("threshold") = 0.5);

    m.def(
        "conditional_moment",
        [](const Graph& g, const std::string& kind, std::size_t order, std::uint64_t c) {
            const auto r = conditional_moment(g, {parse_kind(kind), order, c});
            py::dict d;
            d["unscaled"] = to_string(r.unscaled);
            d["value"] = r.value ? py::object(py::str(to_string(*r.value))) : py::object(py::none());
            d["scale_base"] = to_string(r.scale_base);
            d["scale_exponent"] = to_string(r.scale_exponent);
            d["approx"] = r.approx;
            return d;
        },
        py::arg("graph"), py::arg("kind"), py::arg("order"), py::arg("c"));
    m.def("stirling_moment", [](std::uint64_t edges, std::uint64_t c, std::size_t k) {
        return to_string(stirling_moment(edges, c, k));
    }, py::arg("m"), py::arg("c"), py::arg("k"));
    m.def(
        "fourth_moment_report",
        [](const Graph& g, std::uint64_t c) {
            const auto r = fourth_moment_report(g, c);
            py::dict d;
            d["exact"] = to_string(r.exact);
            d["leading"] = to_string(r.leading);
            d["c4_term"] = to_string(r.c4_term);
            d["remainder"] = to_string(r.remainder);
            d["c4_contribution"] = to_string(r.c4_contribution);
            return d;
        },
        py::arg("graph"), py::arg("c"));

    m.def(
        "limit_for",
        [](const std::string& spec, std::optional<std::uint32_t> colors, std::optional<double> ratio) {
            const auto r = make_regime(colors, ratio);
            const LimitLaw law = looks_like_family_spec(spec) ? limit_for(parse_family_spec(spec, 0), r)
                                                              : limit_for(load_edge_list(spec), r);
            return law_to_json(law).dump();
        },
        py::arg("spec"), py::arg("colors") = py::none(), py::arg("ratio") = py::none(),
        "Law JSON for a family spec or edge-list path.");
    m.def(
        "limit_for_graph",
        [](const Graph& g, std::optional<std::uint32_t> colors, std::optional<double> ratio) {
            return law_to_json(limit_for(g, make_regime(colors, ratio))).dump();
        },
        py::arg("graph"), py::arg("colors") = py::none(), py::arg("ratio") = py::none());
    m.def(
        "sample_law",
        [](const std::string& law_json, std::size_t count, std::uint64_t seed) {
            return sample_law(law_from_json(nlohmann::json::parse(law_json)), count, seed);
        },
        py::arg("law"), py::arg("count"), py::arg("seed") = 0);
    m.def(
        "law_cdf",
        [](const std::string& law_json, double x) { return law_cdf(law_from_json(nlohmann::json::parse(law_json)), x); },
        py::arg("law"), py::arg("x"));
    m.def(
        "law_pmf",
        [](const std::string& law_json, std::int64_t k) { return law_pmf(law_from_json(nlohmann::json::parse(law_json)), k); },
        py::arg("law"), py::arg("k"));
    m.def("weighted_chisq_mgf", &weighted_chisq_mgf, py::arg("weights"), py::arg("dof"), py::arg("t"));
    m.def("delta_conditional_mgf", &delta_conditional_mgf, py::arg("graph"), py::arg("c"), py::arg("t"));
    m.def("gadget_char_function", &gadget_char_function, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("g"),
          py::arg("t"));

    m.def("tv_distance", &tv_distance, py::arg("p"), py::arg("q"));
    m.def(
        "ks_two_sample", [](const std::vector<double>& a, const std::vector<double>& b) { return ks_two_sample(a, b); },
        py::arg("a"), py::arg("b"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<std::string> full{"monochrome"};
            full.insert(full.end(), args.begin(), args.end());
            std::vector<const char*> argv;
            for (const auto& a : full) argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = run_command_line(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs a CLI invocation in-process; returns (exit code, stdout, stderr).");
}
