// Python bindings. Results come back as the same records the CLI prints,
// decoded with the json module so field names and order match exactly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "parsig/errors.hpp"
#include "parsig/families.hpp"
#include "parsig/graph.hpp"
#include "parsig/graph6.hpp"
#include "parsig/report.hpp"
#include "parsig/rna.hpp"
#include "parsig/signs.hpp"
#include "parsig/verifier.hpp"

namespace py = pybind11;
using namespace parsig;

namespace {

py::object to_python(const Record& r) {
    // Not cached in a static: it would outlive the interpreter at shutdown.
    return py::module_::import("json").attr("loads")(r.dump());
}

SignedGraph signed_graph(const Graph& g, const std::string& signs) {
    return SignedGraph(g, parse_signs(signs));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Parity labelings, rna numbers and signed-graph balance";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    auto input = py::register_exception<InputError>(m, "InputError", base.ptr());
    py::register_exception<MalformedRecordError>(m, "MalformedRecordError", input.ptr());
    auto capacity = py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
    py::register_exception<UnsupportedSizeError>(m, "UnsupportedSizeError", capacity.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 Graph g(n);
                 for (const auto& [u, v] : edges) g.add_edge(u, v);
                 return g;
             }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_static("from_graph6", [](const std::string& text) { return parse_graph6(text); })
        .def("to_graph6", &write_graph6)
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("edges",
             [](const Graph& g) {
                 std::vector<std::pair<int, int>> out;
                 for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                 return out;
             })
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("is_connected", [](const Graph& g) { return is_connected(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph('" + write_graph6(g) + "')"; });

    m.def("family", [](const std::string& spec) { return build_family(parse_family(spec)); },
          py::arg("spec"), "Build a named family, e.g. 'cycle:6' or 'complete_bipartite:2,3'.");
    m.def("enumerate_connected", &enumerate_connected, py::arg("n"));

    m.def(
        "rna",
        [](const Graph& g, int exact_limit) {
            const SolverLimits limits{exact_limit};
            return to_python(rna_record(g, rna_exact(g, limits), sigma_spectrum(g, limits), std::nullopt));
        },
        py::arg("graph"), py::arg("exact_limit") = kDefaultExactLimit);
    m.def(
        "rna_heuristic",
        [](const Graph& g, std::uint64_t seed, int restarts) {
            return to_python(rna_record(g, rna_heuristic(g, seed, restarts), std::nullopt, seed));
        },
        py::arg("graph"), py::arg("seed") = kDefaultSeed, py::arg("restarts") = kDefaultRestarts);
    m.def(
        "spectrum",
        [](const Graph& g, int exact_limit) {
            return to_python(spectrum_record(g, sigma_spectrum(g, SolverLimits{exact_limit})));
        },
        py::arg("graph"), py::arg("exact_limit") = kDefaultExactLimit);
    m.def(
        "adhika", [](const Graph& g, int exact_limit) { return adhika(g, SolverLimits{exact_limit}); },
        py::arg("graph"), py::arg("exact_limit") = kDefaultExactLimit);

    m.def("closed_form_rna", [](const std::string& spec) { return closed_form_rna(parse_family(spec)); });
    m.def("proof_labeling",
          [](const std::string& spec) { return proof_labeling(parse_family(spec)).labels(); });

    m.def(
        "induce_signs",
        [](const Graph& g, std::vector<int> labels) {
            return sign_string(induce_signs(g, Labeling(std::move(labels))));
        },
        py::arg("graph"), py::arg("labels"), "One '+'/'-' per edge, in graph6 edge order.");
    m.def(
        "is_balanced",
        [](const Graph& g, const std::string& signs) { return is_balanced(signed_graph(g, signs)).has_value(); },
        py::arg("graph"), py::arg("signs"));
    m.def(
        "parity_realization",
        [](const Graph& g, const std::string& signs) -> std::optional<std::vector<int>> {
            const auto f = is_parity_realizable(signed_graph(g, signs));
            if (!f) return std::nullopt;
            return f->labels();
        },
        py::arg("graph"), py::arg("signs"), "A labeling inducing the signs, or None.");

    m.def(
        "verify",
        [](int max_n) {
            py::list out;
            for (const TheoremCheck& c : verify_theorems(max_n)) out.append(to_python(theorem_record(c)));
            return out;
        },
        py::arg("max_n") = kMaxVerifyOrder);
    m.def(
        "scan",
        [](int max_n) {
            const ScanResult r = conjecture_scan_enumerated(max_n);
            py::list records;
            for (const ConjectureRecord& rec : r.records) records.append(to_python(conjecture_record(rec)));
            py::dict out;
            out["records"] = records;
            out["summary"] = to_python(summary_record(r.summary));
            return out;
        },
        py::arg("max_n"), "Spectrum scan over every connected graph with n <= max_n.");
}
