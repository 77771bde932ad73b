#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resolvdim/error.hpp"
#include "resolvdim/exchange.hpp"
#include "resolvdim/graph.hpp"
#include "resolvdim/intersection.hpp"
#include "resolvdim/linalg.hpp"
#include "resolvdim/report.hpp"
#include "resolvdim/resolving.hpp"
#include "resolvdim/twins.hpp"

namespace py = pybind11;
using namespace resolvdim;

namespace {

std::vector<Vector> vectors_of(const ComponentGraph& g, const VertexSet& w) {
    std::vector<Vector> out;
    for (VertexId v : w) out.push_back(g.space().decode(v));
    return out;
}

}  // namespace

PYBIND11_MODULE(_resolvdim, m) {
    m.doc() = "Metric dimension and exchange property of non-zero component graphs";

    py::register_exception<Error>(m, "ResolvdimError", PyExc_ValueError);

    py::class_<ComponentGraph>(m, "ComponentGraph")
        .def(py::init<std::uint32_t, std::uint32_t, std::uint64_t>(), py::arg("q"), py::arg("n"),
             py::arg("vertex_cap") = kDefaultVertexCap)
        .def_property_readonly("q", &ComponentGraph::q)
        .def_property_readonly("n", &ComponentGraph::n)
        .def_property_readonly("order", &ComponentGraph::order)
        .def("adjacent", &ComponentGraph::is_adjacent)
        .def("distance", &ComponentGraph::checked_distance)
        .def("skeleton", [](const ComponentGraph& g, VertexId v) { return g.skeleton(v).mask; })
        .def("label", &ComponentGraph::label)
        .def("parse", [](const ComponentGraph& g, const std::string& s) { return g.space().parse(s); })
        .def("parse_set", [](const ComponentGraph& g, const std::string& s) { return g.space().parse_set(s); })
        .def("format_set", [](const ComponentGraph& g, const VertexSet& w) { return g.space().format_set(w); })
        .def("open_neighborhood", &ComponentGraph::open_neighborhood)
        .def("closed_neighborhood", &ComponentGraph::closed_neighborhood)
        .def("is_complete", &ComponentGraph::is_complete)
        .def("size_bruteforce", &ComponentGraph::size_bruteforce)
        .def("edges", [](const ComponentGraph& g) { return g.to_plain().edges; });

    m.def("order_formula", &order_formula);
    m.def("size_formula", &size_formula);
    m.def("metric_dimension_formula", &metric_dimension_formula);

    m.def("is_resolving", [](const ComponentGraph& g, const VertexSet& w) { return is_resolving(g, w); });
    m.def("is_minimal", [](const ComponentGraph& g, const VertexSet& w) { return is_minimal(g, w); });
    m.def("resolving_report_json",
          [](const ComponentGraph& g, const VertexSet& w) { return to_json(g, resolving_report(g, w)).dump(); });
    m.def("canonical_basis", &canonical_basis);
    m.def(
        "metric_dimension_search",
        [](const ComponentGraph& g, std::uint64_t budget, unsigned workers) {
            py::gil_scoped_release release;
            const auto r = metric_dimension_search(g, SearchOptions{budget, workers});
            return std::make_pair(r.dimension, r.witness);
        },
        py::arg("graph"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);
    m.def(
        "enumerate_minimal_resolving_sets",
        [](const ComponentGraph& g, std::uint32_t size_cap, std::uint64_t budget) {
            return enumerate_minimal_resolving_sets(g, size_cap, SearchOptions{budget, 1});
        },
        py::arg("graph"), py::arg("size_cap"), py::arg("budget") = kDefaultBudget);

    m.def("twin_classes", [](const ComponentGraph& g) {
        std::vector<VertexSet> out;
        for (const auto& c : partition_by_neighborhood(g).classes) out.push_back(c.members);
        return out;
    });
    m.def("partitions_coincide", &partitions_coincide);

    m.def("contains_v_basis",
          [](const ComponentGraph& g, const VertexSet& w) { return contains_v_basis(g.space().field(), g.n(), vectors_of(g, w)); });

    m.def(
        "exchange_report_json",
        [](const ComponentGraph& g, std::uint64_t budget, bool allow_theorem) {
            const auto r = has_exchange_property(g, ExchangeOptions{SearchOptions{budget, 1}, allow_theorem});
            return to_json(g, r).dump();
        },
        py::arg("graph"), py::arg("budget") = kDefaultBudget, py::arg("allow_theorem") = false);
    m.def("vn_minus_one_set", py::overload_cast<std::uint32_t>(&vn_minus_one_set));
    m.def("non_exchange_witness", &non_exchange_witness);

    m.def("check_q2_correspondence", &check_q2_correspondence);
    m.def("dim_of_powerset_intersection", &dim_of_powerset_intersection, py::arg("n"),
          py::arg("budget") = kDefaultBudget, py::arg("workers") = 1);
    m.def("intersection_edges", [](const std::vector<std::vector<std::string>>& members) {
        return intersection_graph(SetFamily::from_tokens(members)).edges;
    });
    m.def("realize_as_intersection_family", [](std::uint32_t order, const std::vector<Edge>& edges) {
        const auto fam = realize_as_intersection_family(PlainGraph::from_edges(order, edges));
        std::vector<std::vector<std::string>> out;
        for (std::size_t i = 0; i < fam.size(); ++i) out.push_back(fam.member_tokens(i));
        return out;
    });

    m.def(
        "verify_json",
        [](const std::vector<std::uint32_t>& qs, const std::vector<std::uint32_t>& ns, std::uint64_t budget,
           unsigned workers, std::uint64_t seed) {
            RunConfig cfg;
            cfg.qs = qs;
            cfg.ns = ns;
            cfg.budget = budget;
            cfg.workers = workers;
            cfg.seed = seed;
            VerificationReport report;
            {
                py::gil_scoped_release release;
                report = run_verify(cfg);
            }
            return to_json(report).dump();
        },
        py::arg("qs"), py::arg("ns"), py::arg("budget") = kDefaultBudget, py::arg("workers") = 1,
        py::arg("seed") = 0);
}
