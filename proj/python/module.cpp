#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphalg/classify.hpp"
#include "graphalg/compare.hpp"
#include "graphalg/elements.hpp"
#include "graphalg/enumerate.hpp"
#include "graphalg/errors.hpp"
#include "graphalg/json_io.hpp"
#include "graphalg/ktheory.hpp"

namespace py = pybind11;
using namespace graphalg;

namespace {

Relation relation_from(const std::string& s) {
    if (s == "iso" || s == "isomorphism") return Relation::isomorphism;
    if (s == "morita") return Relation::morita;
    throw std::invalid_argument("relation must be 'iso' or 'morita'");
}

AlgebraKind algebra_from(const std::string& s) {
    if (s == "leavitt") return AlgebraKind::leavitt;
    if (s == "cstar") return AlgebraKind::cstar;
    throw std::invalid_argument("algebra must be 'leavitt' or 'cstar'");
}

std::vector<std::vector<long long>> matrix_rows(const IntMatrix& m) {
    std::vector<std::vector<long long>> rows(m.rows(), std::vector<long long>(m.cols()));
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j).to_int64();
    return rows;
}

}  // namespace

PYBIND11_MODULE(_graphalg, m) {
    m.doc() = "graph algebra invariants, classification and element arithmetic";

    py::register_exception<ParseError>(m, "DslParseError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

    py::class_<Graph>(m, "Graph")
        .def_static("parse", &Graph::parse, py::arg("dsl"))
        .def("to_dsl", &Graph::to_dsl)
        .def_property_readonly("name", &Graph::name)
        .def_property_readonly("vertices", &Graph::vertices)
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::tuple<std::string, std::string, std::string>> out;
                                   for (const auto& e : g.edges())
                                       out.emplace_back(e.name, g.vertex_name(e.src),
                                                        g.vertex_name(e.dst));
                                   return out;
                               })
        .def("sinks",
             [](const Graph& g) {
                 std::vector<std::string> out;
                 for (auto v : g.sinks()) out.push_back(g.vertex_name(v));
                 return out;
             })
        .def("regular_vertices",
             [](const Graph& g) {
                 std::vector<std::string> out;
                 for (auto v : g.regular_vertices()) out.push_back(g.vertex_name(v));
                 return out;
             })
        .def("sources",
             [](const Graph& g) {
                 std::vector<std::string> out;
                 for (auto v : g.sources()) out.push_back(g.vertex_name(v));
                 return out;
             })
        .def("vertex_matrix", [](const Graph& g) { return matrix_rows(g.vertex_matrix()); })
        .def("simple_cycle_count", [](const Graph& g) { return g.simple_cycles().size(); })
        .def("condition_L", &Graph::condition_L)
        .def("is_cofinal", &Graph::is_cofinal)
        .def("reaches_all_sinks", &Graph::reaches_all_sinks)
        .def("is_acyclic", &Graph::is_acyclic)
        .def("mat_n", &Graph::mat_n, py::arg("n"))
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__",
             [](const Graph& g) {
                 return "<Graph " + g.name() + ": " + std::to_string(g.vertex_count()) +
                        " vertices, " + std::to_string(g.edge_count()) + " edges>";
             });

    m.def("classify_json", [](const Graph& g) { return classification_json(classify(g)).dump(); });
    m.def("invariants_json",
          [](const Graph& g) { return invariants_json(k0(g), k1(g), det_sign(g)).dump(); });
    m.def("stabilized_invariants_json",
          [](const Graph& g) {
              StabilizedGraph s = stabilize(g);
              return invariants_json(k0(s), k1(s), DetSign{}).dump();
          });
    m.def("compare_json",
          [](const Graph& E, const Graph& F, const std::string& rel, const std::string& alg) {
              return verdict_json(compare(E, F, relation_from(rel), algebra_from(alg))).dump();
          },
          py::arg("E"), py::arg("F"), py::arg("relation") = "iso", py::arg("algebra") = "cstar");
    m.def("compare_stabilized_json",
          [](const Graph& E, const Graph& F, const std::string& rel, const std::string& alg) {
              return verdict_json(compare_stabilized(stabilize(E), stabilize(F),
                                                     relation_from(rel), algebra_from(alg)))
                  .dump();
          },
          py::arg("E"), py::arg("F"), py::arg("relation") = "iso", py::arg("algebra") = "cstar");
    m.def("census_json", []() { return census_json(run_census()).dump(); });
    m.def("graphs_isomorphic", &graphs_isomorphic);
    m.def("elem_eval",
          [](const Graph& g, const std::string& expr,
             const std::map<std::string, std::string>& special) {
              auto alg = LeavittAlgebra::make(g, special);
              return alg->print(alg->parse(expr));
          },
          py::arg("graph"), py::arg("expr"),
          py::arg("special_edges") = std::map<std::string, std::string>{});
    m.def("dimension",
          [](const Graph& g) { return LeavittAlgebra::make(g)->dimension().to_string(); });
}
