// Python surface over the C++ core: code model, censuses, recognitions,
// family constructors and verifiers. Streaming enumerators are materialized
// into lists; sizes are small enough at the n this module is used for.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <map>

#include "pantsatlas/curve_model.hpp"
#include "pantsatlas/genus.hpp"
#include "pantsatlas/labelled_sphere.hpp"
#include "pantsatlas/polygon.hpp"
#include "pantsatlas/type_census.hpp"
#include "pantsatlas/unlabelled_sphere.hpp"

namespace py = pybind11;
using namespace pantsatlas;

PYBIND11_MODULE(_pantsatlas, m) {
  m.doc() = "universal curve families on punctured spheres and low-genus surfaces";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "Error");

  // --- curve model ------------------------------------------------------------

  py::enum_<Side>(m, "Side")
      .value("above", Side::Above)
      .value("below", Side::Below);

  py::class_<CurveCode>(m, "CurveCode")
      .def_readonly("n", &CurveCode::n)
      .def_readonly("s", &CurveCode::s)
      .def_readonly("f", &CurveCode::f)
      .def("encloses", &CurveCode::encloses, py::arg("j"))
      .def("wiggle_at", &CurveCode::wiggle_at, py::arg("j"))
      .def("essential", &CurveCode::essential)
      .def("str", &CurveCode::str)
      .def("__repr__", &CurveCode::str)
      .def("__eq__", [](const CurveCode& a, const CurveCode& b) { return a == b; })
      .def("__lt__", [](const CurveCode& a, const CurveCode& b) { return a < b; })
      .def("__hash__",
           [](const CurveCode& c) { return std::hash<std::string>{}(c.str()) ^ size_t(c.n); });

  m.def("make_code", &make_code, py::arg("n"), py::arg("s"),
        py::arg("f") = std::map<int, Side>{});
  m.def("gen_codes", &gen_codes, py::arg("n"), py::arg("min_size"), py::arg("max_size"));
  m.def("disjoint", &disjoint, py::arg("a"), py::arg("b"));
  m.def("strand_oracle", &strand_oracle, py::arg("a"), py::arg("b"));

  py::class_<CyclicInterval>(m, "CyclicInterval")
      .def_readonly("n", &CyclicInterval::n)
      .def_readonly("i", &CyclicInterval::i)
      .def_readonly("j", &CyclicInterval::j)
      .def("enclosed", &CyclicInterval::enclosed)
      .def("mask", &CyclicInterval::mask)
      .def("__eq__", [](const CyclicInterval& a, const CyclicInterval& b) { return a == b; })
      .def("__repr__", [](const CyclicInterval& a) {
        return "gamma(" + std::to_string(a.i) + "," + std::to_string(a.j) + ";n=" +
               std::to_string(a.n) + ")";
      });

  m.def("make_interval", &make_interval, py::arg("n"), py::arg("i"), py::arg("j"));
  m.def("cyclic_disjoint", &cyclic_disjoint, py::arg("a"), py::arg("b"));

  py::class_<LabelledTree>(m, "LabelledTree")
      .def(py::init([](int n_leaves, const std::vector<std::pair<int, int>>& edges) {
             LabelledTree t;
             t.n_leaves = n_leaves;
             int vmax = n_leaves - 1;
             for (auto [u, v] : edges) vmax = std::max({vmax, u, v});
             t.adj.assign(size_t(vmax) + 1, {});
             for (auto [u, v] : edges) {
               t.adj[size_t(u)].push_back(v);
               t.adj[size_t(v)].push_back(u);
             }
             return t;
           }),
           py::arg("n_leaves"), py::arg("edges"))
      .def_readonly("n_leaves", &LabelledTree::n_leaves)
      .def_readonly("adj", &LabelledTree::adj)
      .def("vertex_count", &LabelledTree::vertex_count)
      .def("is_leaf", &LabelledTree::is_leaf, py::arg("v"))
      .def("degree", &LabelledTree::degree, py::arg("v"));

  m.def("tree_splits", &tree_splits, py::arg("t"));
  m.def("labelled_isomorphic", &labelled_isomorphic, py::arg("a"), py::arg("b"));
  m.def("region_tree", &region_tree, py::arg("sets"), py::arg("n"));
  m.def("dual_tree", &dual_tree, py::arg("codes"), py::arg("n"));
  m.def("dual_tree_cyclic", &dual_tree_cyclic, py::arg("arcs"), py::arg("n"));

  // --- type census ------------------------------------------------------------

  m.def("count_labelled_trees", &count_labelled_trees, py::arg("n"));
  m.def("all_labelled_trees", &all_labelled_trees, py::arg("n"));
  m.def("canonical_unlabelled", &canonical_unlabelled, py::arg("t"));
  m.def("enum_unlabelled_classes", &enum_unlabelled_classes, py::arg("n"));

  py::class_<PantsType>(m, "PantsType")
      .def_readonly("k1", &PantsType::k1)
      .def_readonly("k2", &PantsType::k2)
      .def_readonly("k3", &PantsType::k3)
      .def("__eq__", [](const PantsType& a, const PantsType& b) { return a == b; })
      .def("__lt__", [](const PantsType& a, const PantsType& b) { return a < b; })
      .def("__hash__",
           [](const PantsType& t) { return py::hash(py::make_tuple(t.k1, t.k2, t.k3)); })
      .def("__repr__", [](const PantsType& t) {
        return "(" + std::to_string(t.k1) + "," + std::to_string(t.k2) + "," +
               std::to_string(t.k3) + ")";
      });

  m.def("make_pants_type", &make_pants_type, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("enum_pants_types", &enum_pants_types, py::arg("n"), py::arg("essential_only") = true);
  m.def("internal_edges", &internal_edges, py::arg("t"));
  m.def("edge_leafset", &edge_leafset, py::arg("t"), py::arg("u"), py::arg("v"));
  m.def("build_Ti", &build_Ti, py::arg("n"), py::arg("i"));
  m.def("count_separating_edges", &count_separating_edges, py::arg("t"), py::arg("i"));
  m.def("lower_bound_sum", &lower_bound_sum, py::arg("n"));

  py::class_<MultiGraph>(m, "MultiGraph")
      .def(py::init([](int n, std::vector<std::pair<int, int>> edges) {
             MultiGraph g;
             g.n = n;
             g.edges = std::move(edges);
             return g;
           }),
           py::arg("n"), py::arg("edges"))
      .def_readonly("n", &MultiGraph::n)
      .def_readonly("edges", &MultiGraph::edges)
      .def("degree", &MultiGraph::degree, py::arg("v"))
      .def("connected", &MultiGraph::connected)
      .def("cyclomatic", &MultiGraph::cyclomatic)
      .def("__eq__", [](const MultiGraph& a, const MultiGraph& b) { return a == b; });

  m.def("enum_dual_graphs", &enum_dual_graphs, py::arg("g"));

  // --- labelled sphere ----------------------------------------------------------

  py::enum_<Role>(m, "Role")
      .value("above", Role::Above)
      .value("below", Role::Below)
      .value("between", Role::Between);

  m.def("gen_lambda", &gen_lambda, py::arg("n"), py::arg("min_size"), py::arg("max_size"));
  m.def("lambda_closed_form", &lambda_closed_form, py::arg("n"));
  m.def("required_bipartitions", &required_bipartitions, py::arg("n"));

  py::class_<EdgeCode>(m, "EdgeCode")
      .def_readonly("parent", &EdgeCode::parent)
      .def_readonly("child", &EdgeCode::child)
      .def_readonly("code", &EdgeCode::code)
      .def("__repr__", [](const EdgeCode& e) {
        return "(" + std::to_string(e.parent) + "->" + std::to_string(e.child) + ": " +
               e.code.str() + ")";
      });

  m.def(
      "realize_tree",
      [](const LabelledTree& t, int root, const std::map<int, Side>& context,
         const std::map<int, Role>& role_override, int n_punctures) {
        RealizeOptions o;
        o.root = root;
        o.context = context;
        o.role_override = role_override;
        o.n_punctures = n_punctures;
        return realize_tree(t, o);
      },
      py::arg("t"), py::arg("root") = -1, py::arg("context") = std::map<int, Side>{},
      py::arg("role_override") = std::map<int, Role>{}, py::arg("n_punctures") = -1);

  py::class_<RecognitionResult>(m, "RecognitionResult")
      .def_readonly("root", &RecognitionResult::root)
      .def_readonly("codes", &RecognitionResult::codes);

  m.def("recognize", &recognize, py::arg("t"), py::arg("root") = -1);

  py::class_<VerifyReport>(m, "VerifyReport")
      .def_readonly("total", &VerifyReport::total)
      .def_readonly("realized", &VerifyReport::realized)
      .def_readonly("failures", &VerifyReport::failures)
      .def("universal", &VerifyReport::universal);

  m.def("verify_universal_labelled", &verify_universal_labelled, py::arg("family"), py::arg("n"));

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("family", &SearchResult::family)
      .def_readonly("optimal", &SearchResult::optimal);

  m.def("min_family_search", &min_family_search, py::arg("n"), py::arg("exact"),
        py::arg("budget") = uint64_t(200000000));

  // --- unlabelled sphere ----------------------------------------------------------

  py::class_<IndexFamily>(m, "IndexFamily")
      .def_readonly("n", &IndexFamily::n)
      .def_readonly("s", &IndexFamily::s)
      .def_readonly("seed", &IndexFamily::seed)
      .def_readonly("c", &IndexFamily::c)
      .def_readonly("clamped", &IndexFamily::clamped)
      .def("curves", &IndexFamily::curves)
      .def("family_size", &IndexFamily::family_size);

  m.def("random_index_set", &random_index_set, py::arg("n"), py::arg("c"), py::arg("seed"));
  m.def("covers_pants_types", &covers_pants_types, py::arg("fam"),
        py::arg("essential_only") = true);
  m.def("greedy_index_set", &greedy_index_set, py::arg("n"), py::arg("essential_only") = true);
  m.def("exact_min_index_set", &exact_min_index_set, py::arg("n"));
  m.def("all_pairs_family", &all_pairs_family, py::arg("n"));
  m.def("realize_unlabelled_tree", &realize_unlabelled_tree, py::arg("cls"), py::arg("n"));

  py::class_<UnlabelledReport>(m, "UnlabelledReport")
      .def_readonly("total", &UnlabelledReport::total)
      .def_readonly("realized", &UnlabelledReport::realized)
      .def_readonly("failures", &UnlabelledReport::failures);

  m.def("verify_universal_unlabelled", &verify_universal_unlabelled, py::arg("fam"), py::arg("n"),
        py::arg("budget") = uint64_t(50000000));

  // --- polygon ----------------------------------------------------------------------

  py::class_<ChordGraph>(m, "ChordGraph")
      .def_readonly("n", &ChordGraph::n)
      .def_readonly("edges", &ChordGraph::edges)
      .def("has_edge", &ChordGraph::has_edge, py::arg("u"), py::arg("v"));

  m.def("make_chord_graph", &make_chord_graph, py::arg("n"), py::arg("edges"));
  m.def("all_chords", &all_chords, py::arg("n"));
  m.def("random_edge_set", &random_edge_set, py::arg("n"), py::arg("c"), py::arg("seed"));

  py::class_<TriangleType>(m, "TriangleType")
      .def_readonly("k1", &TriangleType::k1)
      .def_readonly("k2", &TriangleType::k2)
      .def_readonly("k3", &TriangleType::k3)
      .def("__eq__", [](const TriangleType& a, const TriangleType& b) { return a == b; })
      .def("__hash__",
           [](const TriangleType& t) { return py::hash(py::make_tuple(t.k1, t.k2, t.k3)); })
      .def("__repr__", [](const TriangleType& t) {
        return "(" + std::to_string(t.k1) + "," + std::to_string(t.k2) + "," +
               std::to_string(t.k3) + ")";
      });

  m.def("enum_triangle_types", &enum_triangle_types, py::arg("n"));
  m.def("covers_triangle_types", &covers_triangle_types, py::arg("g"));
  m.def("count_triangles", &count_triangles, py::arg("g"));
  m.def("count_cycles", &count_cycles, py::arg("g"), py::arg("ell"));
  m.def("canonical_cycle_type", &canonical_cycle_type, py::arg("gaps"));
  m.def("covered_cycle_types", &covered_cycle_types, py::arg("g"), py::arg("ell"));

  py::class_<CertificateReport>(m, "CertificateReport")
      .def_readonly("realized_types", &CertificateReport::realized_types)
      .def_readonly("cycle_count", &CertificateReport::cycle_count)
      .def_readonly("edge_bound", &CertificateReport::edge_bound)
      .def_readonly("edges", &CertificateReport::edges)
      .def_readonly("satisfied", &CertificateReport::satisfied);

  m.def("certificate_lower_bound", &certificate_lower_bound, py::arg("g"),
        py::arg("realized_types"), py::arg("ell"));
  m.def("enum_triangulations", &enum_triangulations, py::arg("n"));
  m.def("triangulation_class", &triangulation_class, py::arg("n"), py::arg("t"));
  m.def("enum_triangulation_classes", &enum_triangulation_classes, py::arg("n"));

  py::class_<TriangulationReport>(m, "TriangulationReport")
      .def_readonly("total", &TriangulationReport::total)
      .def_readonly("realized", &TriangulationReport::realized)
      .def_readonly("failures", &TriangulationReport::failures);

  m.def("verify_universal_triangulations", &verify_universal_triangulations, py::arg("g"));

  // --- genus ------------------------------------------------------------------------

  py::class_<CutSystem>(m, "CutSystem")
      .def_readonly("g", &CutSystem::g)
      .def_readonly("cotree", &CutSystem::cotree)
      .def_readonly("tree", &CutSystem::tree)
      .def_readonly("matching", &CutSystem::matching);

  m.def("cut_system", &cut_system, py::arg("g"));

  py::class_<ClosedFamily>(m, "ClosedFamily")
      .def_readonly("g", &ClosedFamily::g)
      .def_readonly("sphere_codes", &ClosedFamily::sphere_codes)
      .def("size", &ClosedFamily::size)
      .def("bound", &ClosedFamily::bound);

  m.def("closed_universal_family", &closed_universal_family, py::arg("g"));
  m.def("realize_closed_type", &realize_closed_type, py::arg("g"));
  m.def("counting_lower_bound", &counting_lower_bound, py::arg("g"));

  py::class_<DualGraph>(m, "DualGraph")
      .def(py::init([](int m_, int vertices, std::vector<std::pair<int, int>> edges) {
             DualGraph g;
             g.m = m_;
             g.vertices = vertices;
             g.edges = std::move(edges);
             return g;
           }),
           py::arg("m"), py::arg("vertices"), py::arg("edges"))
      .def_readonly("m", &DualGraph::m)
      .def_readonly("vertices", &DualGraph::vertices)
      .def_readonly("edges", &DualGraph::edges)
      .def("degree", &DualGraph::degree, py::arg("v"))
      .def("connected", &DualGraph::connected)
      .def("cyclomatic", &DualGraph::cyclomatic)
      .def("is_leaf", &DualGraph::is_leaf, py::arg("v"));

  py::enum_<Flag>(m, "Flag")
      .value("theta1", Flag::Theta1)
      .value("theta2", Flag::Theta2)
      .value("theta3", Flag::Theta3)
      .value("omega", Flag::Omega);

  py::class_<ConcatCode>(m, "ConcatCode")
      .def_readonly("planar", &ConcatCode::planar)
      .def_readonly("flags", &ConcatCode::flags)
      .def("separating", &ConcatCode::separating)
      .def("above_all", &ConcatCode::above_all)
      .def("below_all", &ConcatCode::below_all)
      .def("str", &ConcatCode::str)
      .def("__repr__", &ConcatCode::str)
      .def("__eq__", [](const ConcatCode& a, const ConcatCode& b) { return a == b; })
      .def("__lt__", [](const ConcatCode& a, const ConcatCode& b) { return a < b; })
      .def("__hash__", [](const ConcatCode& c) { return std::hash<std::string>{}(c.str()); });

  m.def("genus1_family", &genus1_family, py::arg("m"));
  m.def("genus2_family", &genus2_family, py::arg("m"));

  py::class_<GenusRecognition>(m, "GenusRecognition")
      .def_readonly("edges", &GenusRecognition::edges)
      .def_readonly("codes", &GenusRecognition::codes);

  m.def("genus1_recognize", &genus1_recognize, py::arg("g"));
  m.def(
      "genus1_verify_structural",
      [](const GenusRecognition& rec, const DualGraph& g) {
        std::string diag;
        const bool ok = genus1_verify_structural(rec, g, &diag);
        return py::make_tuple(ok, diag);
      },
      py::arg("rec"), py::arg("g"));
  m.def("genus2_recognize", &genus2_recognize, py::arg("g"));

  m.def(
      "enum_unicyclic_duals",
      [](int m_) {
        std::vector<DualGraph> out;
        enum_unicyclic_duals(m_, [&](const DualGraph& g) { out.push_back(g); });
        return out;
      },
      py::arg("m"));
  m.def(
      "enum_cyclomatic2_duals",
      [](int m_) {
        std::vector<DualGraph> out;
        enum_cyclomatic2_duals(m_, [&](const DualGraph& g) { out.push_back(g); });
        return out;
      },
      py::arg("m"));
}
