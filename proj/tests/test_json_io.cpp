#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "pantsatlas/genus.hpp"
#include "pantsatlas/json_io.hpp"
#include "pantsatlas/labelled_sphere.hpp"
#include "pantsatlas/polygon.hpp"
#include "pantsatlas/unlabelled_sphere.hpp"

using namespace pantsatlas;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  REQUIRE(false);
  return Errc::bad_parameters;
}

}  // namespace

TEST_CASE("curve code wire format") {
  const CurveCode c = make_code(6, {2, 6}, {{3, Side::Above}, {4, Side::Above}, {5, Side::Above}});
  const std::string text = to_json(c);
  CHECK(text == R"({"n":6,"s":[2,6],"f":{"3":"above","4":"above","5":"above"}})");
  CHECK(curve_code_from_json(text) == c);

  const CurveCode mixed = make_code(5, {1, 4}, {{2, Side::Below}, {3, Side::Above}});
  CHECK(curve_code_from_json(to_json(mixed)) == mixed);

  CHECK(code_of([] { curve_code_from_json("{"); }) == Errc::parse_error);
  CHECK(code_of([] { curve_code_from_json(R"({"n":4,"s":[1,2]})"); }) == Errc::parse_error);
  CHECK(code_of([] {
          curve_code_from_json(R"({"n":4,"s":[1,2],"f":{},"extra":1})");
        }) == Errc::parse_error);
  CHECK(code_of([] {
          curve_code_from_json(R"({"n":4,"s":[1,3],"f":{"2":"sideways"}})");
        }) == Errc::parse_error);
  CHECK(code_of([] {
          curve_code_from_json(R"({"n":4,"s":[1,3],"f":{"two":"above"}})");
        }) == Errc::parse_error);
  // semantic violations surface as the model's own errors
  CHECK(code_of([] { curve_code_from_json(R"({"n":4,"s":[1,3],"f":{}})"); }) ==
        Errc::bad_wiggle_domain);
  CHECK(code_of([] { curve_code_from_json(R"({"n":4,"s":[5],"f":{}})"); }) == Errc::bad_range);
}

TEST_CASE("cyclic interval and chord graph wire formats") {
  const CyclicInterval a{8, 3, 6};
  CHECK(to_json(a) == R"({"n":8,"i":3,"j":6})");
  CHECK(cyclic_interval_from_json(to_json(a)) == a);
  CHECK(code_of([] { cyclic_interval_from_json(R"({"n":8,"i":3})"); }) == Errc::parse_error);
  CHECK(code_of([] { cyclic_interval_from_json(R"({"n":8,"i":3,"j":3})"); }) == Errc::parse_error);
  CHECK(code_of([] { cyclic_interval_from_json(R"({"n":8,"i":0,"j":4})"); }) == Errc::parse_error);

  const ChordGraph g = make_chord_graph(6, {{1, 3}, {3, 5}, {1, 5}});
  const ChordGraph back = chord_graph_from_json(to_json(g));
  CHECK(back.n == 6);
  CHECK(back.edges == g.edges);
  CHECK(code_of([] { chord_graph_from_json(R"({"n":6,"edges":[[1]]})"); }) == Errc::parse_error);
}

TEST_CASE("concat code wire format") {
  const ConcatCode theta{CurveCode{4, {}, {}}, {Flag::Theta1}};
  const std::string text = to_json(theta);
  CHECK(text == R"({"n":4,"s":[],"f":{},"flags":["theta1"],"separating":false})");
  CHECK(concat_code_from_json(text) == theta);

  const ConcatCode omega{make_code(4, {1, 2}, {}), {Flag::Omega}};
  CHECK(concat_code_from_json(to_json(omega)) == omega);
  CHECK(to_json(omega).find(R"("separating":true)") != std::string::npos);

  for (const ConcatCode& cc : genus2_family(3)) CHECK(concat_code_from_json(to_json(cc)) == cc);

  CHECK(code_of([] {
          concat_code_from_json(R"({"n":4,"s":[],"f":{},"flags":["theta9"],"separating":false})");
        }) == Errc::parse_error);
  CHECK(code_of([] {
          concat_code_from_json(R"({"n":4,"s":[],"f":{},"flags":["theta1"],"separating":true})");
        }) == Errc::parse_error);
  CHECK(code_of([] {
          concat_code_from_json(R"({"n":4,"s":[],"f":{},"flags":[],"separating":true})");
        }) == Errc::parse_error);  // bare code with no handle classes
  CHECK(code_of([] {
          concat_code_from_json(
              R"({"n":4,"s":[],"f":{},"flags":["theta2","theta1"],"separating":true})");
        }) == Errc::parse_error);
}

TEST_CASE("index family wire format") {
  const IndexFamily f = random_index_set(64, 2.0, 7);
  const IndexFamily back = index_family_from_json(to_json(f));
  CHECK(back.n == f.n);
  CHECK(back.s == f.s);
  CHECK(back.seed == f.seed);
  CHECK(back.c == f.c);
  CHECK(back.clamped == f.clamped);

  const IndexFamily tiny = random_index_set(3, 9.0, 1);  // p clamps at 1
  CHECK(tiny.clamped);
  CHECK(index_family_from_json(to_json(tiny)).clamped);

  CHECK(code_of([] { index_family_from_json(R"({"n":8,"s":[0,1],"seed":0})"); }) ==
        Errc::parse_error);
  CHECK(code_of([] { index_family_from_json(R"({"n":8,"s":[1,0],"seed":0,"c":1.0})"); }) ==
        Errc::parse_error);
  CHECK(code_of([] { index_family_from_json(R"({"n":8,"s":[0,9],"seed":0,"c":1.0})"); }) ==
        Errc::parse_error);
}

TEST_CASE("labelled tree wire format") {
  for (int n : {4, 5, 6}) {
    size_t checked = 0;
    enum_labelled_trees(n, [&](const LabelledTree& t) {
      if (++checked > 25) return;
      const LabelledTree back = labelled_tree_from_json(to_json(t));
      CHECK(back.n_leaves == t.n_leaves);
      CHECK(labelled_isomorphic(back, t));
    });
  }
  CHECK(code_of([] { labelled_tree_from_json(R"({"n_leaves":2,"parent":[1,0,-1]})"); }) ==
        Errc::parse_error);  // 2-cycle plus an unreachable root
  CHECK(code_of([] { labelled_tree_from_json(R"({"n_leaves":2,"parent":[-1,-1]})"); }) ==
        Errc::parse_error);
  CHECK(code_of([] { labelled_tree_from_json(R"({"n_leaves":2,"parent":[0,5]})"); }) ==
        Errc::parse_error);
}

TEST_CASE("multigraph and dual graph wire formats") {
  MultiGraph theta;
  theta.n = 2;
  theta.edges = {{1, 0}, {0, 1}, {0, 1}};
  const MultiGraph back = multigraph_from_json(to_json(theta));
  CHECK(back.n == 2);
  CHECK(back.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 1}, {0, 1}});
  CHECK(to_json(back) == R"({"n":2,"edges":[[0,1],[0,1],[0,1]]})");
  CHECK(code_of([] { multigraph_from_json(R"({"n":2,"edges":[[0,2]]})"); }) == Errc::parse_error);

  DualGraph d;
  d.m = 1;
  d.vertices = 2;
  d.edges = {{1, 1}, {1, 0}};
  const DualGraph dback = dual_graph_from_json(to_json(d));
  CHECK(dback.m == 1);
  CHECK(dback.vertices == 2);
  CHECK(dback.edges == d.edges);  // order preserved: recognition picks by index
  CHECK(code_of([] { dual_graph_from_json(R"({"m":3,"vertices":2,"edges":[]})"); }) ==
        Errc::parse_error);
}

TEST_CASE("family files round-trip") {
  SUBCASE("labelled sphere") {
    FamilyFile f;
    f.kind = "labelled_sphere";
    f.n = 4;
    f.codes = gen_lambda(4, 2, 4);
    const FamilyFile back = family_file_from_json(to_json(f));
    CHECK(back.kind == f.kind);
    CHECK(back.n == 4);
    CHECK(back.codes == f.codes);
    CHECK(to_json(back) == to_json(f));
  }
  SUBCASE("unlabelled sphere") {
    FamilyFile f;
    f.kind = "unlabelled_sphere";
    f.n = 16;
    f.index_meta = random_index_set(16, 2.0, 3);
    f.intervals = f.index_meta->curves();
    const FamilyFile back = family_file_from_json(to_json(f));
    CHECK(back.index_meta.has_value());
    CHECK(back.index_meta->s == f.index_meta->s);
    CHECK(back.intervals == f.intervals);
    CHECK(to_json(back) == to_json(f));
  }
  SUBCASE("polygon") {
    FamilyFile f;
    f.kind = "polygon";
    f.n = 6;
    f.edges = all_chords(6).edges;
    const FamilyFile back = family_file_from_json(to_json(f));
    CHECK(back.edges == f.edges);
    CHECK(to_json(back) == to_json(f));
  }
  SUBCASE("genus families") {
    for (const char* kind : {"genus1", "genus2"}) {
      FamilyFile f;
      f.kind = kind;
      f.n = 3;
      f.concat_codes = f.kind == "genus1" ? genus1_family(3) : genus2_family(3);
      const FamilyFile back = family_file_from_json(to_json(f));
      CHECK(back.concat_codes == f.concat_codes);
      CHECK(to_json(back) == to_json(f));
    }
  }
  SUBCASE("closed") {
    FamilyFile f;
    f.kind = "closed";
    f.genus = 2;
    f.n = 4;
    f.codes = closed_universal_family(2).sphere_codes;
    const FamilyFile back = family_file_from_json(to_json(f));
    CHECK(back.genus == 2);
    CHECK(back.codes == f.codes);
    CHECK(to_json(back) == to_json(f));
  }
  SUBCASE("rejections") {
    CHECK(code_of([] { family_file_from_json(R"({"kind":"nonsense","n":3})"); }) ==
          Errc::parse_error);
    CHECK(code_of([] { family_file_from_json(R"({"kind":"labelled_sphere","n":3})"); }) ==
          Errc::parse_error);
    CHECK(code_of([] {
            family_file_from_json(R"({"kind":"polygon","n":3,"edges":[],"codes":[]})");
          }) == Errc::parse_error);
  }
}

TEST_CASE("report and dot exports") {
  CHECK(report_json(10, 9, {"t1"}) == R"({"total":10,"realized":9,"failures":["t1"]})");
  CHECK(report_json(0, 0, {}) == R"({"total":0,"realized":0,"failures":[]})");

  LabelledTree t;
  t.n_leaves = 3;
  t.adj = {{3}, {3}, {3}, {0, 1, 2}};
  const std::string dot = to_dot(t);
  CHECK(dot.find("graph tree {") == 0);
  CHECK(dot.find("v0 [label=\"1\"]") != std::string::npos);
  CHECK(dot.find("v3 [shape=point]") != std::string::npos);
  CHECK(dot.find("v0 -- v3;") != std::string::npos);

  MultiGraph g;
  g.n = 2;
  g.edges = {{0, 0}, {0, 1}, {1, 1}};
  const std::string gd = to_dot(g);
  CHECK(gd.find("v0 -- v0;") != std::string::npos);
  CHECK(gd.find("v0 -- v1;") != std::string::npos);

  DualGraph d;
  d.m = 1;
  d.vertices = 2;
  d.edges = {{1, 1}, {1, 0}};
  const std::string dd = to_dot(d);
  CHECK(dd.find("v0 [label=\"1\"]") != std::string::npos);
  CHECK(dd.find("v1 -- v1;") != std::string::npos);
}
