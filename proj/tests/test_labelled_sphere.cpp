#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "pantsatlas/labelled_sphere.hpp"
#include "pantsatlas/type_census.hpp"
#include "pantsatlas/util.hpp"

using namespace pantsatlas;

namespace {

constexpr Side A = Side::Above;
constexpr Side B = Side::Below;

LabelledTree from_edges(int n_leaves, int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  LabelledTree t;
  t.n_leaves = n_leaves;
  t.adj.assign(size_t(vertex_count), {});
  for (auto [u, v] : edges) {
    t.adj[size_t(u)].push_back(v);
    t.adj[size_t(v)].push_back(u);
  }
  return t;
}

LabelledTree caterpillar5() {
  return from_edges(5, 8, {{0, 5}, {1, 5}, {2, 6}, {3, 7}, {4, 7}, {5, 6}, {6, 7}});
}

std::set<CurveCode> code_set(const std::vector<EdgeCode>& edges) {
  std::set<CurveCode> s;
  for (const auto& e : edges) s.insert(e.code);
  return s;
}

bool pairwise_disjoint(const std::vector<EdgeCode>& edges) {
  for (size_t i = 0; i < edges.size(); ++i)
    for (size_t j = i + 1; j < edges.size(); ++j)
      if (!disjoint(edges[i].code, edges[j].code)) return false;
  return true;
}

}  // namespace

TEST_CASE("census sizes and closed form") {
  CHECK(gen_lambda(4, 2, 2).size() == 11);
  CHECK(gen_lambda(4, 2, 4).size() == 18);
  CHECK(gen_lambda(3, 2, 3).size() == 5);
  CHECK(lambda_closed_form(3) == 5);
  CHECK(lambda_closed_form(4) == 18);
  CHECK(lambda_closed_form(5) == 58);
  for (int n = 3; n <= 10; ++n) CHECK(gen_lambda(n, 2, n).size() == lambda_closed_form(n));
  // The essential family stays under the 3^{n-1} bound.
  for (int n = 4; n <= 10; ++n) CHECK(gen_lambda(n, 2, n - 2).size() < pow3(n - 1));
  CHECK_THROWS_AS(gen_lambda(4, 0, 2), Error);
}

TEST_CASE("required bipartitions") {
  CHECK(required_bipartitions(4) == 3);
  CHECK(required_bipartitions(5) == 10);
  CHECK(required_bipartitions(6) == 25);
  CHECK_THROWS_AS(required_bipartitions(3), Error);

  // The bipartitions induced by internal edges over all trees form exactly
  // that census.
  for (int n = 4; n <= 6; ++n) {
    std::set<uint64_t> seen;
    enum_labelled_trees(n, [&](const LabelledTree& t) {
      for (uint64_t m : tree_splits(t)) seen.insert(m);
    });
    CHECK(seen.size() == required_bipartitions(n));
  }
}

TEST_CASE("recognition traces") {
  // n=4, bipartition {1,2}|{3,4}, root at the {1,2} vertex.
  LabelledTree pair12 = from_edges(4, 6, {{0, 4}, {1, 4}, {2, 5}, {3, 5}, {4, 5}});
  auto r4 = recognize(pair12, 4);
  REQUIRE(r4.codes.size() == 1);
  CHECK(r4.codes[0].code == make_code(4, {3, 4}, {}));
  CHECK(r4.codes[0].parent == 4);
  CHECK(r4.codes[0].child == 5);

  // n=5 caterpillar rooted at the {1,2} cherry.
  auto r5 = recognize(caterpillar5(), 5);
  REQUIRE(r5.codes.size() == 2);
  std::set<CurveCode> expect = {make_code(5, {3, 4, 5}, {}), make_code(5, {4, 5}, {})};
  CHECK(code_set(r5.codes) == expect);
  CHECK(r5.root == 5);
  auto rd = recognize(caterpillar5());  // default root = lowest internal
  CHECK(rd.root == 5);
  CHECK(code_set(rd.codes) == expect);

  // Root with branches {1,4,8}, {2,6}, {3,5,7,9}: the above/below/between stack.
  LabelledTree nine = from_edges(9, 16,
                                 {{9, 10}, {9, 12}, {9, 13},          // root to branch roots
                                  {10, 0}, {10, 11}, {11, 3}, {11, 7},  // S1 = {1,4,8}
                                  {12, 1}, {12, 5},                     // S2 = {2,6}
                                  {13, 2}, {13, 14}, {14, 4}, {14, 15}, {15, 6}, {15, 8}});
  auto r9 = recognize(nine, 9);
  REQUIRE(r9.codes.size() == 6);
  auto got = code_set(r9.codes);
  CHECK(got.count(make_code(9, {1, 4, 8}, {{2, A}, {3, A}, {5, A}, {6, A}, {7, A}})) == 1);
  CHECK(got.count(make_code(9, {2, 6}, {{3, B}, {4, B}, {5, B}})) == 1);
  CHECK(got.count(make_code(9, {3, 5, 7, 9}, {{4, B}, {6, A}, {8, B}})) == 1);
  CHECK(got.count(make_code(9, {4, 8}, {{5, A}, {6, A}, {7, A}})) == 1);
  CHECK(pairwise_disjoint(r9.codes));
  std::vector<CurveCode> nine_codes;
  for (const auto& e : r9.codes) nine_codes.push_back(e.code);
  CHECK(labelled_isomorphic(dual_tree(nine_codes, 9), nine));

  CHECK_THROWS_AS(recognize(pair12, 0), Error);  // leaf root
  LabelledTree bent = from_edges(2, 3, {{0, 2}, {1, 2}});
  CHECK_THROWS_AS(recognize(bent), Error);  // degree-2 internal vertex
}

TEST_CASE("recognition is universal for every tree and root") {
  for (int n = 4; n <= 7; ++n) {
    const auto lambda = gen_lambda(n, 2, n - 2);
    const std::set<CurveCode> lambda_set(lambda.begin(), lambda.end());
    bool all_ok = true;
    enum_labelled_trees(n, [&](const LabelledTree& t) {
      for (int root = t.n_leaves; root < t.vertex_count(); ++root) {
        auto rec = recognize(t, root);
        bool ok = int(rec.codes.size()) == n - 3 && pairwise_disjoint(rec.codes);
        std::vector<CurveCode> codes;
        for (const auto& e : rec.codes) {
          ok = ok && lambda_set.count(e.code) == 1;
          codes.push_back(e.code);
        }
        if (ok && n >= 4) ok = labelled_isomorphic(dual_tree(codes, n), t);
        all_ok = all_ok && ok;
      }
    });
    CHECK(all_ok);
  }
}

TEST_CASE("realize_tree handles pass-throughs, overrides, ambient punctures") {
  // Chain with a degree-2 middle vertex: both edges carry the same curve.
  LabelledTree chain = from_edges(4, 7, {{0, 4}, {1, 4}, {2, 6}, {3, 6}, {4, 5}, {5, 6}});
  RealizeOptions opts;
  opts.root = 4;
  auto codes = realize_tree(chain, opts);
  REQUIRE(codes.size() == 2);
  CHECK(codes[0].code == codes[1].code);
  CHECK(codes[0].code == make_code(4, {3, 4}, {}));
  CHECK(codes[0].parent == 4);
  CHECK(codes[0].child == 5);
  CHECK(codes[1].parent == 5);
  CHECK(codes[1].child == 6);

  // Interleaved labels: the branch role decides the wiggle side.
  LabelledTree cross = from_edges(4, 7, {{0, 4}, {2, 4}, {1, 6}, {3, 6}, {4, 5}, {5, 6}});
  RealizeOptions plain;
  plain.root = 4;
  auto def = realize_tree(cross, plain);
  REQUIRE(def.size() == 2);
  CHECK(def[0].code == make_code(4, {2, 4}, {{3, B}}));  // branch sorts to the Below role
  RealizeOptions forced;
  forced.root = 4;
  forced.role_override[5] = Role::Above;
  auto up = realize_tree(cross, forced);
  REQUIRE(up.size() == 2);
  CHECK(up[0].code == make_code(4, {2, 4}, {{3, A}}));

  RealizeOptions ambient;
  ambient.root = 4;
  ambient.n_punctures = 6;
  auto wide = realize_tree(chain, ambient);
  REQUIRE(wide.size() == 2);
  CHECK(wide[0].code == make_code(6, {3, 4}, {}));

  RealizeOptions dup;
  dup.root = 4;
  dup.role_override[5] = Role::Above;
  dup.role_override[0] = Role::Above;
  CHECK_THROWS_AS(realize_tree(cross, dup), Error);  // duplicate forced role
}

TEST_CASE("universality verification") {
  auto rep6 = verify_universal_labelled(gen_lambda(6, 2, 4), 6);
  CHECK(rep6.total == 105);
  CHECK(rep6.realized == 105);
  CHECK(rep6.universal());

  auto one = verify_universal_labelled({make_code(4, {1, 2}, {})}, 4);
  CHECK(one.total == 3);
  CHECK(one.realized == 1);
  CHECK(one.failures.size() == 2);

  auto none = verify_universal_labelled({}, 4);
  CHECK(none.total == 3);
  CHECK(none.realized == 0);

  // One code per bipartition suffices at n=4 (no disjointness constraints).
  auto picked = verify_universal_labelled(
      {make_code(4, {1, 2}, {}), make_code(4, {1, 3}, {{2, A}}), make_code(4, {1, 4}, {{2, A}, {3, A}})},
      4);
  CHECK(picked.universal());

  CHECK_THROWS_AS(verify_universal_labelled({make_code(5, {1, 2}, {})}, 4), Error);
}

TEST_CASE("minimal family search") {
  auto exact4 = min_family_search(4, true);
  CHECK(exact4.family.size() == 3);
  CHECK(exact4.optimal);
  CHECK(verify_universal_labelled(exact4.family, 4).universal());

  auto greedy4 = min_family_search(4, false);
  CHECK(greedy4.family.size() == 3);
  CHECK(verify_universal_labelled(greedy4.family, 4).universal());

  // n=5 optimum is 11: the 10 one-per-bipartition transversals all fail, one
  // class gets doubled. Frozen as a regression fixture.
  auto exact5 = min_family_search(5, true);
  CHECK(exact5.family.size() == 11);
  CHECK(exact5.optimal);
  CHECK(exact5.family.size() >= required_bipartitions(5));
  CHECK(verify_universal_labelled(exact5.family, 5).universal());

  CHECK_THROWS_AS(min_family_search(6, true), Error);
  CHECK_THROWS_AS(min_family_search(7, false), Error);
  CHECK_THROWS_AS(min_family_search(3, true), Error);

  // A starved budget returns a working family without claiming optimality.
  auto starved = min_family_search(5, true, 3);
  CHECK_FALSE(starved.optimal);
  CHECK(verify_universal_labelled(starved.family, 5).universal());
}
