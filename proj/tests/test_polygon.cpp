#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "pantsatlas/polygon.hpp"
#include "pantsatlas/util.hpp"

using namespace pantsatlas;

namespace {

ChordGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v <= n; ++v) e.push_back({v, v % n + 1});
  return make_chord_graph(n, e);
}

ChordGraph random_graph(int n, double q, uint64_t seed) {
  std::vector<std::pair<int, int>> e;
  uint64_t idx = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v, ++idx)
      if (keyed_uniform(seed, idx) < q) e.push_back({u, v});
  return make_chord_graph(n, e);
}

uint64_t brute_triangles(const ChordGraph& g) {
  uint64_t c = 0;
  for (int u = 1; u <= g.n; ++u)
    for (int v = u + 1; v <= g.n; ++v)
      for (int w = v + 1; w <= g.n; ++w)
        if (g.has_edge(u, v) && g.has_edge(v, w) && g.has_edge(u, w)) ++c;
  return c;
}

// closed walks on distinct vertices, each cycle hit once per direction and
// starting corner, hence the 2*ell division
uint64_t brute_cycles(const ChordGraph& g, int ell) {
  uint64_t walks = 0;
  std::vector<char> used(size_t(g.n) + 1, 0);
  std::vector<int> path;
  std::function<void()> dfs = [&]() {
    int v = path.back();
    if (int(path.size()) == ell) {
      if (g.has_edge(v, path.front())) ++walks;
      return;
    }
    for (int w = 1; w <= g.n; ++w) {
      if (used[size_t(w)] || !g.has_edge(v, w)) continue;
      used[size_t(w)] = 1;
      path.push_back(w);
      dfs();
      path.pop_back();
      used[size_t(w)] = 0;
    }
  };
  for (int s = 1; s <= g.n; ++s) {
    used[size_t(s)] = 1;
    path.assign(1, s);
    dfs();
    used[size_t(s)] = 0;
  }
  return walks / uint64_t(2 * ell);
}

std::set<TriangleType> covered_triangle_set(const ChordGraph& g) {
  std::set<TriangleType> out;
  for (const auto& t : enum_triangle_types(g.n)) out.insert(t);
  for (const auto& t : covers_triangle_types(g)) out.erase(t);
  return out;
}

bool diagonals_cross(std::pair<int, int> a, std::pair<int, int> b) {
  auto [p, q] = a;
  auto [r, s] = b;
  return (p < r && r < q && q < s) || (r < p && p < s && s < q);
}

}  // namespace

TEST_CASE("chord graph construction") {
  auto g = make_chord_graph(6, {{4, 1}, {2, 5}});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 4}, {2, 5}});
  CHECK(g.has_edge(4, 1));
  CHECK(!g.has_edge(1, 2));

  CHECK(all_chords(6).edges.size() == 15);
  CHECK(all_chords(3).edges.size() == 3);
  CHECK(all_chords(4).edges.size() == 6);

  CHECK_THROWS_AS(make_chord_graph(5, {{1, 1}}), Error);          // loop
  CHECK_THROWS_AS(make_chord_graph(5, {{1, 2}, {2, 1}}), Error);  // duplicate
  CHECK_THROWS_AS(make_chord_graph(5, {{0, 2}}), Error);
  CHECK_THROWS_AS(make_chord_graph(5, {{1, 6}}), Error);
  CHECK_THROWS_AS(make_chord_graph(2, {}), Error);
}

TEST_CASE("random edge sets mirror the index sampler") {
  auto g1 = random_edge_set(200, 2.0, 11);
  auto g2 = random_edge_set(200, 2.0, 11);
  CHECK(g1.edges == g2.edges);
  CHECK(random_edge_set(200, 2.0, 12).edges != g1.edges);

  // clamped p = 1 gives the complete graph
  CHECK(random_edge_set(10, 50.0, 3).edges == all_chords(10).edges);

  CHECK_THROWS_AS(random_edge_set(10, 0.0, 1), Error);
  CHECK_THROWS_AS(random_edge_set(10, -1.0, 1), Error);
  CHECK_THROWS_AS(random_edge_set(2, 1.0, 1), Error);

  // the tuned-constant experiment fixture: full triangle-type coverage
  auto big = random_edge_set(1000, 2.0, 7);
  CHECK(covers_triangle_types(big).empty());
  double bound = 8 * std::pow(1000.0, 4.0 / 3.0) * std::pow(std::log(1000.0), 2.0 / 3.0);
  CHECK(double(big.edges.size()) <= bound);
}

TEST_CASE("triangle types and coverage") {
  auto t10 = enum_triangle_types(10);
  CHECK(t10.size() == 8);
  CHECK(t10.front() == TriangleType{0, 0, 7});
  CHECK(t10.back() == TriangleType{2, 2, 3});

  // the census is the partitions of n-3 into at most 3 parts
  for (int n = 3; n <= 30; ++n) {
    int parts = 0;
    for (int a = 0; a <= n - 3; ++a)
      for (int b = a; a + b <= n - 3; ++b)
        if (n - 3 - a - b >= b) ++parts;
    CHECK(enum_triangle_types(n).size() == size_t(parts));
  }

  // corner triangle {1,2,3}: all gaps sit on the far arc
  auto corner = make_chord_graph(9, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(covered_triangle_set(corner) == std::set<TriangleType>{{0, 0, 6}});

  CHECK(covers_triangle_types(cycle_graph(6)).size() == enum_triangle_types(6).size());
  CHECK(covers_triangle_types(all_chords(10)).empty());
}

TEST_CASE("triangle and cycle counters match brute force") {
  CHECK(count_triangles(all_chords(4)) == 4);
  CHECK(count_triangles(cycle_graph(5)) == 0);
  CHECK(count_triangles(all_chords(6)) == 20);

  CHECK(count_cycles(all_chords(4), 4) == 3);
  CHECK(count_cycles(cycle_graph(6), 6) == 1);
  CHECK(count_cycles(cycle_graph(6), 5) == 0);
  CHECK(count_cycles(all_chords(5), 3) == 10);

  CHECK_THROWS_AS(count_cycles(all_chords(5), 2), Error);
  CHECK_THROWS_AS(count_cycles(all_chords(5), 9), Error);

  for (uint64_t seed = 0; seed < 100; ++seed) {
    auto g = random_graph(12, 0.25 + 0.5 * double(seed % 4) / 4, seed);
    CHECK(count_triangles(g) == brute_triangles(g));
    CHECK(count_cycles(g, 3) == count_triangles(g));
    for (int ell = 3; ell <= 6; ++ell) CHECK(count_cycles(g, ell) == brute_cycles(g, ell));
  }
  for (uint64_t seed = 0; seed < 10; ++seed) {
    auto g = random_graph(10, 0.5, 1000 + seed);
    for (int ell = 7; ell <= 8; ++ell) CHECK(count_cycles(g, ell) == brute_cycles(g, ell));
  }
}

TEST_CASE("cycle types: canonical form and convex coverage") {
  CHECK(canonical_cycle_type({2, 0, 1}) == std::vector<int>{0, 1, 2});
  CHECK(canonical_cycle_type({0, 2, 1, 3}) == std::vector<int>{0, 2, 1, 3});
  CHECK(canonical_cycle_type({3, 1, 2, 0}) == std::vector<int>{0, 2, 1, 3});  // reflection
  CHECK(canonical_cycle_type({0, 0, 0}) == std::vector<int>{0, 0, 0});
  CHECK_THROWS_AS(canonical_cycle_type({1, 2}), Error);
  CHECK_THROWS_AS(canonical_cycle_type({1, -1, 2}), Error);

  CHECK(covered_cycle_types(cycle_graph(6), 6) == 1);
  CHECK(covered_cycle_types(all_chords(6), 3) == 3);
  CHECK(covered_cycle_types(all_chords(6), 4) == 3);  // (0,0,0,2),(0,0,1,1),(0,1,0,1)
  CHECK(covered_cycle_types(all_chords(6), 6) == 1);
  CHECK(covered_cycle_types(cycle_graph(6), 4) == 0);
}

TEST_CASE("counting certificates") {
  auto rep = certificate_lower_bound(all_chords(10), 8, 3);
  CHECK(rep.realized_types == 8);
  CHECK(rep.cycle_count == 120);
  CHECK(rep.edges == 45);
  CHECK(rep.edge_bound == doctest::Approx(4.0));
  CHECK(rep.satisfied);

  // each realized type needs its own cycle, so the certificate always holds
  // when fed the graph's own convex coverage
  for (uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_graph(11, 0.45, 50 + seed);
    for (int ell : {3, 4, 5}) {
      auto r = certificate_lower_bound(g, covered_cycle_types(g, ell), ell);
      CHECK(r.satisfied);
    }
  }

  CHECK_THROWS_AS(certificate_lower_bound(all_chords(5), 1, 9), Error);
}

TEST_CASE("triangulation enumeration") {
  CHECK(enum_triangulations(3).size() == 1);
  CHECK(enum_triangulations(4).size() == 2);
  CHECK(enum_triangulations(5).size() == 5);
  CHECK(enum_triangulations(6).size() == 14);
  CHECK(enum_triangulations(7).size() == 42);
  CHECK(enum_triangulations(10).size() == 1430);

  auto all7 = enum_triangulations(7);
  std::set<Triangulation> uniq(all7.begin(), all7.end());
  CHECK(uniq.size() == all7.size());
  for (const auto& t : all7) {
    CHECK(t.size() == 4);  // n-3 diagonals
    for (auto [u, v] : t) {
      CHECK(v - u >= 2);                  // no sides
      CHECK(!(u == 1 && v == 7));         // the wrap side is not a diagonal
    }
    for (size_t a = 0; a < t.size(); ++a)
      for (size_t b = a + 1; b < t.size(); ++b) CHECK(!diagonals_cross(t[a], t[b]));
  }

  CHECK_THROWS_AS(enum_triangulations(15), Error);
  CHECK_THROWS_AS(enum_triangulations(2), Error);
}

TEST_CASE("triangulation classes under the dihedral group") {
  // frozen regression fixture for n = 4..9
  std::vector<size_t> counts;
  for (int n = 4; n <= 9; ++n) counts.push_back(enum_triangulation_classes(n).size());
  CHECK(counts == std::vector<size_t>{1, 1, 3, 4, 12, 27});

  // all pentagon triangulations are fans, one class
  auto five = enum_triangulations(5);
  std::set<std::string> cls5;
  for (const auto& t : five) cls5.insert(triangulation_class(5, t));
  CHECK(cls5.size() == 1);

  // class code is invariant under rotating the polygon
  Triangulation zig = {{1, 3}, {3, 5}, {1, 5}};
  Triangulation rot = {{2, 4}, {4, 6}, {2, 6}};
  CHECK(triangulation_class(6, zig) == triangulation_class(6, rot));

  // class sizes partition the Catalan count
  std::map<std::string, int> sizes;
  for (const auto& t : enum_triangulations(6)) ++sizes[triangulation_class(6, t)];
  int total = 0;
  for (auto& [cls, k] : sizes) total += k;
  CHECK(total == 14);
  CHECK(sizes.size() == 3);

  CHECK_THROWS_AS(triangulation_class(6, {{0, 2}}), Error);
  CHECK_THROWS_AS(triangulation_class(6, {{2, 2}}), Error);
}

TEST_CASE("triangulation universality") {
  auto rep6 = verify_universal_triangulations(all_chords(6));
  CHECK(rep6.total == 3);
  CHECK(rep6.realized == 3);
  CHECK(rep6.failures.empty());

  CHECK(verify_universal_triangulations(all_chords(4)).realized == 1);

  // hexagon sides plus one long diagonal: not enough chords to triangulate
  auto sides_plus = make_chord_graph(
      6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 4}});
  auto repx = verify_universal_triangulations(sides_plus);
  CHECK(repx.realized == 0);
  CHECK(repx.failures.size() == 3);

  // a triangulation uses its polygon sides, so a missing side fails everything
  auto no_side = all_chords(6);
  no_side.edges.erase(std::find(no_side.edges.begin(), no_side.edges.end(),
                                std::pair(1, 2)));
  CHECK(verify_universal_triangulations(no_side).realized == 0);

  for (int n = 3; n <= 10; ++n) {
    auto rep = verify_universal_triangulations(all_chords(n));
    CHECK(rep.total == rep.realized);
  }
}
