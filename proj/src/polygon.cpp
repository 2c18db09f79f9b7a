#include "pantsatlas/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pantsatlas/errors.hpp"
#include "pantsatlas/util.hpp"

namespace pantsatlas {

bool ChordGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::pair(u, v));
}

ChordGraph make_chord_graph(int n, std::vector<std::pair<int, int>> edges) {
  require(n >= 3, Errc::n_too_small, "polygon needs at least 3 vertices");
  for (auto& [u, v] : edges) {
    require(u >= 1 && u <= n && v >= 1 && v <= n, Errc::bad_range, "vertex outside 1..n");
    require(u != v, Errc::bad_parameters, "loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  require(std::adjacent_find(edges.begin(), edges.end()) == edges.end(), Errc::bad_parameters,
          "duplicate edge");
  return ChordGraph{n, std::move(edges)};
}

ChordGraph all_chords(int n) {
  require(n >= 3, Errc::n_too_small, "polygon needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(size_t(n) * size_t(n - 1) / 2);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  return ChordGraph{n, std::move(edges)};
}

ChordGraph random_edge_set(int n, double c, uint64_t seed) {
  require(n >= 3, Errc::n_too_small, "polygon needs at least 3 vertices");
  require(c > 0, Errc::bad_c, "sampling constant must be positive");
  double p = c * std::cbrt(std::log(double(n))) / std::cbrt(double(n));
  if (p > 1) p = 1;
  std::vector<int> sample;
  for (int v = 1; v <= n; ++v)
    if (keyed_uniform(seed, uint64_t(v - 1)) < p) sample.push_back(v);
  std::vector<std::pair<int, int>> edges;
  for (size_t a = 0; a < sample.size(); ++a)
    for (size_t b = a + 1; b < sample.size(); ++b) edges.push_back({sample[a], sample[b]});
  return ChordGraph{n, std::move(edges)};
}

// --- triangle and cycle types -----------------------------------------------------

std::vector<TriangleType> enum_triangle_types(int n) {
  require(n >= 3, Errc::n_too_small, "polygon needs at least 3 vertices");
  std::vector<TriangleType> out;
  for (int k1 = 0; 3 * k1 <= n - 3; ++k1)
    for (int k2 = k1; k1 + 2 * k2 <= n - 3; ++k2) out.push_back({k1, k2, n - 3 - k1 - k2});
  return out;
}

namespace {

std::vector<std::vector<int>> adjacency(const ChordGraph& g) {
  std::vector<std::vector<int>> adj(size_t(g.n) + 1);
  for (auto [u, v] : g.edges) {
    adj[size_t(u)].push_back(v);
    adj[size_t(v)].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

TriangleType triangle_type_of(int n, int u, int v, int w) {  // u < v < w
  int k[3] = {v - u - 1, w - v - 1, n - w + u - 1};
  std::sort(k, k + 3);
  return {k[0], k[1], k[2]};
}

}  // namespace

std::vector<TriangleType> covers_triangle_types(const ChordGraph& g) {
  auto adj = adjacency(g);
  std::set<TriangleType> got;
  // each triangle surfaces once at its least edge (u,v) with third vertex w > v
  for (auto [u, v] : g.edges) {
    const auto& au = adj[size_t(u)];
    const auto& av = adj[size_t(v)];
    size_t x = 0, y = 0;
    while (x < au.size() && y < av.size()) {
      if (au[x] < av[y])
        ++x;
      else if (au[x] > av[y])
        ++y;
      else {
        if (au[x] > v) got.insert(triangle_type_of(g.n, u, v, au[x]));
        ++x;
        ++y;
      }
    }
  }
  std::vector<TriangleType> missing;
  for (const auto& t : enum_triangle_types(g.n))
    if (!got.count(t)) missing.push_back(t);
  return missing;
}

uint64_t count_triangles(const ChordGraph& g) {
  // degree ordering keeps every out-list O(sqrt(E)) long
  std::vector<int> deg(size_t(g.n) + 1, 0);
  for (auto [u, v] : g.edges) {
    ++deg[size_t(u)];
    ++deg[size_t(v)];
  }
  auto before = [&](int a, int b) {
    return std::pair(deg[size_t(a)], a) < std::pair(deg[size_t(b)], b);
  };
  std::vector<std::vector<int>> out(size_t(g.n) + 1);
  for (auto [u, v] : g.edges) {
    if (before(u, v))
      out[size_t(u)].push_back(v);
    else
      out[size_t(v)].push_back(u);
  }
  for (auto& o : out) std::sort(o.begin(), o.end());
  uint64_t count = 0;
  for (auto [u, v] : g.edges) {
    const auto& a = out[size_t(u)];
    const auto& b = out[size_t(v)];
    size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
      if (a[x] < b[y])
        ++x;
      else if (a[x] > b[y])
        ++y;
      else {
        ++count;
        ++x;
        ++y;
      }
    }
  }
  return count;
}

uint64_t count_cycles(const ChordGraph& g, int ell) {
  require(ell >= 3 && ell <= 8, Errc::ell_out_of_range, "cycle length must be in [3, 8]");
  auto adj = adjacency(g);
  uint64_t count = 0;
  std::vector<char> used(size_t(g.n) + 1, 0);
  std::vector<int> path;
  // anchor each cycle at its least vertex s; break direction with path[1] < back
  std::function<void(int, int)> dfs = [&](int s, int v) {
    if (int(path.size()) == ell) {
      if (path[1] < path.back() && std::binary_search(adj[size_t(v)].begin(),
                                                      adj[size_t(v)].end(), s))
        ++count;
      return;
    }
    for (int w : adj[size_t(v)]) {
      if (w <= s || used[size_t(w)]) continue;
      used[size_t(w)] = 1;
      path.push_back(w);
      dfs(s, w);
      path.pop_back();
      used[size_t(w)] = 0;
    }
  };
  for (int s = 1; s <= g.n; ++s) {
    used[size_t(s)] = 1;
    path.assign(1, s);
    dfs(s, s);
    used[size_t(s)] = 0;
  }
  return count;
}

std::vector<int> canonical_cycle_type(const std::vector<int>& gaps) {
  int ell = int(gaps.size());
  require(ell >= 3 && ell <= 8, Errc::ell_out_of_range, "cycle length must be in [3, 8]");
  for (int k : gaps) require(k >= 0, Errc::bad_range, "gaps are nonnegative");
  std::vector<int> best = gaps;
  std::vector<int> cur = gaps;
  for (int refl = 0; refl < 2; ++refl) {
    for (int r = 0; r < ell; ++r) {
      std::rotate(cur.begin(), cur.begin() + 1, cur.end());
      if (cur < best) best = cur;
    }
    std::reverse(cur.begin(), cur.end());
  }
  return best;
}

uint64_t covered_cycle_types(const ChordGraph& g, int ell) {
  require(ell >= 3 && ell <= 8, Errc::ell_out_of_range, "cycle length must be in [3, 8]");
  std::set<std::vector<int>> types;
  std::vector<int> path;
  // convex cycles: corners in increasing polygon order
  std::function<void()> dfs = [&]() {
    int v = path.back();
    if (int(path.size()) == ell) {
      if (g.has_edge(path.front(), v)) {
        std::vector<int> gaps(size_t(ell), 0);
        for (int i = 0; i + 1 < ell; ++i) gaps[size_t(i)] = path[size_t(i) + 1] - path[size_t(i)] - 1;
        gaps[size_t(ell) - 1] = path.front() + g.n - v - 1;
        types.insert(canonical_cycle_type(gaps));
      }
      return;
    }
    int room = ell - int(path.size());
    for (int w = v + 1; w <= g.n - room + 1; ++w) {
      if (!g.has_edge(v, w)) continue;
      path.push_back(w);
      dfs();
      path.pop_back();
    }
  };
  for (int v = 1; v + ell - 1 <= g.n; ++v) {
    path.assign(1, v);
    dfs();
  }
  return types.size();
}

CertificateReport certificate_lower_bound(const ChordGraph& g, uint64_t realized_types,
                                          int ell) {
  CertificateReport rep;
  rep.realized_types = realized_types;
  rep.cycle_count = count_cycles(g, ell);
  rep.edges = g.edges.size();
  rep.edge_bound = std::pow(double(realized_types), 2.0 / double(ell));
  rep.satisfied = realized_types <= rep.cycle_count;
  return rep;
}

// --- triangulations ----------------------------------------------------------------

namespace {

// every triangulation of the chain i..j has a unique apex k in the triangle
// on the closing edge (i,j), so recursing on the apex enumerates each once
void tri_rec(int n, std::vector<std::pair<int, int>>& chains,
             std::vector<std::pair<int, int>>& cur, std::vector<Triangulation>& out) {
  while (!chains.empty() && chains.back().second - chains.back().first == 1) {
    auto trivial = chains.back();
    chains.pop_back();
    tri_rec(n, chains, cur, out);
    chains.push_back(trivial);
    return;
  }
  if (chains.empty()) {
    Triangulation t = cur;
    std::sort(t.begin(), t.end());
    out.push_back(std::move(t));
    return;
  }
  auto [i, j] = chains.back();
  chains.pop_back();
  for (int k = i + 1; k < j; ++k) {
    size_t added = 0;
    if (k - i >= 2) {
      cur.push_back({i, k});
      ++added;
    }
    if (j - k >= 2) {
      cur.push_back({k, j});
      ++added;
    }
    chains.push_back({i, k});
    chains.push_back({k, j});
    tri_rec(n, chains, cur, out);
    chains.pop_back();
    chains.pop_back();
    cur.resize(cur.size() - added);
  }
  chains.push_back({i, j});
}

}  // namespace

std::vector<Triangulation> enum_triangulations(int n) {
  require(n >= 3, Errc::n_too_small, "polygon needs at least 3 vertices");
  require(n <= 14, Errc::n_too_large, "triangulation enumeration is capped at n = 14");
  std::vector<Triangulation> out;
  std::vector<std::pair<int, int>> chains{{1, n}};
  std::vector<std::pair<int, int>> cur;
  tri_rec(n, chains, cur, out);
  return out;
}

std::string triangulation_class(int n, const Triangulation& t) {
  require(n >= 3, Errc::n_too_small, "polygon needs at least 3 vertices");
  for (auto [u, v] : t) {
    require(u >= 1 && u <= n && v >= 1 && v <= n, Errc::bad_range, "vertex outside 1..n");
    require(u != v, Errc::bad_parameters, "degenerate diagonal");
  }
  std::vector<std::pair<int, int>> best;
  bool first = true;
  for (int refl = 0; refl < 2; ++refl) {
    for (int r = 0; r < n; ++r) {
      std::vector<std::pair<int, int>> img;
      img.reserve(t.size());
      for (auto [u, v] : t) {
        int a = refl ? n + 1 - u : u;
        int b = refl ? n + 1 - v : v;
        a = (a - 1 + r) % n + 1;
        b = (b - 1 + r) % n + 1;
        if (a > b) std::swap(a, b);
        img.push_back({a, b});
      }
      std::sort(img.begin(), img.end());
      if (first || img < best) {
        best = std::move(img);
        first = false;
      }
    }
  }
  std::string code;
  for (auto [u, v] : best) {
    if (!code.empty()) code += ',';
    code += std::to_string(u) + '-' + std::to_string(v);
  }
  return code;
}

std::vector<std::string> enum_triangulation_classes(int n) {
  std::set<std::string> classes;
  for (const auto& t : enum_triangulations(n)) classes.insert(triangulation_class(n, t));
  return {classes.begin(), classes.end()};
}

TriangulationReport verify_universal_triangulations(const ChordGraph& g) {
  auto classes = enum_triangulation_classes(g.n);  // validates 3 <= n <= 14
  bool sides_ok = true;
  for (int v = 1; v <= g.n && sides_ok; ++v) sides_ok = g.has_edge(v, v % g.n + 1);

  std::set<std::string> got;
  if (sides_ok) {
    for (const auto& t : enum_triangulations(g.n)) {
      bool usable = true;
      for (auto [u, v] : t)
        if (!g.has_edge(u, v)) {
          usable = false;
          break;
        }
      if (usable) got.insert(triangulation_class(g.n, t));
      if (got.size() == classes.size()) break;
    }
  }

  TriangulationReport rep;
  rep.total = classes.size();
  rep.realized = got.size();
  for (const auto& cls : classes)
    if (!got.count(cls)) rep.failures.push_back(cls);
  return rep;
}

}  // namespace pantsatlas
