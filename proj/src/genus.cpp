#include "pantsatlas/genus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "pantsatlas/labelled_sphere.hpp"
#include "pantsatlas/util.hpp"

namespace pantsatlas {

// --- closed surfaces ---------------------------------------------------------------

CutSystem cut_system(const MultiGraph& mg) {
  require(mg.n >= 1, Errc::bad_parameters, "empty graph");
  for (int v = 0; v < mg.n; ++v)
    require(mg.degree(v) == 3, Errc::not_trivalent, "cut systems need a trivalent graph");
  require(mg.connected(), Errc::disconnected, "cut systems need a connected graph");

  const int E = int(mg.edges.size());
  std::vector<char> in_tree(size_t(E), 0), seen(size_t(mg.n), 0);
  std::vector<int> order;
  seen[0] = 1;
  order.push_back(0);
  for (size_t at = 0; at < order.size(); ++at) {
    const int u = order[at];
    for (int i = 0; i < E; ++i) {
      const auto [x, y] = mg.edges[size_t(i)];
      if (x != u && y != u) continue;
      const int other = x == u ? y : x;
      if (seen[size_t(other)]) continue;
      in_tree[size_t(i)] = 1;
      seen[size_t(other)] = 1;
      order.push_back(other);
    }
  }

  CutSystem cs;
  cs.g = mg;
  for (int i = 0; i < E; ++i)
    if (!in_tree[size_t(i)]) cs.cotree.push_back(i);
  const int genus = int(cs.cotree.size());

  // Stub leaves 0..2*genus-1 in cotree order; internal vertex j becomes 2*genus + j.
  cs.tree.n_leaves = 2 * genus;
  cs.tree.adj.assign(size_t(2 * genus + mg.n), {});
  const auto link = [&](int a, int b) {
    cs.tree.adj[size_t(a)].push_back(b);
    cs.tree.adj[size_t(b)].push_back(a);
  };
  for (int i = 0; i < E; ++i)
    if (in_tree[size_t(i)])
      link(2 * genus + mg.edges[size_t(i)].first, 2 * genus + mg.edges[size_t(i)].second);
  for (size_t k = 0; k < cs.cotree.size(); ++k) {
    const auto [u, v] = mg.edges[size_t(cs.cotree[k])];
    link(int(2 * k), 2 * genus + u);
    link(int(2 * k + 1), 2 * genus + v);
    cs.matching.push_back({int(2 * k), int(2 * k + 1)});
  }
  return cs;
}

uint64_t ClosedFamily::bound() const { return pow3(2 * g - 1); }

ClosedFamily closed_universal_family(int g) {
  require(g >= 2, Errc::n_too_small, "closed families start at genus 2");
  require(2 * g <= 20, Errc::n_too_large, "census is capped at 2g <= 20");
  ClosedFamily fam;
  fam.g = g;
  fam.sphere_codes = gen_lambda(2 * g, 2, 2 * g - 2);
  require(fam.size() <= fam.bound(), Errc::bad_parameters, "family exceeds its 3^{2g-1} bound");
  return fam;
}

std::vector<CurveCode> realize_closed_type(const MultiGraph& mg) {
  const CutSystem cs = cut_system(mg);
  std::vector<CurveCode> out;
  for (const EdgeCode& ec : recognize(cs.tree).codes) out.push_back(ec.code);
  return out;
}

int counting_lower_bound(int g) {
  const uint64_t types = enum_dual_graphs(g).size();
  const uint64_t k = uint64_t(3 * g - 3);
  int n = int(k);
  while (binomial(uint64_t(n), k) < types) ++n;
  return n;
}

// --- dual graphs ---------------------------------------------------------------------

int DualGraph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges) {
    if (a == v) ++d;
    if (b == v) ++d;  // loops count twice
  }
  return d;
}

bool DualGraph::connected() const {
  if (vertices <= 0) return true;
  std::vector<std::vector<int>> adj(static_cast<size_t>(vertices));
  for (const auto& [a, b] : edges) {
    adj[size_t(a)].push_back(b);
    adj[size_t(b)].push_back(a);
  }
  std::vector<char> seen(size_t(vertices), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : adj[size_t(u)])
      if (!seen[size_t(w)]) {
        seen[size_t(w)] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == vertices;
}

int DualGraph::cyclomatic() const { return int(edges.size()) - vertices + 1; }

// --- concatenated codes ----------------------------------------------------------------

bool ConcatCode::separating() const {
  int thetas = 0;
  for (Flag f : flags)
    if (f != Flag::Omega) ++thetas;
  return thetas % 2 == 0;
}

bool ConcatCode::above_all() const {
  for (const auto& [q, side] : planar.f)
    if (side != Side::Above) return false;
  return true;
}

bool ConcatCode::below_all() const {
  for (const auto& [q, side] : planar.f)
    if (side != Side::Below) return false;
  return true;
}

bool ConcatCode::operator<(const ConcatCode& o) const {
  if (planar < o.planar) return true;
  if (o.planar < planar) return false;
  return flags < o.flags;
}

namespace {

const char* flag_name(Flag f) {
  switch (f) {
    case Flag::Theta1: return "theta1";
    case Flag::Theta2: return "theta2";
    case Flag::Theta3: return "theta3";
    case Flag::Omega: return "omega";
  }
  return "?";
}

}  // namespace

std::string ConcatCode::str() const {
  std::string out = planar.s.empty() ? std::string("{}") : planar.str();
  for (Flag f : flags) {
    out += '*';
    out += flag_name(f);
  }
  return out;
}

// --- families ---------------------------------------------------------------------------

namespace {

CurveCode bare_planar(int m) {
  CurveCode c;
  c.n = m;
  return c;
}

// Wiggle code over the sorted label set s with every in-span gap on one side.
CurveCode one_sided(int m, const std::vector<int>& s, Side side) {
  if (s.empty()) return bare_planar(m);
  std::map<int, Side> f;
  for (int q = s.front() + 1; q < s.back(); ++q)
    if (!std::binary_search(s.begin(), s.end(), q)) f[q] = side;
  return make_code(m, s, f);
}

std::vector<int> mask_labels(uint32_t mask) {
  std::vector<int> s;
  for (int k = 0; mask >> k; ++k)
    if (mask >> k & 1) s.push_back(k + 1);
  return s;
}

}  // namespace

std::vector<ConcatCode> genus1_family(int m) {
  require(m >= 0 && m <= 16, Errc::bad_range, "family census supported for 0 <= m <= 16");
  std::vector<ConcatCode> fam;
  if (m >= 2)
    for (CurveCode& c : gen_codes(m, 2, m)) fam.push_back({std::move(c), {}});
  for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask)
    fam.push_back({one_sided(m, mask_labels(mask), Side::Above), {Flag::Theta1}});
  return fam;
}

std::vector<ConcatCode> genus2_family(int m) {
  require(m >= 0 && m <= 16, Errc::bad_range, "family census supported for 0 <= m <= 16");
  std::vector<ConcatCode> fam;
  if (m >= 2)
    for (CurveCode& c : gen_codes(m, 2, m)) fam.push_back({std::move(c), {}});
  for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask)
    fam.push_back({one_sided(m, mask_labels(mask), Side::Above), {Flag::Theta1}});
  for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask)
    fam.push_back({one_sided(m, mask_labels(mask), Side::Below), {Flag::Theta2}});
  if (m >= 2)
    for (CurveCode& c : gen_codes(m, 2, m)) fam.push_back({std::move(c), {Flag::Theta3}});
  for (uint32_t mask = 0; mask < (uint32_t(1) << m); ++mask)
    fam.push_back({one_sided(m, mask_labels(mask), Side::Above), {Flag::Omega}});
  return fam;
}

// --- recognition ------------------------------------------------------------------------

namespace {

std::pair<int, int> norm_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

void validate_dual(const DualGraph& g, int want_cyclomatic, Errc wrong_cyclomatic) {
  require(g.vertices >= 1 && g.m >= 0 && g.m <= g.vertices, Errc::bad_parameters,
          "leaf count out of range");
  require(g.m <= 62, Errc::n_too_large, "leaf masks need m <= 62");
  for (const auto& [a, b] : g.edges)
    require(a >= 0 && a < g.vertices && b >= 0 && b < g.vertices, Errc::bad_range,
            "edge endpoint out of range");
  for (int v = 0; v < g.vertices; ++v)
    require(g.degree(v) == (g.is_leaf(v) ? 1 : 3), Errc::not_trivalent,
            "leaves must have degree 1 and internal vertices degree 3");
  require(g.connected(), Errc::disconnected, "dual graph must be connected");
  require(g.cyclomatic() == want_cyclomatic, wrong_cyclomatic,
          "wrong cyclomatic number for this genus");
}

std::vector<std::vector<int>> incidence(const DualGraph& g) {
  std::vector<std::vector<int>> inc(static_cast<size_t>(g.vertices));
  for (size_t i = 0; i < g.edges.size(); ++i) {
    inc[size_t(g.edges[i].first)].push_back(int(i));
    if (g.edges[i].second != g.edges[i].first) inc[size_t(g.edges[i].second)].push_back(int(i));
  }
  return inc;
}

// Edge flags of the 2-core (the cycles plus any paths joining them); obtained
// by repeatedly plucking degree-1 vertices.
std::vector<char> two_core(const DualGraph& g) {
  const auto inc = incidence(g);
  std::vector<char> alive(g.edges.size(), 1);
  std::vector<int> deg(size_t(g.vertices), 0);
  for (int v = 0; v < g.vertices; ++v) deg[size_t(v)] = g.degree(v);
  std::vector<int> queue;
  for (int v = 0; v < g.vertices; ++v)
    if (deg[size_t(v)] == 1) queue.push_back(v);
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    if (deg[size_t(v)] != 1) continue;
    for (int i : inc[size_t(v)]) {
      if (!alive[size_t(i)]) continue;
      alive[size_t(i)] = 0;
      const auto [a, b] = g.edges[size_t(i)];
      const int other = a == v ? b : a;
      --deg[size_t(v)];
      --deg[size_t(other)];
      if (deg[size_t(other)] == 1) queue.push_back(other);
      break;
    }
  }
  return alive;
}

int other_end(const DualGraph& g, int edge, int v) {
  const auto [a, b] = g.edges[size_t(edge)];
  return a == v ? b : a;
}

// Leaf labels and core content per component after deleting the given edges.
struct Component {
  std::vector<int> leaves;  // sorted 1-based labels
  bool has_core = false;
};

std::vector<Component> components_without(const DualGraph& g, const std::set<int>& removed,
                                          const std::vector<char>& core_edge) {
  std::vector<char> core_vertex(size_t(g.vertices), 0);
  for (size_t i = 0; i < g.edges.size(); ++i)
    if (core_edge[i]) core_vertex[size_t(g.edges[i].first)] = core_vertex[size_t(g.edges[i].second)] = 1;
  const auto inc = incidence(g);
  std::vector<char> seen(size_t(g.vertices), 0);
  std::vector<Component> comps;
  for (int start = 0; start < g.vertices; ++start) {
    if (seen[size_t(start)]) continue;
    Component comp;
    std::vector<int> stack{start};
    seen[size_t(start)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      if (g.is_leaf(u)) comp.leaves.push_back(u + 1);
      if (core_vertex[size_t(u)]) comp.has_core = true;
      for (int i : inc[size_t(u)]) {
        if (removed.count(i)) continue;
        const int w = other_end(g, i, u);
        if (!seen[size_t(w)]) {
          seen[size_t(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.leaves.begin(), comp.leaves.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

// The remaining graph as a tree; optionally drops a vertex with its edges.
LabelledTree tree_without(const DualGraph& g, const std::set<int>& removed, int dropped = -1) {
  LabelledTree t;
  t.n_leaves = g.m;
  t.adj.assign(size_t(g.vertices), {});
  for (size_t i = 0; i < g.edges.size(); ++i) {
    if (removed.count(int(i))) continue;
    const auto [a, b] = g.edges[i];
    if (a == dropped || b == dropped) continue;
    t.adj[size_t(a)].push_back(b);
    t.adj[size_t(b)].push_back(a);
  }
  return t;
}

// Sorted leaf labels in the subtree hanging below `child` when its tree edge
// to `parent` is cut.
std::vector<int> subtree_labels(const LabelledTree& t, int child, int parent) {
  std::vector<int> labels;
  std::vector<std::pair<int, int>> stack{{child, parent}};
  while (!stack.empty()) {
    const auto [u, from] = stack.back();
    stack.pop_back();
    if (t.is_leaf(u)) labels.push_back(u + 1);
    for (int w : t.adj[size_t(u)])
      if (w != from) stack.push_back({w, u});
  }
  std::sort(labels.begin(), labels.end());
  return labels;
}

// Assembles the planar code of an edge the sphere step skipped because its
// subtree holds fewer than two leaves.
CurveCode small_side_code(const DualGraph& g, const LabelledTree& t, int child, int parent) {
  const std::vector<int> labels = subtree_labels(t, child, parent);
  require(labels.size() <= 1, Errc::bad_parameters, "uncoded edge with a large subtree");
  return labels.empty() ? bare_planar(g.m) : make_code(g.m, labels, {});
}

std::map<std::pair<int, int>, CurveCode> sphere_codes(const DualGraph& g, const LabelledTree& t,
                                                      int root, const std::map<int, Role>& over) {
  std::map<std::pair<int, int>, CurveCode> at;
  if (g.m == 0) return at;
  RealizeOptions opts;
  opts.root = root;
  opts.role_override = over;
  opts.n_punctures = g.m;
  for (const EdgeCode& ec : realize_tree(t, opts)) at[norm_edge(ec.parent, ec.child)] = ec.code;
  return at;
}

}  // namespace

GenusRecognition genus1_recognize(const DualGraph& g) {
  validate_dual(g, 1, Errc::not_unicyclic);
  const auto cycle = two_core(g);
  int e_idx = -1;
  for (size_t i = 0; i < g.edges.size() && e_idx < 0; ++i)
    if (cycle[i]) e_idx = int(i);
  const int v = std::min(g.edges[size_t(e_idx)].first, g.edges[size_t(e_idx)].second);
  const int w = std::max(g.edges[size_t(e_idx)].first, g.edges[size_t(e_idx)].second);

  // The cycle minus e is the unique v-w path in the tree; force it above.
  const auto inc = incidence(g);
  std::vector<int> path{v};
  std::map<int, Role> over;
  int prev = e_idx;
  while (path.back() != w || int(path.size()) == 1) {
    if (v == w) break;  // loop: no path edges remain
    const int cur = path.back();
    int step = -1;
    for (int i : inc[size_t(cur)])
      if (cycle[size_t(i)] && i != prev) step = i;
    path.push_back(other_end(g, step, cur));
    over[path.back()] = Role::Above;
    prev = step;
  }

  const LabelledTree t = tree_without(g, {e_idx});
  const auto code_at = sphere_codes(g, t, v, over);

  GenusRecognition rec;
  for (size_t idx = 0; idx < g.edges.size(); ++idx) {
    const auto [a, b] = g.edges[idx];
    if (g.is_leaf(a) || g.is_leaf(b)) continue;
    const auto pair = norm_edge(a, b);
    if (int(idx) == e_idx) {
      rec.edges.push_back(pair);
      rec.codes.push_back({bare_planar(g.m), {Flag::Theta1}});
      continue;
    }
    CurveCode planar;
    if (const auto it = code_at.find(pair); it != code_at.end()) {
      planar = it->second;
    } else {
      // Only the last cycle edge can be uncoded (single leaf past w).
      require(cycle[idx] && path.size() >= 2, Errc::bad_parameters,
              "uncoded edge off the cycle tail");
      planar = small_side_code(g, t, w, path[path.size() - 2]);
    }
    rec.edges.push_back(pair);
    if (cycle[idx])
      rec.codes.push_back({std::move(planar), {Flag::Theta1}});
    else
      rec.codes.push_back({std::move(planar), {}});
  }
  return rec;
}

bool genus1_verify_structural(const GenusRecognition& rec, const DualGraph& g,
                              std::string* diagnostics) {
  std::ostringstream log;
  bool ok = true;
  const auto flunk = [&](const std::string& msg) {
    ok = false;
    log << msg << '\n';
  };

  try {
    validate_dual(g, 1, Errc::not_unicyclic);
  } catch (const Error& err) {
    if (diagnostics) *diagnostics = std::string("invalid graph: ") + err.what() + "\n";
    return false;
  }
  if (rec.edges.size() != rec.codes.size()) {
    if (diagnostics) *diagnostics = "edge/code lists differ in length\n";
    return false;
  }

  const auto cycle = two_core(g);

  // Match each listed edge with a distinct graph edge.
  std::map<std::pair<int, int>, std::vector<int>> slots;
  for (size_t i = 0; i < g.edges.size(); ++i) {
    const auto [a, b] = g.edges[i];
    if (!g.is_leaf(a) && !g.is_leaf(b)) slots[norm_edge(a, b)].push_back(int(i));
  }
  std::vector<int> entry_edge(rec.edges.size(), -1);
  std::vector<int> edge_entry(g.edges.size(), -1);
  for (size_t i = 0; i < rec.edges.size(); ++i) {
    const auto pair = norm_edge(rec.edges[i].first, rec.edges[i].second);
    auto it = slots.find(pair);
    if (it == slots.end() || it->second.empty()) {
      flunk("listed edge is not an internal edge of the graph: (" +
            std::to_string(pair.first) + "," + std::to_string(pair.second) + ")");
      continue;
    }
    entry_edge[i] = it->second.back();
    it->second.pop_back();
    edge_entry[size_t(entry_edge[i])] = int(i);
  }

  for (size_t i = 0; i < rec.codes.size(); ++i) {
    const ConcatCode& cc = rec.codes[i];
    if (cc.planar.n != g.m) flunk("code " + cc.str() + " lives on the wrong puncture count");
    bool theta = false;
    for (Flag f : cc.flags) {
      if (f == Flag::Theta1)
        theta = true;
      else
        flunk("code " + cc.str() + " carries a flag outside genus 1");
    }
    if (entry_edge[i] < 0) continue;
    const bool on_cycle = cycle[size_t(entry_edge[i])];
    if (theta != on_cycle)
      flunk("code " + cc.str() + (on_cycle ? " misses the theta flag on a cycle edge"
                                           : " carries a theta flag off the cycle"));
    if (theta && !cc.above_all()) flunk("cycle code " + cc.str() + " must go above the rest");
    if (!theta) {
      // Separating code: its set must match the tree side of the cut.
      const auto comps = components_without(g, {entry_edge[i]}, cycle);
      bool matched = false;
      for (const Component& comp : comps)
        if (!comp.has_core && comp.leaves == cc.planar.s) matched = true;
      if (!matched) flunk("code " + cc.str() + " does not enclose its edge's leaf set");
    }
  }

  // Planar parts must admit disjoint representatives. Sets of size <= 1 have a
  // representative in an arbitrarily small disc, so only real wiggles matter.
  for (size_t i = 0; i < rec.codes.size(); ++i)
    for (size_t j = i + 1; j < rec.codes.size(); ++j) {
      const CurveCode& a = rec.codes[i].planar;
      const CurveCode& b = rec.codes[j].planar;
      if (a.s.size() < 2 || b.s.size() < 2) continue;
      if (!disjoint(a, b))
        flunk("planar parts intersect: " + rec.codes[i].str() + " vs " + rec.codes[j].str());
    }

  // Every pair of cycle edges must cut off exactly the symmetric difference of
  // the two enclosed sets.
  std::vector<int> cyc;
  for (size_t i = 0; i < g.edges.size(); ++i)
    if (cycle[i]) cyc.push_back(int(i));
  for (size_t x = 0; x < cyc.size(); ++x)
    for (size_t y = x + 1; y < cyc.size(); ++y) {
      const int ia = edge_entry[size_t(cyc[x])];
      const int ib = edge_entry[size_t(cyc[y])];
      if (ia < 0 || ib < 0) {
        flunk("a cycle edge has no curve");
        continue;
      }
      const auto& sa = rec.codes[size_t(ia)].planar.s;
      const auto& sb = rec.codes[size_t(ib)].planar.s;
      std::vector<int> delta;
      std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                    std::back_inserter(delta));
      const auto comps = components_without(g, {cyc[x], cyc[y]}, cycle);
      bool matched = false;
      for (const Component& comp : comps)
        if (comp.leaves == delta) matched = true;
      if (!matched)
        flunk("cycle pair " + rec.codes[size_t(ia)].str() + " / " + rec.codes[size_t(ib)].str() +
              " does not separate its leaf set");
    }

  if (diagnostics) *diagnostics = log.str();
  return ok;
}

namespace {

constexpr Role kBranchRole[3] = {Role::Above, Role::Below, Role::Between};
constexpr Flag kBranchFlag[3] = {Flag::Theta1, Flag::Theta2, Flag::Theta3};

// A maximal chain of core edges from `start_edge` at vertex `from`, walking
// through core-degree-2 vertices until the far anchor is reached.
struct Walk {
  std::vector<int> edges;
  std::vector<int> interior;  // vertices strictly between the anchors
};

Walk walk_core(const DualGraph& g, const std::vector<std::vector<int>>& inc,
               const std::vector<char>& alive, int from, int start_edge, int stop_vertex) {
  Walk walk;
  walk.edges.push_back(start_edge);
  int prev = start_edge;
  int cur = other_end(g, start_edge, from);
  while (cur != stop_vertex) {
    walk.interior.push_back(cur);
    int step = -1;
    for (int i : inc[size_t(cur)])
      if (alive[size_t(i)] && i != prev) step = i;
    walk.edges.push_back(step);
    cur = other_end(g, step, cur);
    prev = step;
  }
  return walk;
}

GenusRecognition assemble(const DualGraph& g, const LabelledTree& t,
                          const std::map<std::pair<int, int>, CurveCode>& code_at,
                          const std::map<int, Flag>& bare_at, const std::map<int, Flag>& flag_at,
                          const std::map<int, int>& deep_end) {
  GenusRecognition rec;
  for (size_t idx = 0; idx < g.edges.size(); ++idx) {
    const auto [a, b] = g.edges[idx];
    if (g.is_leaf(a) || g.is_leaf(b)) continue;
    const auto pair = norm_edge(a, b);
    rec.edges.push_back(pair);
    if (const auto bare = bare_at.find(int(idx)); bare != bare_at.end()) {
      rec.codes.push_back({bare_planar(g.m), {bare->second}});
      continue;
    }
    CurveCode planar;
    if (const auto it = code_at.find(pair); it != code_at.end()) {
      planar = it->second;
    } else {
      const int child = deep_end.at(int(idx));
      planar = small_side_code(g, t, child, other_end(g, int(idx), child));
    }
    if (const auto fl = flag_at.find(int(idx)); fl != flag_at.end())
      rec.codes.push_back({std::move(planar), {fl->second}});
    else
      rec.codes.push_back({std::move(planar), {}});
  }
  return rec;
}

}  // namespace

GenusRecognition genus2_recognize(const DualGraph& g) {
  validate_dual(g, 2, Errc::not_cyclomatic2);
  const auto inc = incidence(g);
  const auto alive = two_core(g);

  // Exactly two core vertices keep all three edges; everything hinges on
  // whether the core still has a bridge (disjoint cycles) or not (shared).
  std::vector<int> core_deg(size_t(g.vertices), 0);
  for (size_t i = 0; i < g.edges.size(); ++i)
    if (alive[i]) {
      core_deg[size_t(g.edges[i].first)] += 1;
      core_deg[size_t(g.edges[i].second)] += 1;
    }
  std::vector<int> anchors;
  for (int v = 0; v < g.vertices; ++v)
    if (core_deg[size_t(v)] == 3) anchors.push_back(v);
  require(anchors.size() == 2, Errc::not_cyclomatic2, "core must have two degree-3 vertices");

  const auto is_core_bridge = [&](int edge) {
    const auto [a, b] = g.edges[size_t(edge)];
    if (a == b) return false;
    std::vector<char> seen(size_t(g.vertices), 0);
    std::vector<int> stack{a};
    seen[size_t(a)] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int i : inc[size_t(u)]) {
        if (!alive[size_t(i)] || i == edge) continue;
        const int w = other_end(g, i, u);
        if (!seen[size_t(w)]) {
          seen[size_t(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    return !seen[size_t(b)];
  };
  std::vector<char> bridge(g.edges.size(), 0);
  bool any_bridge = false;
  for (size_t i = 0; i < g.edges.size(); ++i)
    if (alive[i] && is_core_bridge(int(i))) {
      bridge[i] = 1;
      any_bridge = true;
    }

  std::map<int, Flag> bare_at, flag_at;
  std::map<int, int> deep_end;
  std::map<int, Role> over;

  if (!any_bridge) {
    // Shared cycles: drop the larger anchor, recognize the tree at the other,
    // and number the three v-w strands as the branches dictate.
    const int v = anchors[0], w = anchors[1];
    std::vector<Walk> walks;
    std::set<int> used;
    for (int i : inc[size_t(v)]) {
      if (!alive[size_t(i)] || used.count(i)) continue;
      Walk walk = walk_core(g, inc, alive, v, i, w);
      for (int e : walk.edges) used.insert(e);
      walks.push_back(std::move(walk));
    }
    require(walks.size() == 3, Errc::not_cyclomatic2, "shared cycles need three strands");

    const LabelledTree t = tree_without(g, {}, w);
    std::vector<int> order;  // walk indices, interior strands first by least leaf
    for (size_t p = 0; p < walks.size(); ++p)
      if (!walks[p].interior.empty()) order.push_back(int(p));
    std::sort(order.begin(), order.end(), [&](int x, int y) {
      return subtree_labels(t, walks[size_t(x)].interior.front(), v) <
             subtree_labels(t, walks[size_t(y)].interior.front(), v);
    });
    for (size_t p = 0; p < walks.size(); ++p)
      if (walks[p].interior.empty()) order.push_back(int(p));

    for (size_t number = 0; number < order.size(); ++number) {
      const Walk& walk = walks[size_t(order[number])];
      bare_at[walk.edges.back()] = kBranchFlag[number];
      for (size_t j = 0; j + 1 < walk.edges.size(); ++j) {
        flag_at[walk.edges[j]] = kBranchFlag[number];
        const int child = j == 0 ? walk.interior[0] : walk.interior[j];
        deep_end[walk.edges[j]] = child;
        over[child] = kBranchRole[number];
      }
    }
    return assemble(g, t, sphere_codes(g, t, v, over), bare_at, flag_at, deep_end);
  }

  // Disjoint cycles: peel one edge off each cycle next to its anchor, realize
  // the tree rooted at the smaller anchor, and wrap the connecting path.
  const int v = anchors[0], v2 = anchors[1];
  const auto pick = [&](int at) {
    int best = -1;
    for (int i : inc[size_t(at)])
      if (alive[size_t(i)] && !bridge[size_t(i)] && best < 0) best = i;
    return best;
  };
  const int r2 = pick(v), r1 = pick(v2);

  int path_start = -1;
  for (int i : inc[size_t(v)])
    if (alive[size_t(i)] && bridge[size_t(i)]) path_start = i;
  const Walk path = walk_core(g, inc, alive, v, path_start, v2);
  for (int e : path.edges) flag_at[e] = Flag::Omega;
  bare_at[r1] = Flag::Theta1;
  bare_at[r2] = Flag::Theta2;

  std::vector<int> path_children = path.interior;
  path_children.push_back(v2);
  for (int child : path_children) over[child] = Role::Above;
  for (size_t j = 0; j < path.edges.size(); ++j) deep_end[path.edges[j]] = path_children[j];

  const auto wrap_cycle = [&](int anchor, int removed, Flag flag, Role role) {
    int arc_start = -1;
    for (int i : inc[size_t(anchor)])
      if (alive[size_t(i)] && !bridge[size_t(i)] && i != removed) arc_start = i;
    if (arc_start < 0) return;  // the cycle was a loop; nothing remains
    const int far = other_end(g, removed, anchor);
    const Walk arc = walk_core(g, inc, alive, anchor, arc_start, far);
    std::vector<int> children = arc.interior;
    children.push_back(far);
    for (size_t j = 0; j < arc.edges.size(); ++j) {
      flag_at[arc.edges[j]] = flag;
      deep_end[arc.edges[j]] = children[j];
      if (role == Role::Below || j > 0) over[children[j]] = role;
    }
  };
  wrap_cycle(v, r2, Flag::Theta2, Role::Below);
  wrap_cycle(v2, r1, Flag::Theta1, Role::Above);

  const LabelledTree t = tree_without(g, {r1, r2});
  return assemble(g, t, sphere_codes(g, t, v, over), bare_at, flag_at, deep_end);
}

// --- test generators ----------------------------------------------------------------------

namespace {

// Planted subtrees over the global leaf ids in `s`: reports the attachment
// vertex, growing shared edge/vertex pools that are unwound on return.
void plant(const std::vector<int>& s, int& next_id, std::vector<std::pair<int, int>>& edges,
           const std::function<void(int)>& visit) {
  if (s.size() == 1) {
    visit(s[0]);
    return;
  }
  const int rest = int(s.size()) - 1;
  for (uint32_t mask = 0; mask + 1 < (uint32_t(1) << rest); ++mask) {
    std::vector<int> left{s[0]}, right;
    for (int k = 0; k < rest; ++k)
      (mask >> k & 1 ? left : right).push_back(s[size_t(k) + 1]);
    plant(left, next_id, edges, [&](int a) {
      plant(right, next_id, edges, [&](int b) {
        const int root = next_id++;
        edges.push_back({root, a});
        edges.push_back({root, b});
        visit(root);
        edges.pop_back();
        edges.pop_back();
        --next_id;
      });
    });
  }
}

// Every split of 0..m-1 into `count` labelled nonempty blocks; leaf 0 stays in
// block 0 so block lists start canonically.
void leaf_blocks(int m, int count, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::vector<int>> blocks(static_cast<size_t>(count));
  if (count > 0) blocks[0].push_back(0);
  const auto rec = [&](auto&& self, int leaf) -> void {
    if (leaf == m) {
      for (const auto& blk : blocks)
        if (blk.empty()) return;
      visit(blocks);
      return;
    }
    for (int b = 0; b < count; ++b) {
      blocks[size_t(b)].push_back(leaf);
      self(self, leaf + 1);
      blocks[size_t(b)].pop_back();
    }
  };
  if (count == 0) {
    if (m == 0) visit(blocks);
    return;
  }
  rec(rec, 1);
}

// Plants every block in turn, then hands over the attachment vertices.
void plant_blocks(const std::vector<std::vector<int>>& blocks, int& next_id,
                  std::vector<std::pair<int, int>>& edges,
                  const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> attach(blocks.size(), -1);
  const auto rec = [&](auto&& self, size_t at) -> void {
    if (at == blocks.size()) {
      visit(attach);
      return;
    }
    plant(blocks[at], next_id, edges, [&](int a) {
      attach[at] = a;
      self(self, at + 1);
    });
  };
  rec(rec, 0);
}

}  // namespace

void enum_unicyclic_duals(int m, const std::function<void(const DualGraph&)>& visit) {
  require(m >= 1 && m <= 8, Errc::bad_range, "unicyclic sweep supported for 1 <= m <= 8");
  for (int cyc_len = 1; cyc_len <= m; ++cyc_len) {
    leaf_blocks(m, cyc_len, [&](const std::vector<std::vector<int>>& blocks) {
      // Kill the reflection of the cyclic arrangement.
      if (cyc_len >= 3 && blocks[1].front() > blocks.back().front()) return;
      int next_id = m + cyc_len;
      std::vector<std::pair<int, int>> grown;
      plant_blocks(blocks, next_id, grown, [&](const std::vector<int>& attach) {
        DualGraph g;
        g.m = m;
        g.vertices = next_id;
        if (cyc_len == 1) {
          g.edges.push_back({m, m});
        } else {
          for (int i = 0; i < cyc_len; ++i)
            if (cyc_len > 2 || i < 2) g.edges.push_back({m + i, m + (i + 1) % cyc_len});
        }
        for (int i = 0; i < cyc_len; ++i) g.edges.push_back({m + i, attach[size_t(i)]});
        g.edges.insert(g.edges.end(), grown.begin(), grown.end());
        visit(g);
      });
    });
  }
}

void enum_cyclomatic2_duals(int m, const std::function<void(const DualGraph&)>& visit) {
  require(m >= 0 && m <= 8, Errc::bad_range, "cyclomatic-2 sweep supported for 0 <= m <= 8");

  // Shared cycles: three v-w strands subdivided (a1 >= a2 >= a3) times.
  for (int a1 = 0; a1 <= m; ++a1)
    for (int a2 = 0; a2 <= a1; ++a2)
      for (int a3 = 0; a3 <= a2; ++a3) {
        const int carriers = a1 + a2 + a3;
        if (carriers > m || (m > 0 && carriers == 0)) continue;
        leaf_blocks(m, carriers, [&](const std::vector<std::vector<int>>& blocks) {
          int next_id = m + 2 + carriers;
          std::vector<std::pair<int, int>> grown;
          plant_blocks(blocks, next_id, grown, [&](const std::vector<int>& attach) {
            DualGraph g;
            g.m = m;
            g.vertices = next_id;
            const int v = m, w = m + 1;
            int carrier = m + 2;
            for (int len : {a1, a2, a3}) {
              int prev = v;
              for (int k = 0; k < len; ++k) {
                g.edges.push_back({prev, carrier});
                prev = carrier++;
              }
              g.edges.push_back({prev, w});
            }
            for (int k = 0; k < carriers; ++k)
              g.edges.push_back({m + 2 + k, attach[size_t(k)]});
            g.edges.insert(g.edges.end(), grown.begin(), grown.end());
            visit(g);
          });
        });
      }

  // Disjoint cycles of lengths p <= q joined by a path of length r.
  for (int p = 1; p <= m + 1; ++p)
    for (int q = p; q <= m + 1; ++q)
      for (int r = 1; r <= m + 1; ++r) {
        const int carriers = (p - 1) + (q - 1) + (r - 1);
        if (carriers > m || (m > 0 && carriers == 0)) continue;
        leaf_blocks(m, carriers, [&](const std::vector<std::vector<int>>& blocks) {
          int next_id = m + 2 + carriers;
          std::vector<std::pair<int, int>> grown;
          plant_blocks(blocks, next_id, grown, [&](const std::vector<int>& attach) {
            DualGraph g;
            g.m = m;
            g.vertices = next_id;
            const int v = m, v2 = m + 1;
            int carrier = m + 2;
            const auto ring = [&](int at, int len) {
              if (len == 1) {
                g.edges.push_back({at, at});
                return;
              }
              int prev = at;
              for (int k = 0; k < len - 1; ++k) {
                g.edges.push_back({prev, carrier});
                prev = carrier++;
              }
              g.edges.push_back({prev, at});
            };
            ring(v, p);
            {
              int prev = v;
              for (int k = 0; k < r - 1; ++k) {
                g.edges.push_back({prev, carrier});
                prev = carrier++;
              }
              g.edges.push_back({prev, v2});
            }
            ring(v2, q);
            for (int k = 0; k < carriers; ++k)
              g.edges.push_back({m + 2 + k, attach[size_t(k)]});
            g.edges.insert(g.edges.end(), grown.begin(), grown.end());
            visit(g);
          });
        });
      }
}

}  // namespace pantsatlas
