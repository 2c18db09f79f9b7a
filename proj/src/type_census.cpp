#include "pantsatlas/type_census.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "pantsatlas/util.hpp"

namespace pantsatlas {

// --- labelled trivalent trees --------------------------------------------------

uint64_t count_labelled_trees(int n) {
  require(n >= 3, Errc::n_too_small, "trivalent trees need at least 3 leaves");
  return double_factorial_odd(2LL * n - 5);
}

namespace {

LabelledTree tree_from_edges(int n_leaves, int vertex_count,
                             const std::vector<std::pair<int, int>>& edges) {
  LabelledTree t;
  t.n_leaves = n_leaves;
  t.adj.assign(size_t(vertex_count), {});
  for (auto [u, v] : edges) {
    t.adj[size_t(u)].push_back(v);
    t.adj[size_t(v)].push_back(u);
  }
  return t;
}

// Inserts leaves 3..n-1 one at a time, subdividing each existing edge in turn.
void insert_leaf(int n, int k, std::vector<std::pair<int, int>>& edges,
                 const std::function<void(const LabelledTree&)>& visit) {
  if (k == n) {
    visit(tree_from_edges(n, 2 * n - 2, edges));
    return;
  }
  const int w = n + k - 2;  // internal vertex born with leaf k
  const size_t live = edges.size();
  for (size_t idx = 0; idx < live; ++idx) {
    const auto [u, v] = edges[idx];
    edges[idx] = {u, w};
    edges.push_back({v, w});
    edges.push_back({k, w});
    insert_leaf(n, k + 1, edges, visit);
    edges.pop_back();
    edges.pop_back();
    edges[idx] = {u, v};
  }
}

}  // namespace

void enum_labelled_trees(int n, const std::function<void(const LabelledTree&)>& visit) {
  require(n >= 3, Errc::n_too_small, "trivalent trees need at least 3 leaves");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(size_t(2 * n - 3));
  edges.push_back({0, n});
  edges.push_back({1, n});
  edges.push_back({2, n});
  insert_leaf(n, 3, edges, visit);
}

std::vector<LabelledTree> all_labelled_trees(int n) {
  require(n <= 9, Errc::n_too_large, "materializing beyond n=9 is not supported");
  std::vector<LabelledTree> out;
  out.reserve(count_labelled_trees(n));
  enum_labelled_trees(n, [&](const LabelledTree& t) { out.push_back(t); });
  return out;
}

namespace {

std::string ahu(const LabelledTree& t, int v, int parent) {
  std::vector<std::string> parts;
  for (int u : t.adj[size_t(v)])
    if (u != parent) parts.push_back(ahu(t, u, v));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (const auto& p : parts) s += p;
  s += ')';
  return s;
}

// Rooted subtree sizes and the 1 or 2 centroids of the whole tree.
std::vector<int> centroids(const LabelledTree& t) {
  const int V = t.vertex_count();
  std::vector<int> size(size_t(V), 1), order, parent(size_t(V), -1);
  order.reserve(size_t(V));
  order.push_back(0);
  for (size_t i = 0; i < order.size(); ++i)
    for (int u : t.adj[size_t(order[i])])
      if (u != parent[size_t(order[i])]) {
        parent[size_t(u)] = order[i];
        order.push_back(u);
      }
  for (size_t i = order.size(); i-- > 1;) size[size_t(parent[size_t(order[i])])] += size[size_t(order[i])];
  std::vector<int> cs;
  for (int v = 0; v < V; ++v) {
    int widest = V - size[size_t(v)];
    for (int u : t.adj[size_t(v)])
      if (u != parent[size_t(v)]) widest = std::max(widest, size[size_t(u)]);
    if (2 * widest <= V) cs.push_back(v);
  }
  return cs;
}

}  // namespace

std::string canonical_unlabelled(const LabelledTree& t) {
  for (int v = 0; v < t.vertex_count(); ++v) {
    const int want = t.is_leaf(v) ? 1 : 3;
    require(t.degree(v) == want, Errc::not_trivalent, "vertex of wrong degree");
  }
  const auto cs = centroids(t);
  if (cs.size() == 1) return ahu(t, cs[0], -1);
  std::string a = ahu(t, cs[0], cs[1]);
  std::string b = ahu(t, cs[1], cs[0]);
  if (b < a) std::swap(a, b);
  return "<" + a + b + ">";
}

std::vector<std::string> enum_unlabelled_classes(int n) {
  require(n >= 3, Errc::n_too_small, "trivalent trees need at least 3 leaves");
  require(n <= 10, Errc::n_too_large, "class enumeration is capped at n=10");
  std::set<std::string> classes;
  enum_labelled_trees(n, [&](const LabelledTree& t) { classes.insert(canonical_unlabelled(t)); });
  return {classes.begin(), classes.end()};
}

// --- pants types ----------------------------------------------------------------

PantsType make_pants_type(int a, int b, int c) {
  require(a >= 0 && b >= 0 && c >= 0, Errc::bad_range, "boundary weights must be nonnegative");
  int k[3] = {a, b, c};
  std::sort(k, k + 3);
  return {k[0], k[1], k[2]};
}

std::vector<PantsType> enum_pants_types(int n, bool essential_only) {
  std::vector<PantsType> out;
  for (int k1 = essential_only ? 1 : 0; 3 * k1 <= n; ++k1)
    for (int k2 = k1; k1 + 2 * k2 <= n; ++k2) out.push_back({k1, k2, n - k1 - k2});
  return out;
}

// --- edges and separations ------------------------------------------------------

std::vector<std::pair<int, int>> internal_edges(const LabelledTree& t) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.is_leaf(v)) continue;
    for (int u : t.adj[size_t(v)])
      if (u > v && !t.is_leaf(u)) out.push_back({v, u});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> edge_leafset(const LabelledTree& t, int u, int v) {
  require(!t.is_leaf(u) && !t.is_leaf(v), Errc::not_internal_edge, "edge touches a leaf");
  const auto& nu = t.adj[size_t(u)];
  require(std::find(nu.begin(), nu.end(), v) != nu.end(), Errc::bad_range, "not an edge");
  // Flood the u side with the edge removed; report whichever side misses label 1.
  std::vector<char> seen(size_t(t.vertex_count()), 0);
  std::vector<int> stack{u};
  seen[size_t(u)] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : t.adj[size_t(x)]) {
      if (x == u && y == v) continue;
      if (!seen[size_t(y)]) {
        seen[size_t(y)] = 1;
        stack.push_back(y);
      }
    }
  }
  const bool take_u_side = !seen[0];
  std::vector<int> leaves;
  for (int x = 0; x < t.n_leaves; ++x)
    if (bool(seen[size_t(x)]) == take_u_side) leaves.push_back(x + 1);
  return leaves;
}

namespace {

// Left-comb with k leaves, rooted at a degree-2 vertex (k >= 2); k == 1 is a
// bare leaf. Consumes leaf ids left to right.
int comb(int k, int& next_leaf, int& next_internal, std::vector<std::pair<int, int>>& edges) {
  if (k == 1) return next_leaf++;
  const int root = next_internal++;
  const int left = comb(k - 1, next_leaf, next_internal, edges);
  edges.push_back({root, left});
  edges.push_back({root, next_leaf++});
  return root;
}

}  // namespace

LabelledTree build_Ti(int n, int i) {
  require(i >= 2 && 2 * i <= n, Errc::bad_parameters, "need 2 <= i <= n/2");
  const int q = n / i, r = n % i;
  const int slots = q + (r > 0 ? 1 : 0);  // leaves of the backbone tree
  int next_leaf = 0, next_internal = n;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(size_t(2 * n - 3));
  std::vector<int> root_of(size_t(slots), 0);
  for (int s = 0; s < slots; ++s)
    root_of[size_t(s)] = comb(s < q ? i : r, next_leaf, next_internal, edges);
  if (slots == 2) {  // n == 2i: the two comb roots face each other
    edges.push_back({root_of[0], root_of[1]});
  } else if (slots == 3) {
    const int hub = next_internal++;
    for (int s = 0; s < 3; ++s) edges.push_back({hub, root_of[size_t(s)]});
  } else {  // caterpillar backbone, two pendant subtrees at each end
    std::vector<int> spine(size_t(slots - 2));
    for (auto& v : spine) v = next_internal++;
    for (size_t j = 0; j + 1 < spine.size(); ++j) edges.push_back({spine[j], spine[j + 1]});
    edges.push_back({spine.front(), root_of[0]});
    edges.push_back({spine.front(), root_of[1]});
    for (int s = 2; s < slots - 2; ++s) edges.push_back({spine[size_t(s - 1)], root_of[size_t(s)]});
    edges.push_back({spine.back(), root_of[size_t(slots - 2)]});
    edges.push_back({spine.back(), root_of[size_t(slots - 1)]});
  }
  return tree_from_edges(n, next_internal, edges);
}

int count_separating_edges(const LabelledTree& t, int i) {
  const int V = t.vertex_count();
  std::vector<int> parent(size_t(V), -1), order, leaves(size_t(V), 0);
  order.reserve(size_t(V));
  order.push_back(0);
  parent[0] = 0;
  for (size_t k = 0; k < order.size(); ++k)
    for (int u : t.adj[size_t(order[k])])
      if (parent[size_t(u)] < 0) {
        parent[size_t(u)] = order[k];
        order.push_back(u);
      }
  for (size_t k = order.size(); k-- > 0;) {
    const int v = order[k];
    if (t.is_leaf(v)) leaves[size_t(v)] = 1;
    if (k > 0) leaves[size_t(parent[size_t(v)])] += leaves[size_t(v)];
  }
  int count = 0;
  for (size_t k = 1; k < order.size(); ++k) {  // one (edge, side) pair per direction
    const int below = leaves[size_t(order[k])];
    count += int(below == i) + int(t.n_leaves - below == i);
  }
  return count;
}

long lower_bound_sum(int n) {
  long sum = 0;
  for (int i = 2; 2 * i <= n; ++i) sum += n / i;
  return sum;
}

// --- closed-surface dual graphs -------------------------------------------------

int MultiGraph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges) d += int(a == v) + int(b == v);
  return d;
}

bool MultiGraph::connected() const {
  if (n <= 1) return true;
  std::vector<char> seen(size_t(n), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [a, b] : edges) {
      if (a == v && !seen[size_t(b)]) seen[size_t(b)] = 1, stack.push_back(b);
      if (b == v && !seen[size_t(a)]) seen[size_t(a)] = 1, stack.push_back(a);
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

int MultiGraph::cyclomatic() const {
  std::vector<int> rep(size_t(n), 0);
  for (int v = 0; v < n; ++v) rep[size_t(v)] = v;
  const std::function<int(int)> find = [&](int v) {
    while (rep[size_t(v)] != v) v = rep[size_t(v)] = rep[size_t(rep[size_t(v)])];
    return v;
  };
  int components = n;
  for (auto [a, b] : edges) {
    int ra = find(a), rb = find(b);
    if (ra != rb) rep[size_t(ra)] = rb, --components;
  }
  return int(edges.size()) - n + components;
}

namespace {

// Lexicographically minimal relabelling of the adjacency matrix, read row by
// row up to the diagonal (loop counts sit on the diagonal). Branch-and-bound
// over permutations; graphs here have at most 8 vertices.
struct CanonSearch {
  int V;
  const std::vector<std::vector<int>>* A;
  std::vector<int> best, cur, perm;
  std::vector<char> used;

  void run() {
    best.assign(size_t(V * (V + 1) / 2), INT_MAX);
    cur.clear();
    perm.assign(size_t(V), -1);
    used.assign(size_t(V), 0);
    place(0);
  }

  void place(int k) {
    if (k == V) return;
    const size_t off = size_t(k * (k + 1) / 2);
    for (int v = 0; v < V; ++v) {
      if (used[size_t(v)]) continue;
      bool pruned = false;
      for (int j = 0; j <= k; ++j) {
        const int val = (*A)[size_t(v)][size_t(j < k ? perm[size_t(j)] : v)];
        if (val > best[off + size_t(j)]) {
          pruned = true;
          cur.resize(off);
          break;
        }
        if (val < best[off + size_t(j)]) {
          best[off + size_t(j)] = val;
          std::fill(best.begin() + long(off) + j + 1, best.end(), INT_MAX);
        }
        cur.push_back(val);
      }
      if (!pruned) {
        perm[size_t(k)] = v;
        used[size_t(v)] = 1;
        place(k + 1);
        used[size_t(v)] = 0;
        cur.resize(off);
      }
    }
  }
};

std::vector<std::pair<int, int>> canonical_edges(const MultiGraph& g) {
  std::vector<std::vector<int>> A(size_t(g.n), std::vector<int>(size_t(g.n), 0));
  for (auto [a, b] : g.edges) {
    ++A[size_t(a)][size_t(b)];
    if (a != b) ++A[size_t(b)][size_t(a)];
  }
  CanonSearch cs{g.n, &A, {}, {}, {}, {}};
  cs.run();
  std::vector<std::pair<int, int>> out;
  size_t pos = 0;
  for (int k = 0; k < g.n; ++k)
    for (int j = 0; j <= k; ++j, ++pos)
      for (int m = 0; m < cs.best[pos]; ++m) out.push_back({j, k});
  std::sort(out.begin(), out.end());
  return out;
}

void grow_cubic(int V, std::vector<int>& rd, std::vector<std::pair<int, int>>& edges,
                int last_u, int last_w, std::set<std::vector<std::pair<int, int>>>& found) {
  int u = 0;
  while (u < V && rd[size_t(u)] == 0) ++u;
  if (u == V) {
    MultiGraph g{V, edges};
    if (g.connected()) found.insert(canonical_edges(g));
    return;
  }
  for (int w = (u == last_u ? last_w : u); w < V; ++w) {
    if (w == u ? rd[size_t(u)] < 2 : rd[size_t(w)] < 1) continue;
    rd[size_t(u)] -= (w == u) ? 2 : 1;
    if (w != u) --rd[size_t(w)];
    edges.push_back({u, w});
    grow_cubic(V, rd, edges, u, w, found);
    edges.pop_back();
    rd[size_t(u)] += (w == u) ? 2 : 1;
    if (w != u) ++rd[size_t(w)];
  }
}

}  // namespace

std::vector<MultiGraph> enum_dual_graphs(int g) {
  require(g >= 2, Errc::n_too_small, "closed surfaces of genus >= 2 only");
  require(g <= 5, Errc::g_too_large, "dual graph enumeration is capped at genus 5");
  const int V = 2 * g - 2;
  std::vector<int> rd(size_t(V), 3);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(size_t(3 * g - 3));
  std::set<std::vector<std::pair<int, int>>> found;
  grow_cubic(V, rd, edges, -1, -1, found);
  std::vector<MultiGraph> out;
  out.reserve(found.size());
  for (const auto& e : found) out.push_back({V, e});
  return out;
}

}  // namespace pantsatlas
