#include "pantsatlas/curve_model.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace pantsatlas {

bool CurveCode::encloses(int j) const {
  return std::binary_search(s.begin(), s.end(), j);
}

Side CurveCode::wiggle_at(int j) const {
  auto it = std::lower_bound(f.begin(), f.end(), j,
                             [](const std::pair<int, Side>& p, int v) { return p.first < v; });
  require(it != f.end() && it->first == j, Errc::bad_wiggle_domain,
          "no wiggle recorded at puncture " + std::to_string(j));
  return it->second;
}

bool CurveCode::operator<(const CurveCode& o) const {
  if (n != o.n) return n < o.n;
  if (s != o.s) return s < o.s;
  return std::lexicographical_compare(
      f.begin(), f.end(), o.f.begin(), o.f.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first < b.first : a.second < b.second;
      });
}

std::string CurveCode::str() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < s.size(); ++k) out << (k ? "," : "") << s[k];
  if (!f.empty()) {
    out << '|';
    for (std::size_t k = 0; k < f.size(); ++k)
      out << (k ? "," : "") << f[k].first << (f[k].second == Side::Above ? '^' : 'v');
  }
  out << '}';
  return out.str();
}

CurveCode make_code(int n, std::vector<int> s, const std::map<int, Side>& f) {
  require(n >= 1, Errc::bad_range, "need at least one puncture");
  require(!s.empty(), Errc::empty_enclosed_set, "enclosed set is empty");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  require(s.front() >= 1 && s.back() <= n, Errc::bad_range, "puncture outside 1..n");

  CurveCode c;
  c.n = n;
  c.s = std::move(s);
  // The wiggle domain is exactly the in-span gap set.
  for (int j = c.span_min() + 1; j < c.span_max(); ++j) {
    if (c.encloses(j)) continue;
    auto it = f.find(j);
    require(it != f.end(), Errc::bad_wiggle_domain,
            "missing wiggle at puncture " + std::to_string(j));
    c.f.emplace_back(j, it->second);
  }
  require(f.size() == c.f.size(), Errc::bad_wiggle_domain,
          "wiggle map defined outside the span gaps");
  return c;
}

std::vector<CurveCode> gen_codes(int n, int min_size, int max_size) {
  require(n >= 1 && n <= 20, Errc::bad_range, "census supported for 1 <= n <= 20");
  require(min_size >= 1 && min_size <= max_size && max_size <= n, Errc::bad_range,
          "need 1 <= min_size <= max_size <= n");
  std::vector<CurveCode> out;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size < min_size || size > max_size) continue;
    std::vector<int> s;
    for (int j = 1; j <= n; ++j)
      if (mask & (1u << (j - 1))) s.push_back(j);
    std::vector<int> gaps;
    for (int j = s.front() + 1; j < s.back(); ++j)
      if (!(mask & (1u << (j - 1)))) gaps.push_back(j);
    // One code per wiggle assignment over the gaps.
    for (uint32_t w = 0; w < (1u << gaps.size()); ++w) {
      CurveCode c;
      c.n = n;
      c.s = s;
      for (std::size_t k = 0; k < gaps.size(); ++k)
        c.f.emplace_back(gaps[k], (w >> k) & 1 ? Side::Below : Side::Above);
      out.push_back(std::move(c));
    }
  }
  return out;
}

// --- strand constraint system ------------------------------------------------

StrandSystem build_strand_system(const CurveCode& a, const CurveCode& b, int cap_cfg) {
  const CurveCode* cs[2] = {&a, &b};
  StrandSystem sys;
  // Scaled coordinates: puncture j sits at 10j. Default caps at +-5; on a tie
  // the outer cap moves to +-6 and the inner to +-4.
  bool min_tie = a.span_min() == b.span_min();
  bool max_tie = a.span_max() == b.span_max();
  for (int c = 0; c < 2; ++c) {
    int lo = 5, hi = 5;
    if (min_tie) lo = ((cap_cfg & 1) != 0) == (c == 0) ? 6 : 4;
    if (max_tie) hi = ((cap_cfg & 2) != 0) == (c == 0) ? 6 : 4;
    sys.birth[c] = 10 * cs[c]->span_min() - lo;
    sys.death[c] = 10 * cs[c]->span_max() + hi;
    sys.caps.push_back({sys.birth[c], c});
    sys.caps.push_back({sys.death[c], c});
  }
  int jlo = std::min(a.span_min(), b.span_min());
  int jhi = std::max(a.span_max(), b.span_max());
  for (int j = jlo; j <= jhi; ++j) {
    StrandSystem::Line line{10 * j, 0, 0};
    for (int c = 0; c < 2; ++c) {
      if (j < cs[c]->span_min() || j > cs[c]->span_max()) continue;
      uint8_t top = uint8_t(1u << (2 * c)), bot = uint8_t(1u << (2 * c + 1));
      if (cs[c]->encloses(j)) {
        line.above |= top;
        line.below |= bot;
      } else if (cs[c]->wiggle_at(j) == Side::Above) {
        line.above |= uint8_t(top | bot);
      } else {
        line.below |= uint8_t(top | bot);
      }
    }
    if (line.above || line.below) sys.lines.push_back(line);
  }
  return sys;
}

namespace {

// 2-SAT over the four inter-curve orientations:
//   var 0: top(a)    above top(b)
//   var 1: top(a)    above bottom(b)
//   var 2: bottom(a) above top(b)
//   var 3: bottom(a) above bottom(b)
// Literal encoding: 2*v for "var v true", 2*v+1 for its negation.
struct TwoSat {
  std::array<std::vector<int>, 8> imp;
  bool contradiction = false;

  void add_clause(int lit_x, int lit_y) {  // x or y
    imp[lit_x ^ 1].push_back(lit_y);
    imp[lit_y ^ 1].push_back(lit_x);
  }
  void add_unit(int lit) { add_clause(lit, lit); }

  bool satisfiable() const {
    if (contradiction) return false;
    // Tarjan SCC on 8 nodes.
    std::array<int, 8> idx{}, low{}, comp{};
    idx.fill(-1);
    comp.fill(-1);
    std::vector<int> stack, call;
    int next = 0, ncomp = 0;
    for (int s = 0; s < 8; ++s) {
      if (idx[s] != -1) continue;
      call.assign(1, s);
      std::array<std::size_t, 8> eptr{};
      while (!call.empty()) {
        int v = call.back();
        if (idx[v] == -1) {
          idx[v] = low[v] = next++;
          stack.push_back(v);
        }
        bool descended = false;
        while (eptr[v] < imp[v].size()) {
          int w = imp[v][eptr[v]++];
          if (idx[w] == -1) {
            call.push_back(w);
            descended = true;
            break;
          }
          if (comp[w] == -1) low[v] = std::min(low[v], idx[w]);
        }
        if (descended) continue;
        if (low[v] == idx[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            comp[w] = ncomp;
            if (w == v) break;
          }
          ++ncomp;
        }
        call.pop_back();
        if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
      }
    }
    for (int v = 0; v < 4; ++v)
      if (comp[2 * v] == comp[2 * v + 1]) return false;
    return true;
  }
};

constexpr int kVarOf[4][4] = {
    // [strand of a][strand of b] -> var index; -1 where same curve
    {-1, -1, 0, 1},
    {-1, -1, 2, 3},
    {-1, -1, -1, -1},
    {-1, -1, -1, -1},
};

// Literal for "strand x is above strand y"; x, y from different curves or the
// fixed intra-curve pairs. Returns -2 for the constant true, -3 for false.
int above_literal(int x, int y) {
  if ((x >> 1) == (y >> 1)) {
    if (x == y) return -3;
    return (x & 1) == 0 ? -2 : -3;  // top above bottom
  }
  if (x < y) return 2 * kVarOf[x][y];
  return 2 * kVarOf[y][x] + 1;
}

bool sat_for_config(const CurveCode& a, const CurveCode& b, int cap_cfg) {
  StrandSystem sys = build_strand_system(a, b, cap_cfg);
  // No common lifetime: the curves live in disjoint strips.
  int lo = std::max(sys.birth[0], sys.birth[1]);
  int hi = std::min(sys.death[0], sys.death[1]);
  if (lo >= hi) return true;

  TwoSat ts;
  // Orientations are constant on the common lifetime, so transitivity of the
  // resulting 4-strand tournament reduces to these implications.
  ts.add_clause(2 * 0 + 1, 2 * 1);  // var0 -> var1
  ts.add_clause(2 * 2 + 1, 2 * 0);  // var2 -> var0
  ts.add_clause(2 * 2 + 1, 2 * 3);  // var2 -> var3
  ts.add_clause(2 * 3 + 1, 2 * 1);  // var3 -> var1

  auto add_above = [&](int x, int y) {  // require x above y
    int lit = above_literal(x, y);
    if (lit == -2) return;
    if (lit == -3) {
      ts.contradiction = true;
      return;
    }
    ts.add_unit(lit);
  };
  for (const auto& line : sys.lines) {
    for (int x = 0; x < 4; ++x) {
      if (!(line.above & (1 << x))) continue;
      for (int y = 0; y < 4; ++y)
        if (line.below & (1 << y)) add_above(x, y);
    }
  }
  // Cap nesting: a strand alive across a cap may not sit strictly between the
  // curve's newborn/dying pair.
  for (const auto& cap : sys.caps) {
    int top = 2 * cap.curve, bot = 2 * cap.curve + 1;
    for (int x = 0; x < 4; ++x) {
      if ((x >> 1) == cap.curve || !sys.alive_at(x, cap.x)) continue;
      int lt = above_literal(top, x);  // top above x
      int lb = above_literal(x, bot);  // x above bottom
      // forbid (lt and lb)
      if (lt == -3 || lb == -3) continue;
      if (lt == -2 && lb == -2) {
        ts.contradiction = true;
      } else if (lt == -2) {
        ts.add_unit(lb ^ 1);
      } else if (lb == -2) {
        ts.add_unit(lt ^ 1);
      } else {
        ts.add_clause(lt ^ 1, lb ^ 1);
      }
    }
  }
  return ts.satisfiable();
}

std::vector<int> cap_configs(const CurveCode& a, const CurveCode& b) {
  bool min_tie = a.span_min() == b.span_min();
  bool max_tie = a.span_max() == b.span_max();
  std::vector<int> cfgs;
  for (int c = 0; c < 4; ++c) {
    if (!min_tie && (c & 1)) continue;
    if (!max_tie && (c & 2)) continue;
    cfgs.push_back(c);
  }
  return cfgs;
}

}  // namespace

bool disjoint(const CurveCode& a, const CurveCode& b) {
  require(a.n == b.n, Errc::mismatched_n, "codes on different puncture counts");
  if (a == b) return true;  // parallel copies
  for (int cfg : cap_configs(a, b))
    if (sat_for_config(a, b, cfg)) return true;
  return false;
}

namespace {

// Assignment bit layout for the oracle: one bit per unordered strand pair,
// bit set = lower-id strand above higher-id strand.
constexpr int kPairIndex[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 3, 4},
    {1, 3, -1, 5},
    {2, 4, 5, -1},
};

bool oracle_above(unsigned assign, int x, int y) {
  int p = kPairIndex[x][y];
  bool bit = (assign >> p) & 1u;
  return x < y ? bit : !bit;
}

bool oracle_config_ok(const CurveCode& a, const CurveCode& b, int cap_cfg) {
  StrandSystem sys = build_strand_system(a, b, cap_cfg);
  for (unsigned assign = 0; assign < 64; ++assign) {
    bool ok = true;
    // Intra-curve order: top above bottom.
    if (!oracle_above(assign, 0, 1) || !oracle_above(assign, 2, 3)) continue;
    // Tournament must be transitive on every co-alive triple; since all four
    // strands share the common overlap (if any), check all triples globally
    // whenever the lifetimes overlap pairwise.
    auto co_alive = [&](int x, int y) {
      int cx = x >> 1, cy = y >> 1;
      return std::max(sys.birth[cx], sys.birth[cy]) < std::min(sys.death[cx], sys.death[cy]);
    };
    for (int x = 0; x < 4 && ok; ++x)
      for (int y = x + 1; y < 4 && ok; ++y)
        for (int z = y + 1; z < 4 && ok; ++z) {
          if (!co_alive(x, y) || !co_alive(y, z) || !co_alive(x, z)) continue;
          bool xy = oracle_above(assign, x, y), yz = oracle_above(assign, y, z),
               xz = oracle_above(assign, x, z);
          if (xy == yz && xz != xy) ok = false;  // 3-cycle
        }
    if (!ok) continue;
    // Puncture lines: every pinned-above strand above every pinned-below one.
    for (const auto& line : sys.lines) {
      for (int x = 0; x < 4 && ok; ++x) {
        if (!(line.above & (1 << x))) continue;
        for (int y = 0; y < 4 && ok; ++y)
          if ((line.below & (1 << y)) && x != y && !oracle_above(assign, x, y)) ok = false;
      }
      if (!ok) break;
    }
    if (!ok) continue;
    // Cap events: no live strand strictly inside the newborn/dying pair.
    for (const auto& cap : sys.caps) {
      int top = 2 * cap.curve, bot = top + 1;
      for (int x = 0; x < 4 && ok; ++x) {
        if ((x >> 1) == cap.curve || !sys.alive_at(x, cap.x)) continue;
        if (oracle_above(assign, top, x) && oracle_above(assign, x, bot)) ok = false;
      }
      if (!ok) break;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool strand_oracle(const CurveCode& a, const CurveCode& b) {
  require(a.n == b.n, Errc::mismatched_n, "codes on different puncture counts");
  for (int cfg : cap_configs(a, b))
    if (oracle_config_ok(a, b, cfg)) return true;
  return false;
}

// --- cyclic intervals ---------------------------------------------------------

CyclicInterval make_interval(int n, int i, int j) {
  require(n >= 1 && n <= 64, Errc::bad_range, "cyclic model supports 1 <= n <= 64");
  require(i >= 1 && i <= n && j >= 1 && j <= n, Errc::bad_range, "endpoint outside 1..n");
  return CyclicInterval{n, i, j};
}

std::vector<int> CyclicInterval::enclosed() const {
  std::vector<int> out;
  for (int k = i; k != j; k = k % n + 1) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t CyclicInterval::mask() const {
  uint64_t m = 0;
  for (int k = i; k != j; k = k % n + 1) m |= 1ULL << (k - 1);
  return m;
}

bool cyclic_disjoint(const CyclicInterval& a, const CyclicInterval& b) {
  require(a.n == b.n, Errc::mismatched_n, "intervals on different circles");
  uint64_t ma = a.mask(), mb = b.mask();
  return (ma & mb) == 0 || (ma & mb) == ma || (ma & mb) == mb;
}

// --- dual trees ----------------------------------------------------------------

std::vector<uint64_t> tree_splits(const LabelledTree& t) {
  int V = t.vertex_count();
  require(t.n_leaves <= 64, Errc::bad_range, "splits need n <= 64");
  std::vector<uint64_t> below(V, 0);
  std::vector<int> order, parent(V, -1), seen(V, 0);
  order.reserve(V);
  // iterative DFS from vertex 0 to get a post-order
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : t.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
  }
  std::vector<uint64_t> splits;
  uint64_t all = t.n_leaves == 64 ? ~0ULL : (1ULL << t.n_leaves) - 1;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    if (t.is_leaf(v)) below[v] = 1ULL << v;
    if (parent[v] != -1) {
      below[parent[v]] |= below[v];
      if (!t.is_leaf(v) && !t.is_leaf(parent[v])) {
        uint64_t side = below[v];
        if (side & 1ULL) side = all & ~side;  // normalize: side without label 1
        splits.push_back(side);
      }
    }
  }
  std::sort(splits.begin(), splits.end());
  return splits;
}

bool labelled_isomorphic(const LabelledTree& a, const LabelledTree& b) {
  return a.n_leaves == b.n_leaves && tree_splits(a) == tree_splits(b);
}

LabelledTree region_tree(const std::vector<std::vector<int>>& sets, int n) {
  require(n >= 3, Errc::n_too_small, "need at least 3 punctures");
  std::vector<uint64_t> masks;
  uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
  for (const auto& st : sets) {
    uint64_t m = 0;
    for (int j : st) {
      require(j >= 1 && j <= n && n <= 64, Errc::bad_range, "puncture outside 1..n");
      m |= 1ULL << (j - 1);
    }
    masks.push_back(m);
  }
  for (std::size_t x = 0; x < masks.size(); ++x)
    for (std::size_t y = x + 1; y < masks.size(); ++y) {
      uint64_t inter = masks[x] & masks[y];
      require(inter == 0 || inter == masks[x] || inter == masks[y], Errc::not_laminar,
              "enclosed sets overlap without nesting");
      require(masks[x] != masks[y] && (masks[x] ^ masks[y]) != all, Errc::not_pants,
              "duplicate bipartition gives an annulus region");
    }

  // Containment forest: parent = smallest strict superset.
  int m = int(masks.size());
  std::vector<int> parent(m, -1);
  for (int x = 0; x < m; ++x) {
    int best = -1;
    for (int y = 0; y < m; ++y) {
      if (x == y || (masks[x] & masks[y]) != masks[x] || masks[x] == masks[y]) continue;
      if (best == -1 || (masks[y] & masks[best]) == masks[y]) best = y;
    }
    parent[x] = best;
  }

  // Region vertices: one per set (index n + k) plus the outer region (last).
  LabelledTree t;
  t.n_leaves = n;
  t.adj.assign(std::size_t(n + m + 1), {});
  int outer = n + m;
  auto link = [&](int u, int v) {
    t.adj[u].push_back(v);
    t.adj[v].push_back(u);
  };
  for (int x = 0; x < m; ++x) link(n + x, parent[x] == -1 ? outer : n + parent[x]);
  // Each puncture attaches to the innermost region containing it.
  for (int j = 0; j < n; ++j) {
    int best = -1;
    for (int x = 0; x < m; ++x) {
      if (!(masks[x] & (1ULL << j))) continue;
      if (best == -1 || (masks[x] & masks[best]) == masks[x]) best = x;
    }
    link(j, best == -1 ? outer : n + best);
  }
  for (int v = n; v <= n + m; ++v)
    require(t.degree(v) == 3, Errc::not_pants,
            "complementary region is not a 3-holed sphere");
  return t;
}

LabelledTree dual_tree(const std::vector<CurveCode>& codes, int n) {
  std::vector<std::vector<int>> sets;
  for (const auto& c : codes) {
    require(c.n == n, Errc::mismatched_n, "code on a different puncture count");
    sets.push_back(c.s);
  }
  for (std::size_t x = 0; x < codes.size(); ++x)
    for (std::size_t y = x + 1; y < codes.size(); ++y)
      require(disjoint(codes[x], codes[y]), Errc::not_disjoint,
              "codes " + codes[x].str() + " and " + codes[y].str() + " intersect");
  return region_tree(sets, n);
}

LabelledTree dual_tree_cyclic(const std::vector<CyclicInterval>& arcs, int n) {
  std::vector<std::vector<int>> sets;
  for (const auto& a : arcs) {
    require(a.n == n, Errc::mismatched_n, "interval on a different circle");
    require(a.i != a.j, Errc::bad_range, "degenerate interval in a family");
    sets.push_back(a.enclosed());
  }
  for (std::size_t x = 0; x < arcs.size(); ++x)
    for (std::size_t y = x + 1; y < arcs.size(); ++y)
      require(cyclic_disjoint(arcs[x], arcs[y]), Errc::not_disjoint,
              "intervals cross");
  return region_tree(sets, n);
}

}  // namespace pantsatlas
