#include "pantsatlas/unlabelled_sphere.hpp"

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

namespace {

// Bitset over Z_n with all n rotations precomputed: row r holds, at bit x,
// membership of x+r (mod n). A member triple with consecutive cyclic gaps
// (a, b) is then a common set bit of rows 0, a and a+b.
struct CyclicBits {
  int n, words;
  std::vector<uint64_t> rows;

  CyclicBits(int n, const std::vector<int>& members) : n(n), words((n + 63) / 64) {
    std::vector<uint64_t> base(size_t(words), 0);
    for (int m : members) {
      int v = ((m % n) + n) % n;
      base[size_t(v >> 6)] |= uint64_t(1) << (v & 63);
    }
    rows.assign(size_t(n) * size_t(words), 0);
    for (int r = 0; r < n; ++r) {
      uint64_t* row = &rows[size_t(r) * size_t(words)];
      for (int x = 0; x < n; ++x) {
        int src = (x + r) % n;
        if (base[size_t(src >> 6)] >> (src & 63) & 1) row[x >> 6] |= uint64_t(1) << (x & 63);
      }
    }
  }

  // Does some member x have x+a and x+a+b (mod n) in the set as well?
  bool gap_pair(int a, int b) const {
    const uint64_t* r0 = rows.data();
    const uint64_t* ra = &rows[size_t(a % n) * size_t(words)];
    const uint64_t* rab = &rows[size_t((a + b) % n) * size_t(words)];
    for (int w = 0; w < words; ++w)
      if (r0[w] & ra[w] & rab[w]) return true;
    return false;
  }
};

int as_label(int v, int n) {  // residue 0..n-1 -> puncture label 1..n
  int r = ((v % n) + n) % n;
  return r == 0 ? n : r;
}

}  // namespace

std::vector<CyclicInterval> IndexFamily::curves() const {
  std::vector<CyclicInterval> out;
  if (s.size() >= 2) out.reserve(s.size() * (s.size() - 1));
  for (int a : s)
    for (int b : s)
      if (a != b) out.push_back(make_interval(n, as_label(a, n), as_label(b, n)));
  return out;
}

IndexFamily random_index_set(int n, double c, uint64_t seed) {
  require(n >= 3, Errc::n_too_small, "index sampling needs n >= 3");
  require(c > 0, Errc::bad_c, "sampling constant must be positive");
  double p = c * std::cbrt(std::log(double(n))) / std::cbrt(double(n));
  IndexFamily fam;
  fam.n = n;
  fam.seed = seed;
  fam.c = c;
  fam.clamped = p > 1;
  if (fam.clamped) p = 1;
  for (int i = 0; i < n; ++i)
    if (keyed_uniform(seed, uint64_t(i)) < p) fam.s.push_back(i);
  return fam;
}

std::vector<PantsType> covers_pants_types(const IndexFamily& fam, bool essential_only) {
  require(fam.n >= 3, Errc::n_too_small, "pants types need n >= 3");
  CyclicBits bits(fam.n, fam.s);
  auto types = enum_pants_types(fam.n, essential_only);
  // A type is hit by either cyclic order of its gaps: reflection is allowed.
  std::vector<char> miss(types.size(), 0);
  parallel_for(types.size(), [&](size_t i) {
    const PantsType& t = types[i];
    miss[i] = !bits.gap_pair(t.k1, t.k2) && !bits.gap_pair(t.k2, t.k1);
  });
  std::vector<PantsType> out;
  for (size_t i = 0; i < types.size(); ++i)
    if (miss[i]) out.push_back(types[i]);
  return out;
}

IndexFamily greedy_index_set(int n, bool essential_only) {
  require(n >= 3, Errc::n_too_small, "index sampling needs n >= 3");
  IndexFamily fam;
  fam.n = n;
  std::vector<char> in(size_t(n), 0);
  while (true) {
    size_t missing = covers_pants_types(fam, essential_only).size();
    if (missing == 0) break;
    // Adding an index never loses coverage, so some candidate scores <= missing.
    int best = -1;
    size_t best_missing = missing + 1;
    for (int x = 0; x < n; ++x) {
      if (in[size_t(x)]) continue;
      fam.s.push_back(x);
      size_t m = covers_pants_types(fam, essential_only).size();
      fam.s.pop_back();
      if (m < best_missing) {
        best_missing = m;
        best = x;
      }
    }
    in[size_t(best)] = 1;
    fam.s.insert(std::lower_bound(fam.s.begin(), fam.s.end(), best), best);
  }
  return fam;
}

namespace {

// Exact minimum cover: DFS over ascending index sets containing 0, with the
// covered-type count maintained incrementally (each new member closes one
// triple per pair of old members; a triple realizes exactly one type).
struct ExactCover {
  int n;
  std::vector<PantsType> types;
  std::vector<int> type_id;  // (k1, k2) sorted gap prefix -> type index
  std::vector<int> hit;      // per-type count of chosen triples realizing it
  int covered = 0;
  std::vector<int> cur;

  explicit ExactCover(int n) : n(n), types(enum_pants_types(n, true)) {
    type_id.assign(size_t(n + 1) * size_t(n + 1), -1);
    hit.assign(types.size(), 0);
    for (size_t i = 0; i < types.size(); ++i)
      type_id[size_t(types[i].k1) * size_t(n + 1) + size_t(types[i].k2)] = int(i);
  }

  int tid(int u, int v, int x) const {  // u < v < x
    int g[3] = {v - u, x - v, n - x + u};
    std::sort(g, g + 3);
    return type_id[size_t(g[0]) * size_t(n + 1) + size_t(g[1])];
  }

  void push(int x) {
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j)
        if (++hit[size_t(tid(cur[i], cur[j], x))] == 1) ++covered;
    cur.push_back(x);
  }

  void pop() {
    int x = cur.back();
    cur.pop_back();
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j)
        if (--hit[size_t(tid(cur[i], cur[j], x))] == 0) --covered;
  }

  bool dfs(int next, int k) {
    int total = int(types.size());
    int m = int(cur.size());
    if (m == k) return covered == total;
    // Even if every yet-unclosed triple hit a fresh type we could not finish.
    if (uint64_t(covered) + binomial(uint64_t(k), 3) - binomial(uint64_t(m), 3) <
        uint64_t(total))
      return false;
    for (int x = next; x <= n - (k - m); ++x) {
      push(x);
      if (dfs(x + 1, k)) return true;
      pop();
    }
    return false;
  }
};

}  // namespace

IndexFamily exact_min_index_set(int n) {
  require(n >= 3, Errc::n_too_small, "index sampling needs n >= 3");
  require(n <= 30, Errc::n_too_large, "exact search is capped at n = 30");
  ExactCover search(n);
  search.push(0);  // rotation symmetry: the minimum is attained with 0 in the set
  int kmin = 3;
  while (binomial(uint64_t(kmin), 3) < search.types.size()) ++kmin;
  for (int k = kmin; k <= n; ++k)
    if (search.dfs(1, k)) {
      IndexFamily fam;
      fam.n = n;
      fam.s = search.cur;
      return fam;
    }
  fail(Errc::bad_parameters, "full index set fails to cover; unreachable");
}

std::vector<CyclicInterval> all_pairs_family(int n) {
  require(n >= 3, Errc::n_too_small, "need at least 3 punctures");
  std::vector<CyclicInterval> out;
  out.reserve(size_t(n) * size_t(n - 1));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.push_back(make_interval(n, i, j));
  return out;
}

// --- planar realization of a shape ----------------------------------------------

namespace {

// Shape strings are nested parens, leaf = "()", with an optional bicentroid
// wrapper "<AB>" joining two rooted halves.
struct ShapeParser {
  const std::string& s;
  size_t pos = 0;
  std::vector<std::vector<int>> kids;

  explicit ShapeParser(const std::string& str) : s(str) {}

  int parse_vertex() {
    require(pos < s.size() && s[pos] == '(', Errc::bad_parameters, "malformed shape string");
    ++pos;
    int id = int(kids.size());
    kids.emplace_back();
    while (pos < s.size() && s[pos] == '(') {
      int c = parse_vertex();
      kids[size_t(id)].push_back(c);
    }
    require(pos < s.size() && s[pos] == ')', Errc::bad_parameters, "malformed shape string");
    ++pos;
    return id;
  }
};

}  // namespace

std::vector<CyclicInterval> realize_unlabelled_tree(const std::string& cls, int n) {
  require(n >= 3 && n <= 64, Errc::bad_range, "cyclic model supports 3 <= n <= 64");
  require(!cls.empty(), Errc::bad_parameters, "empty shape string");
  ShapeParser p(cls);
  int root1, root2 = -1;
  if (cls[0] == '<') {
    ++p.pos;
    root1 = p.parse_vertex();
    root2 = p.parse_vertex();
    require(p.pos < cls.size() && cls[p.pos] == '>', Errc::bad_parameters,
            "malformed shape string");
    ++p.pos;
  } else {
    root1 = p.parse_vertex();
  }
  require(p.pos == cls.size(), Errc::bad_parameters, "trailing characters in shape string");

  int leaves = 0;
  for (size_t v = 0; v < p.kids.size(); ++v) {
    size_t deg = p.kids[v].size();
    bool root = int(v) == root1 || int(v) == root2;
    if (deg == 0) {
      ++leaves;
      require(!root, Errc::not_trivalent, "shape has fewer than 3 leaves");
    } else {
      // internal degree 3: root carries all children, halves get a joining edge
      size_t want = root ? (root2 >= 0 ? 2 : 3) : 2;
      require(deg == want, Errc::not_trivalent, "shape has a non-trivalent vertex");
    }
  }
  require(leaves == n, Errc::leaf_count_mismatch, "shape leaf count differs from n");

  // Plant in the plane: DFS leaf order is the cyclic puncture order, and every
  // internal edge cuts off the consecutive leaf arc of its far subtree.
  std::vector<CyclicInterval> out;
  int next_leaf = 1;
  std::function<std::pair<int, int>(int)> walk = [&](int v) -> std::pair<int, int> {
    if (p.kids[size_t(v)].empty()) {
      int at = next_leaf++;
      return {at, at};
    }
    int lo = 0, hi = 0;
    for (int c : p.kids[size_t(v)]) {
      auto [clo, chi] = walk(c);
      if (lo == 0) lo = clo;
      hi = chi;
      if (!p.kids[size_t(c)].empty()) out.push_back(make_interval(n, clo, chi % n + 1));
    }
    return {lo, hi};
  };
  auto [lo1, hi1] = walk(root1);
  if (root2 >= 0) {
    out.push_back(make_interval(n, lo1, hi1 % n + 1));  // the bicentroid edge
    walk(root2);
  }
  std::sort(out.begin(), out.end(), [](const CyclicInterval& a, const CyclicInterval& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  return out;
}

// --- universality over unlabelled shapes ----------------------------------------

namespace {

// Pick n-3 pairwise laminar splits from `cand` whose region tree has shape
// `cls`. Splits are complement-normalized masks, which is safe: flipping an
// arc to its complement preserves nested-or-disjoint, and the region tree of
// the same curve family is shape-identical either way.
bool shape_search(const std::vector<uint64_t>& cand, const std::string& cls, int n,
                  uint64_t budget) {
  int need = n - 3;
  std::vector<uint64_t> chosen;
  uint64_t nodes = 0;
  std::function<bool(size_t)> dfs = [&](size_t next) -> bool {
    if (int(chosen.size()) == need) {
      std::vector<std::vector<int>> sets;
      sets.reserve(chosen.size());
      for (uint64_t m : chosen) {
        std::vector<int> st;
        for (int j = 1; j <= n; ++j)
          if (m >> (j - 1) & 1) st.push_back(j);
        sets.push_back(std::move(st));
      }
      return canonical_unlabelled(region_tree(sets, n)) == cls;
    }
    if (cand.size() - next < size_t(need) - chosen.size()) return false;
    for (size_t i = next; i < cand.size(); ++i) {
      if (++nodes > budget) return false;
      uint64_t m = cand[i];
      bool ok = true;
      for (uint64_t c : chosen) {
        uint64_t inter = c & m;
        if (inter != 0 && inter != c && inter != m) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(m);
      if (dfs(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return dfs(0);
}

}  // namespace

UnlabelledReport verify_universal_unlabelled(const std::vector<CyclicInterval>& fam, int n,
                                             uint64_t budget) {
  auto classes = enum_unlabelled_classes(n);  // enforces 3 <= n <= 10
  const uint64_t all = (uint64_t(1) << n) - 1;

  std::set<uint64_t> have;
  for (const auto& iv : fam) {
    require(iv.n == n, Errc::mismatched_n, "family member on a different circle");
    uint64_t m = iv.mask();
    if (m == 0 || m == all) continue;  // degenerate arcs cannot appear in a family
    have.insert(m & 1 ? all & ~m : m);  // normalize to the side without puncture 1
  }
  std::vector<uint64_t> cand(have.begin(), have.end());

  UnlabelledReport rep;
  rep.total = classes.size();
  for (const auto& cls : classes) {
    bool ok = true;
    for (const auto& iv : realize_unlabelled_tree(cls, n)) {
      uint64_t m = iv.mask();
      if (!have.count(m & 1 ? all & ~m : m)) {
        ok = false;
        break;
      }
    }
    if (!ok) ok = shape_search(cand, cls, n, budget);
    if (ok)
      ++rep.realized;
    else
      rep.failures.push_back(cls);
  }
  return rep;
}

}  // namespace pantsatlas
