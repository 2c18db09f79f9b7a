#include "pantsatlas/labelled_sphere.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>

#include "pantsatlas/type_census.hpp"
#include "pantsatlas/util.hpp"

namespace pantsatlas {

// --- census ----------------------------------------------------------------------

std::vector<CurveCode> gen_lambda(int n, int min_size, int max_size) {
  return gen_codes(n, min_size, max_size);
}

uint64_t lambda_closed_form(int n) {
  require(n >= 1 && n <= 39, Errc::bad_range, "closed form overflows past n=39");
  return (pow3(n) - 2 * uint64_t(n) - 1) / 4;
}

uint64_t required_bipartitions(int n) {
  require(n >= 4, Errc::n_too_small, "bipartitions with both sides >= 2 need n >= 4");
  return (uint64_t(1) << (n - 1)) - uint64_t(n) - 1;
}

// --- recognition -------------------------------------------------------------------

namespace {

struct Realizer {
  const LabelledTree& t;
  const RealizeOptions& opts;
  int n = 0;                        // ambient puncture count
  uint64_t all_leaves = 0;          // mask over leaf labels (bit = label-1)
  std::vector<uint64_t> below;      // leaf mask in the subtree hanging below v
  std::vector<EdgeCode> out;

  explicit Realizer(const LabelledTree& tree, const RealizeOptions& o) : t(tree), opts(o) {}

  int root() const {
    if (opts.root >= 0) {
      require(opts.root < t.vertex_count() && !t.is_leaf(opts.root), Errc::root_not_internal,
              "root must be an internal vertex");
      return opts.root;
    }
    for (int v = 0; v < t.vertex_count(); ++v)
      if (!t.is_leaf(v)) return v;
    fail(Errc::root_not_internal, "tree has no internal vertex");
  }

  void fill_below(int r) {
    const int V = t.vertex_count();
    below.assign(size_t(V), 0);
    std::vector<int> parent(size_t(V), -2), order;
    order.reserve(size_t(V));
    order.push_back(r);
    parent[size_t(r)] = -1;
    for (size_t i = 0; i < order.size(); ++i)
      for (int u : t.adj[size_t(order[i])])
        if (parent[size_t(u)] == -2) {
          parent[size_t(u)] = order[i];
          order.push_back(u);
        }
    for (size_t i = order.size(); i-- > 0;) {
      const int v = order[i];
      if (t.is_leaf(v)) below[size_t(v)] = uint64_t(1) << v;
      if (parent[size_t(v)] >= 0) below[size_t(parent[size_t(v)])] |= below[size_t(v)];
    }
  }

  static Side side_of(int8_t v) { return v == 0 ? Side::Above : Side::Below; }

  CurveCode code_for(uint64_t s_mask, const std::vector<int8_t>& ctx) const {
    std::vector<int> s;
    std::map<int, Side> f;
    for (int q = 1; q <= n; ++q)
      if (s_mask >> (q - 1) & 1) s.push_back(q);
    for (int q = s.front() + 1; q < s.back(); ++q) {
      if (s_mask >> (q - 1) & 1) continue;
      require(ctx[size_t(q)] >= 0, Errc::bad_parameters, "no side known at an in-span puncture");
      f[q] = side_of(ctx[size_t(q)]);
    }
    return make_code(n, s, f);
  }

  // ctx gives the stacking side at every puncture outside the ground set of v's
  // subtree; parent_code is the curve of the edge above v (for pass-throughs).
  void visit(int v, int parent, uint64_t ground, const std::vector<int8_t>& ctx,
             const CurveCode* parent_code) {
    std::vector<int> children;
    for (int u : t.adj[size_t(v)])
      if (u != parent) children.push_back(u);
    if (children.empty()) return;
    std::sort(children.begin(), children.end(), [&](int a, int b) {
      return std::countr_zero(below[size_t(a)]) < std::countr_zero(below[size_t(b)]);
    });

    if (parent >= 0 && children.size() == 1) {  // pass-through: same curve continues
      const int c = children[0];
      if (parent_code) {
        out.push_back({v, c, *parent_code});
        const CurveCode copy = *parent_code;
        if (!t.is_leaf(c)) visit(c, v, ground, ctx, &copy);
      } else if (!t.is_leaf(c)) {
        visit(c, v, ground, ctx, nullptr);
      }
      return;
    }

    require(children.size() <= 3, Errc::not_trivalent, "vertex of degree > 3");
    static constexpr Role kOrder[3] = {Role::Above, Role::Below, Role::Between};
    std::vector<Role> role(children.size(), Role::Above);
    bool used[3] = {false, false, false};
    for (size_t i = 0; i < children.size(); ++i) {
      auto it = opts.role_override.find(children[i]);
      if (it == opts.role_override.end()) continue;
      require(!used[size_t(it->second)], Errc::bad_parameters, "duplicate branch role");
      role[i] = it->second;
      used[size_t(it->second)] = true;
    }
    for (size_t i = 0; i < children.size(); ++i) {
      if (opts.role_override.count(children[i])) continue;
      for (Role r : kOrder)
        if (!used[size_t(r)]) {
          role[i] = r;
          used[size_t(r)] = true;
          break;
        }
    }
    uint64_t above_mask = 0, below_mask = 0;
    for (size_t i = 0; i < children.size(); ++i) {
      if (role[i] == Role::Above) above_mask = below[size_t(children[i])];
      if (role[i] == Role::Below) below_mask = below[size_t(children[i])];
    }

    for (size_t i = 0; i < children.size(); ++i) {
      const int c = children[i];
      const uint64_t s_mask = below[size_t(c)];
      std::vector<int8_t> ctx_c = ctx;
      for (uint64_t rest = ground & ~s_mask; rest; rest &= rest - 1) {
        const int q = std::countr_zero(rest) + 1;
        int8_t side = 0;
        switch (role[i]) {
          case Role::Above: side = 0; break;
          case Role::Below: side = 1; break;
          case Role::Between:
            require((above_mask | below_mask) >> (q - 1) & 1, Errc::bad_parameters,
                    "between role needs above and below siblings");
            side = (above_mask >> (q - 1) & 1) ? 1 : 0;
            break;
        }
        ctx_c[size_t(q)] = side;
      }
      if (std::popcount(s_mask) >= 2) {
        const CurveCode code = code_for(s_mask, ctx_c);
        out.push_back({v, c, code});
        if (!t.is_leaf(c)) visit(c, v, s_mask, ctx_c, &code);
      } else if (!t.is_leaf(c)) {
        visit(c, v, s_mask, ctx_c, nullptr);
      }
    }
  }

  std::vector<EdgeCode> run() {
    const int nl = t.n_leaves;
    require(nl >= 1 && nl <= 64, Errc::n_too_large, "leaf labels must fit in 64 bits");
    n = opts.n_punctures < 0 ? nl : opts.n_punctures;
    require(n >= nl && n <= 64, Errc::bad_parameters, "ambient punctures must cover the leaves");
    all_leaves = nl == 64 ? ~uint64_t(0) : (uint64_t(1) << nl) - 1;
    const int r = root();
    fill_below(r);
    std::vector<int8_t> ctx(size_t(n) + 1, -1);
    for (auto [p, side] : opts.context) {
      require(p >= 1 && p <= n, Errc::bad_range, "context puncture out of range");
      require(!(all_leaves >> (p - 1) & 1), Errc::bad_parameters,
              "context given for a puncture inside the tree");
      ctx[size_t(p)] = side == Side::Above ? 0 : 1;
    }
    visit(r, -1, all_leaves, ctx, nullptr);
    return std::move(out);
  }
};

}  // namespace

std::vector<EdgeCode> realize_tree(const LabelledTree& t, const RealizeOptions& opts) {
  Realizer r(t, opts);
  return r.run();
}

RecognitionResult recognize(const LabelledTree& t, int root) {
  for (int v = 0; v < t.vertex_count(); ++v) {
    const int want = t.is_leaf(v) ? 1 : 3;
    require(t.degree(v) == want, Errc::not_trivalent, "tree is not trivalent");
  }
  RealizeOptions opts;
  opts.root = root;
  RecognitionResult res;
  res.codes = realize_tree(t, opts);
  res.root = root >= 0 ? root : t.n_leaves;
  return res;
}

// --- universality -------------------------------------------------------------------

namespace {

// Bipartition key: the side not containing puncture 1, as a label mask.
uint64_t split_key(const CurveCode& c, uint64_t all) {
  uint64_t m = 0;
  for (int j : c.s) m |= uint64_t(1) << (j - 1);
  if (m & 1) m = all & ~m;
  return m;
}

struct DisjointCache {
  const std::vector<CurveCode>* family;
  std::unordered_map<uint64_t, bool> memo;

  bool query(int i, int j) {
    if (i > j) std::swap(i, j);
    const uint64_t key = (uint64_t(i) << 32) | uint64_t(j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const bool d = disjoint((*family)[size_t(i)], (*family)[size_t(j)]);
    memo.emplace(key, d);
    return d;
  }
};

bool realize_from_groups(const std::vector<const std::vector<int>*>& groups, size_t at,
                         std::vector<int>& picked, DisjointCache& cache) {
  if (at == groups.size()) return true;
  for (int idx : *groups[at]) {
    bool ok = true;
    for (int prev : picked)
      if (!cache.query(prev, idx)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    picked.push_back(idx);
    if (realize_from_groups(groups, at + 1, picked, cache)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

VerifyReport verify_universal_labelled(const std::vector<CurveCode>& family, int n) {
  require(n >= 3, Errc::n_too_small, "need at least 3 punctures");
  for (const auto& c : family)
    require(c.n == n, Errc::mismatched_n, "family code on a different puncture count");
  const uint64_t all = (uint64_t(1) << n) - 1;

  std::map<uint64_t, std::vector<int>> groups;
  for (size_t i = 0; i < family.size(); ++i) {
    const auto& c = family[i];
    if (int(c.s.size()) < 2 || int(c.s.size()) > n - 2) continue;
    groups[split_key(c, all)].push_back(int(i));
  }

  bool fast = true;
  {
    std::set<CurveCode> have(family.begin(), family.end());
    for (const auto& c : gen_codes(n, 2, std::max(2, n - 2)))
      if (!have.count(c)) {
        fast = false;
        break;
      }
  }

  VerifyReport report;
  report.total = count_labelled_trees(n);
  DisjointCache cache{&family, {}};
  uint64_t id = 0;
  enum_labelled_trees(n, [&](const LabelledTree& t) {
    const uint64_t tree_id = id++;
    if (fast) {
      ++report.realized;
      return;
    }
    const auto splits = tree_splits(t);
    std::vector<const std::vector<int>*> cand;
    bool feasible = true;
    for (uint64_t s : splits) {
      auto it = groups.find(s);
      if (it == groups.end()) {
        feasible = false;
        break;
      }
      cand.push_back(&it->second);
    }
    if (feasible) {
      std::sort(cand.begin(), cand.end(),
                [](const std::vector<int>* a, const std::vector<int>* b) { return a->size() < b->size(); });
      std::vector<int> picked;
      feasible = realize_from_groups(cand, 0, picked, cache);
    }
    if (feasible)
      ++report.realized;
    else
      report.failures.push_back(std::to_string(tree_id));
  });
  return report;
}

// --- minimal family search -----------------------------------------------------------

namespace {

struct ExactSearch {
  int n = 0;
  std::vector<CurveCode> census;
  std::vector<uint64_t> class_keys;                   // search order, {1,2}|rest first
  std::map<uint64_t, std::vector<int>> by_class;      // class key -> census indices
  std::vector<std::vector<size_t>> tree_classes;      // per tree, positions in class_keys
  uint64_t budget = 0, nodes = 0;
  DisjointCache cache{nullptr, {}};

  // One subset of census indices per class; a tree is realized when every pair
  // of its classes contributes a mutually disjoint choice. With one code per
  // class that degenerates to: all chosen codes of the tree's classes pairwise
  // disjoint.
  std::vector<std::vector<int>> chosen;

  bool tree_ok(const std::vector<size_t>& classes, size_t upto) {
    for (size_t c : classes)
      if (c >= upto) return true;  // not fully assigned yet
    // All classes assigned: need one representative per class, pairwise disjoint.
    std::vector<int> pick;
    return pick_disjoint(classes, 0, pick);
  }

  bool pick_disjoint(const std::vector<size_t>& classes, size_t at, std::vector<int>& pick) {
    if (at == classes.size()) return true;
    for (int idx : chosen[classes[at]]) {
      bool ok = true;
      for (int prev : pick)
        if (!cache.query(prev, idx)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back(idx);
      if (pick_disjoint(classes, at + 1, pick)) return true;
      pick.pop_back();
    }
    return false;
  }

  // Assign classes in order; sizes[i] codes from class i; returns true on success.
  bool assign(size_t at, const std::vector<int>& sizes) {
    if (++nodes > budget) return false;
    if (at == class_keys.size()) return true;
    const auto& pool = by_class[class_keys[at]];
    std::vector<int> subset;
    return choose_subset(at, sizes, pool, 0, subset);
  }

  bool choose_subset(size_t at, const std::vector<int>& sizes, const std::vector<int>& pool,
                     size_t from, std::vector<int>& subset) {
    if (int(subset.size()) == sizes[at]) {
      chosen[at] = subset;
      bool ok = true;
      for (const auto& classes : tree_classes)
        if (std::find(classes.begin(), classes.end(), at) != classes.end() &&
            !tree_ok(classes, at + 1)) {
          ok = false;
          break;
        }
      if (ok && assign(at + 1, sizes)) return true;
      chosen[at].clear();
      return false;
    }
    for (size_t i = from; i < pool.size(); ++i) {
      subset.push_back(pool[i]);
      if (choose_subset(at, sizes, pool, i + 1, subset)) return true;
      subset.pop_back();
    }
    return false;
  }

  // Distribute `extra` additional codes over the classes (sizes start at 1).
  bool distribute(size_t at, int extra, std::vector<int>& sizes) {
    if (at == sizes.size())
      return extra == 0 && (chosen.assign(sizes.size(), {}), assign(0, sizes));
    const int cap = int(by_class[class_keys[at]].size()) - 1;
    for (int add = 0; add <= std::min(extra, cap); ++add) {
      sizes[size_t(at)] = 1 + add;
      if (distribute(at + 1, extra - add, sizes)) return true;
    }
    return false;
  }
};

}  // namespace

SearchResult min_family_search(int n, bool exact, uint64_t budget) {
  require(n >= 4, Errc::n_too_small, "search needs n >= 4");
  require(n <= (exact ? 5 : 6), Errc::n_too_large,
          exact ? "exact search is capped at n=5" : "greedy search is capped at n=6");
  std::vector<CurveCode> census = gen_codes(n, 2, n - 2);

  if (!exact) {
    std::vector<CurveCode> fam = census;
    bool improved = true;
    while (improved) {
      improved = false;
      for (size_t i = 0; i < fam.size();) {
        std::vector<CurveCode> trial = fam;
        trial.erase(trial.begin() + long(i));
        if (verify_universal_labelled(trial, n).universal()) {
          fam = std::move(trial);
          improved = true;
        } else {
          ++i;
        }
      }
    }
    return {fam, false};
  }

  ExactSearch s;
  s.n = n;
  s.census = census;
  s.budget = budget;
  s.cache.family = &s.census;
  const uint64_t all = (uint64_t(1) << n) - 1;
  for (size_t i = 0; i < census.size(); ++i)
    s.by_class[split_key(census[i], all)].push_back(int(i));
  // Bipartition {1,2}|rest leads the assignment order.
  const uint64_t first_key = all & ~uint64_t(3);
  s.class_keys.push_back(first_key);
  for (const auto& [key, pool] : s.by_class)
    if (key != first_key) s.class_keys.push_back(key);
  std::map<uint64_t, size_t> class_pos;
  for (size_t i = 0; i < s.class_keys.size(); ++i) class_pos[s.class_keys[i]] = i;
  enum_labelled_trees(n, [&](const LabelledTree& t) {
    std::vector<size_t> classes;
    for (uint64_t key : tree_splits(t)) classes.push_back(class_pos.at(key));
    s.tree_classes.push_back(std::move(classes));
  });

  for (int extra = 0; extra <= int(census.size()) - int(s.class_keys.size()); ++extra) {
    std::vector<int> sizes(s.class_keys.size(), 1);
    if (s.distribute(0, extra, sizes)) {
      std::vector<CurveCode> fam;
      for (const auto& subset : s.chosen)
        for (int idx : subset) fam.push_back(s.census[size_t(idx)]);
      std::sort(fam.begin(), fam.end());
      return {fam, s.nodes <= s.budget};
    }
    if (s.nodes > s.budget) break;
  }
  return {census, false};  // budget exhausted: the census itself is the best known
}

}  // namespace pantsatlas
