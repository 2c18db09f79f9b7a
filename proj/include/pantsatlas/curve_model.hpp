#pragma once
// Combinatorial model of simple closed curves on a sphere with n punctures
// lined up on a horizontal axis (punctures are labelled 1..n left to right).
//
// A curve is coded by the set s of punctures it encloses plus a wiggle map f
// telling, for every non-enclosed puncture strictly inside the span
// [min s, max s], whether the curve's strands detour above or below it.
// Every isotopy class of essential simple closed curve has exactly one such
// code, and two codes admit disjoint representatives iff the strand
// constraint system built from them is satisfiable.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pantsatlas/errors.hpp"

namespace pantsatlas {

enum class Side : uint8_t { Above, Below };

struct CurveCode {
  int n = 0;
  std::vector<int> s;                     // enclosed punctures, sorted ascending
  std::vector<std::pair<int, Side>> f;    // wiggle map, sorted by puncture

  int span_min() const { return s.front(); }
  int span_max() const { return s.back(); }
  bool encloses(int j) const;
  // Side at an in-span, non-enclosed puncture. Throws bad_wiggle_domain otherwise.
  Side wiggle_at(int j) const;
  // Essential curves enclose at least 2 and at most n-2 punctures.
  bool essential() const { return s.size() >= 2 && int(s.size()) <= n - 2; }

  bool operator==(const CurveCode&) const = default;
  bool operator<(const CurveCode&) const;
  std::string str() const;  // compact debug form, e.g. "{2,6|3^,4v,5^}"
};

// Validates and canonicalizes. Throws: bad_range (n < 1 or puncture out of
// [1,n]), empty_enclosed_set, bad_wiggle_domain (f keys != in-span gaps).
CurveCode make_code(int n, std::vector<int> s, const std::map<int, Side>& f);

// All codes over n punctures with min_size <= |s| <= max_size, every wiggle.
// Order: by enclosed set (as a sorted vector), then wiggle pattern.
// Throws: bad_range. Census size for [2, n] is (3^n - 2n - 1) / 4.
std::vector<CurveCode> gen_codes(int n, int min_size, int max_size);

// --- disjointness -----------------------------------------------------------

// The strand constraint system for a pair of codes. Each curve contributes a
// top and a bottom strand alive on an open x-interval around its span; caps
// join the pair at birth/death. Coordinates are scaled by 10 so cap events
// sit strictly between puncture lines. When both curves are born (or die)
// next to the same puncture the cap order is a free choice; `build_strand_system`
// takes one concrete choice and callers enumerate the <= 4 combinations.
//
// Strand ids: 0 = top of a, 1 = bottom of a, 2 = top of b, 3 = bottom of b.
struct StrandSystem {
  int birth[2];  // scaled x where each curve's strands appear
  int death[2];
  struct Line {
    int x;                 // scaled puncture position
    uint8_t above, below;  // bitmasks of strands pinned above / below the puncture
  };
  std::vector<Line> lines;
  struct Cap {
    int x;
    int curve;  // whose strands are joined here
  };
  std::vector<Cap> caps;

  bool alive_at(int strand, int x) const {
    int c = strand >> 1;
    return birth[c] < x && x < death[c];
  }
};

// cap_cfg bit 0: a's left cap outside b's (only meaningful on a min-tie);
// bit 1: same for the right end.
StrandSystem build_strand_system(const CurveCode& a, const CurveCode& b, int cap_cfg);

// Decision procedure: do the two isotopy classes admit disjoint
// representatives?  Satisfiability of the strand constraint system, solved as
// a 2-SAT over the four inter-curve strand orientations, taking the best cap
// order at tied ends. Equal codes are disjoint (parallel copies).
// Throws: mismatched_n.
bool disjoint(const CurveCode& a, const CurveCode& b);

// Brute-force twin used to validate `disjoint`: enumerates all 2^6 orientation
// assignments of the strand pairs and checks every puncture line and cap event
// directly. Throws: mismatched_n.
bool strand_oracle(const CurveCode& a, const CurveCode& b);

// --- cyclic intervals (unlabelled punctures on a circle) --------------------

// The curve gamma_{i,j} around the cyclic arc {i, i+1, ..., j-1} (mod n,
// 1-based). i == j is the degenerate empty interval.
struct CyclicInterval {
  int n = 0;
  int i = 0, j = 0;

  std::vector<int> enclosed() const;    // sorted puncture labels
  uint64_t mask() const;                // bit k-1 = puncture k (n <= 64 callers)
  bool operator==(const CyclicInterval&) const = default;
};

CyclicInterval make_interval(int n, int i, int j);  // throws bad_range

// Disjoint on the sphere iff the enclosed arcs are nested (either way) or
// disjoint as sets. Throws: mismatched_n.
bool cyclic_disjoint(const CyclicInterval& a, const CyclicInterval& b);

// --- dual trees --------------------------------------------------------------

// Tree with n_leaves labelled leaves. Vertices 0..n_leaves-1 are the leaves
// (vertex k carries label k+1); the rest are internal.
struct LabelledTree {
  int n_leaves = 0;
  std::vector<std::vector<int>> adj;

  int vertex_count() const { return int(adj.size()); }
  bool is_leaf(int v) const { return v < n_leaves; }
  int degree(int v) const { return int(adj[v].size()); }
};

// The set of leaf bipartitions induced by internal edges, each normalized to
// the side not containing label 1; a tree is determined by its splits, so two
// trees are labelled-isomorphic iff these sets are equal. Requires n <= 64.
std::vector<uint64_t> tree_splits(const LabelledTree& t);
bool labelled_isomorphic(const LabelledTree& a, const LabelledTree& b);

// Region tree of a laminar family of enclosed sets (each a sorted subset of
// 1..n). Shared by the wiggle-code and cyclic-interval frontends.
// Throws: not_laminar (sets overlap), not_pants (some complementary region is
// not a 3-holed sphere, including duplicate bipartitions).
LabelledTree region_tree(const std::vector<std::vector<int>>& sets, int n);

// Dual tree of a pants decomposition given by pairwise disjoint codes.
// Throws: not_disjoint, not_laminar, not_pants, mismatched_n.
LabelledTree dual_tree(const std::vector<CurveCode>& codes, int n);

// Same for cyclic-interval families on the circle.
LabelledTree dual_tree_cyclic(const std::vector<CyclicInterval>& arcs, int n);

}  // namespace pantsatlas
