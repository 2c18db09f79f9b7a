#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pantsatlas/curve_model.hpp"

namespace pantsatlas {

// --- labelled trivalent trees --------------------------------------------------

// (2n-5)!! labelled trivalent trees on n leaves.
uint64_t count_labelled_trees(int n);

// Streams every labelled trivalent tree on leaves 0..n-1 exactly once
// (recursive leaf insertion by edge subdivision). Internal ids are n..2n-3.
void enum_labelled_trees(int n, const std::function<void(const LabelledTree&)>& visit);

// Materialized variant; guarded to n <= 9 to keep memory sane.
std::vector<LabelledTree> all_labelled_trees(int n);

// Canonical encoding of the unlabelled shape (centroid-rooted AHU string).
std::string canonical_unlabelled(const LabelledTree& t);

// All unlabelled shapes on n leaves, sorted. n <= 10 (enumeration is (2n-5)!!).
std::vector<std::string> enum_unlabelled_classes(int n);

// --- pants types ----------------------------------------------------------------

// Sorted triple (k1 <= k2 <= k3) of boundary weights of a single pants.
struct PantsType {
  int k1 = 0, k2 = 0, k3 = 0;
  auto operator<=>(const PantsType&) const = default;
};
PantsType make_pants_type(int a, int b, int c);

// All triples with k1+k2+k3 = n; essential_only restricts to k1 >= 1.
std::vector<PantsType> enum_pants_types(int n, bool essential_only = true);

// --- edges and separations ------------------------------------------------------

// Internal edges (both endpoints of degree 3) as vertex pairs, u < v.
std::vector<std::pair<int, int>> internal_edges(const LabelledTree& t);

// 1-based labels on the side of internal edge {u,v} not containing leaf label 1.
std::vector<int> edge_leafset(const LabelledTree& t, int u, int v);

// The lower-bound witness tree: a caterpillar backbone of left-combs with i
// leaves each plus a remainder comb, so that at least floor(n/i) (edge, side)
// pairs cut off exactly i leaves.
LabelledTree build_Ti(int n, int i);

// Number of directed (edge, side) pairs whose side holds exactly i leaves.
int count_separating_edges(const LabelledTree& t, int i);

// sum_{i=2}^{floor(n/2)} floor(n/i).
long lower_bound_sum(int n);

// --- closed-surface dual graphs -------------------------------------------------

// Connected multigraph; loops stored as (v,v) and contributing 2 to degree.
struct MultiGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  bool operator==(const MultiGraph&) const = default;

  int degree(int v) const;
  bool connected() const;
  int cyclomatic() const;
};

// All connected trivalent multigraphs on 2g-2 vertices up to isomorphism.
std::vector<MultiGraph> enum_dual_graphs(int g);

}  // namespace pantsatlas
