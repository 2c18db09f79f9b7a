#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pantsatlas/curve_model.hpp"
#include "pantsatlas/type_census.hpp"

namespace pantsatlas {

// --- randomized index families --------------------------------------------------

struct IndexFamily {
  int n = 0;
  std::vector<int> s;                  // generator indices, residues 0..n-1 (0 names puncture n)
  uint64_t seed = 0;
  double c = 0.0;
  bool clamped = false;                // p was capped at 1

  // Induced ordered nondegenerate intervals; size |s|*(|s|-1).
  std::vector<CyclicInterval> curves() const;
  uint64_t family_size() const { return uint64_t(s.size()) * (s.size() - 1); }
};

// Bernoulli(p) sample with p = c * ln(n)^{1/3} / n^{1/3}, clamped to 1.
// Membership of index i depends only on (seed, i).
IndexFamily random_index_set(int n, double c, uint64_t seed);

// Pants types NOT covered: type (k1,k2,k3) is covered when some 3-subset of s
// has cyclic gaps (k1,k2,k3) in either rotational order.
std::vector<PantsType> covers_pants_types(const IndexFamily& fam, bool essential_only = true);

// Adds the index covering the most uncovered types until everything is covered.
IndexFamily greedy_index_set(int n, bool essential_only = true);

// Minimum-size index set with full essential coverage; DFS with 0 forced into
// the set for rotation symmetry breaking. n <= 30.
IndexFamily exact_min_index_set(int n);

// All ordered nondegenerate intervals gamma_{i,j}, i != j; size n(n-1).
std::vector<CyclicInterval> all_pairs_family(int n);

// --- unlabelled universality ------------------------------------------------------

// Plants the shape in the plane (DFS leaf order = cyclic order) and maps each
// internal edge to the interval of its consecutive leaf arc.
std::vector<CyclicInterval> realize_unlabelled_tree(const std::string& cls, int n);

struct UnlabelledReport {
  uint64_t total = 0;
  uint64_t realized = 0;
  std::vector<std::string> failures;
};

// For every unlabelled shape on n leaves: constructive fast path through
// realize_unlabelled_tree, then bounded backtracking over laminar subfamilies.
UnlabelledReport verify_universal_unlabelled(const std::vector<CyclicInterval>& fam, int n,
                                             uint64_t budget = 50000000);

}  // namespace pantsatlas
