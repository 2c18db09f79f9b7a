#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pantsatlas/curve_model.hpp"
#include "pantsatlas/type_census.hpp"

namespace pantsatlas {

// --- closed surfaces ---------------------------------------------------------------

struct CutSystem {
  MultiGraph g;
  std::vector<int> cotree;                      // indices into g.edges, size = genus
  LabelledTree tree;                            // cut-open tree, 2*genus stub leaves
  std::vector<std::pair<int, int>> matching;    // stub leaf pairs, one per cut edge
};

// BFS spanning tree from vertex 0; the cotree edges are the cuts.
CutSystem cut_system(const MultiGraph& g);

struct ClosedFamily {
  int g = 0;
  std::vector<CurveCode> sphere_codes;          // census on 2g punctures, sizes 2..2g-2
  uint64_t size() const { return uint64_t(g) + sphere_codes.size(); }
  uint64_t bound() const;                       // 3^{2g-1}
};

ClosedFamily closed_universal_family(int g);

// Cut the type open and recognize the resulting tree; returns the pants codes
// on the 2g-punctured sphere. Throws if the tree step fails.
std::vector<CurveCode> realize_closed_type(const MultiGraph& g);

// Minimal N with C(N, 3g-3) >= number of decomposition types. g <= 5.
int counting_lower_bound(int g);

// --- punctured small genus -----------------------------------------------------------

// Pants-decomposition dual of a genus-h surface with m labelled punctures:
// leaves 0..m-1 (labels 1..m) of degree 1, all other vertices of degree 3,
// cyclomatic number h. Loops allowed, stored as (v,v).
struct DualGraph {
  int m = 0;
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int degree(int v) const;
  bool connected() const;
  int cyclomatic() const;                       // E - V + 1
  bool is_leaf(int v) const { return v < m; }
};

enum class Flag : uint8_t { Theta1, Theta2, Theta3, Omega };

// A curve that may wrap handles: planar wiggle part (enclosed set possibly
// empty for bare handle curves) concatenated with the flagged handle classes.
struct ConcatCode {
  CurveCode planar;                             // planar.s may be empty iff flags nonempty
  std::vector<Flag> flags;                      // sorted, no duplicates

  bool separating() const;                      // even number of theta flags
  bool above_all() const;
  bool below_all() const;
  bool operator==(const ConcatCode&) const = default;
  bool operator<(const ConcatCode& o) const;
  std::string str() const;
};

// Gamma (plain, |S| >= 2, all wiggles) plus Theta_S (every S, above-all, theta
// flag); size (3^m - 2m - 1)/4 + 2^m.
std::vector<ConcatCode> genus1_family(int m);

// Family for genus 2: Theta1/Omega above-all and Theta2 below-all over every
// S, plus plain and Theta3 codes over all wiggles with |S| >= 2; size
// 3*2^m + (3^m - 2m - 1)/2. Recognition can additionally emit Theta3 codes
// with |S| <= 1 (e.g. the bare third handle curve on the theta graph), which
// the size formula does not count; membership checks accept them separately.
std::vector<ConcatCode> genus2_family(int m);

struct GenusRecognition {
  std::vector<std::pair<int, int>> edges;       // internal edges of the dual graph
  std::vector<ConcatCode> codes;                // aligned with edges
};

// Removes a canonical cycle edge (-> bare theta), realizes the remaining tree
// with cycle branches forced above, and flags every cycle-edge curve.
GenusRecognition genus1_recognize(const DualGraph& g);

// The three-part structural check from the recognition definition.
bool genus1_verify_structural(const GenusRecognition& rec, const DualGraph& g,
                              std::string* diagnostics = nullptr);

// Case split on shared vs disjoint cycles; cycle edges map to flagged codes as
// the branch dictates, connecting-path edges to omega-flagged codes.
GenusRecognition genus2_recognize(const DualGraph& g);

// --- test generators ------------------------------------------------------------------

// Every labelled unicyclic dual with m leaves (cycle length >= 1, each cycle
// vertex carrying one planted subtree).
void enum_unicyclic_duals(int m, const std::function<void(const DualGraph&)>& visit);

// Labelled cyclomatic-2 duals with m leaves, both skeleton kinds.
void enum_cyclomatic2_duals(int m, const std::function<void(const DualGraph&)>& visit);

}  // namespace pantsatlas
