#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pantsatlas/curve_model.hpp"

namespace pantsatlas {

// --- chord graphs -----------------------------------------------------------------

struct ChordGraph {
  int n = 0;                                  // polygon vertices 1..n in cyclic order
  std::vector<std::pair<int, int>> edges;     // u < v, no duplicates

  bool has_edge(int u, int v) const;
};

ChordGraph make_chord_graph(int n, std::vector<std::pair<int, int>> edges);

// Complete graph on the polygon vertices.
ChordGraph all_chords(int n);

// Vertices sampled with p = c * ln(n)^{1/3} / n^{1/3}; edges = all pairs.
ChordGraph random_edge_set(int n, double c, uint64_t seed);

// --- triangle and cycle types -------------------------------------------------------

// Sorted gap triple (vertices strictly between corners), sum = n-3.
struct TriangleType {
  int k1 = 0, k2 = 0, k3 = 0;
  auto operator<=>(const TriangleType&) const = default;
};

std::vector<TriangleType> enum_triangle_types(int n);

// Triangle types with no realizing triangle in g.
std::vector<TriangleType> covers_triangle_types(const ChordGraph& g);

// Exact subgraph counts.
uint64_t count_triangles(const ChordGraph& g);
uint64_t count_cycles(const ChordGraph& g, int ell);  // simple ell-cycles, 3 <= ell <= 8

// Gap tuple of an ell-cycle, canonical under rotation + reflection.
std::vector<int> canonical_cycle_type(const std::vector<int>& gaps);

// Number of distinct ell-cycle types realized by convex (cyclically ordered)
// cycles of g.
uint64_t covered_cycle_types(const ChordGraph& g, int ell);

struct CertificateReport {
  uint64_t realized_types = 0;
  uint64_t cycle_count = 0;
  double edge_bound = 0.0;     // instance-level |E| >= realized^{2/ell} scale
  uint64_t edges = 0;
  bool satisfied = false;      // realized_types <= cycle_count
};

// The counting certificate: every realized type needs its own ell-cycle.
CertificateReport certificate_lower_bound(const ChordGraph& g, uint64_t realized_types, int ell);

// --- triangulations ------------------------------------------------------------------

// A triangulation as the sorted list of its n-3 diagonals.
using Triangulation = std::vector<std::pair<int, int>>;

std::vector<Triangulation> enum_triangulations(int n);  // Catalan(n-2) of them

// Canonical code under the dihedral group (rotations + reflections).
std::string triangulation_class(int n, const Triangulation& t);

std::vector<std::string> enum_triangulation_classes(int n);  // n <= 14

struct TriangulationReport {
  uint64_t total = 0;
  uint64_t realized = 0;
  std::vector<std::string> failures;
};

// For each class: search for a triangulation of that class using only edges
// present in g; a triangulation uses all n polygon sides plus n-3 diagonals.
TriangulationReport verify_universal_triangulations(const ChordGraph& g);

}  // namespace pantsatlas
