#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pantsatlas/curve_model.hpp"

namespace pantsatlas {

// --- census ----------------------------------------------------------------------

// All wiggle codes with min_size <= |s| <= max_size.
std::vector<CurveCode> gen_lambda(int n, int min_size, int max_size);

// (3^n - 2n - 1) / 4: the closed form for the census over all |s| >= 2; the
// essential sub-census (2 <= |s| <= n-2) is strictly smaller. We emit both
// rather than reconcile them.
uint64_t lambda_closed_form(int n);

// Number of bipartition classes {S, complement} with both sides >= 2.
uint64_t required_bipartitions(int n);

// --- recognition -------------------------------------------------------------------

enum class Role : uint8_t { Above, Below, Between };

struct EdgeCode {
  int parent = -1;
  int child = -1;      // code encloses the leaf labels under `child`
  CurveCode code;
};

struct RealizeOptions {
  int root = -1;                       // default: lowest-index internal vertex
  std::map<int, Side> context;         // behaviour at punctures outside the tree's leaves
  std::map<int, Role> role_override;   // child vertex -> forced branch role
  int n_punctures = -1;                // ambient puncture count; default n_leaves
};

// Assigns one CurveCode per tree edge whose child side holds >= 2 leaves,
// stacking sibling branches (sorted by minimum leaf) as Above/Below/Between
// and extending inner codes across outside punctures the way the branch curve
// goes. Handles roots of degree 1..3 and degree-2 pass-through vertices
// (child edge copies the parent edge's code).
std::vector<EdgeCode> realize_tree(const LabelledTree& t, const RealizeOptions& opts = {});

struct RecognitionResult {
  int root = -1;
  std::vector<EdgeCode> codes;         // one per internal edge, |codes| = n-3
};

// Edge-to-code recognition: trivalent t, internal root (default lowest-index).
RecognitionResult recognize(const LabelledTree& t, int root = -1);

// --- universality -------------------------------------------------------------------

struct VerifyReport {
  uint64_t total = 0;
  uint64_t realized = 0;
  std::vector<std::string> failures;   // canonical descriptions of missed types
  bool universal() const { return realized == total; }
};

VerifyReport verify_universal_labelled(const std::vector<CurveCode>& family, int n);

struct SearchResult {
  std::vector<CurveCode> family;
  bool optimal = false;                // exact mode proved minimality
};

// Smallest found universal subfamily of the essential census. Exact mode
// (branch and bound over one-code-per-bipartition transversals, then larger
// multisets) only for n <= 5; greedy removal otherwise.
SearchResult min_family_search(int n, bool exact, uint64_t budget = 200000000);

}  // namespace pantsatlas
