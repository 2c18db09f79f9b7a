#pragma once
// Typed errors for precondition violations. Every throwing operation documents
// which codes it can raise; tests match on the code, not the message.

#include <stdexcept>
#include <string>

namespace pantsatlas {

enum class Errc {
  empty_enclosed_set,   // curve code with no enclosed punctures
  bad_wiggle_domain,    // f defined off the in-span gap set, or a gap missing
  mismatched_n,         // operands live on different puncture counts
  bad_range,            // invalid size or index range
  not_disjoint,         // family members intersect
  not_laminar,          // enclosed sets neither nested nor disjoint
  not_pants,            // region tree is not trivalent (not a pants decomposition)
  n_too_small,          // below the minimum puncture/vertex count for the op
  n_too_large,          // above the search cutoff for an exact op
  not_trivalent,        // tree has an internal vertex of degree != 3
  not_internal_edge,    // edge touches a leaf where an internal edge is required
  root_not_internal,    // designated recursion root is a leaf
  leaf_count_mismatch,  // tree/family leaf count disagrees with n
  bad_parameters,       // generic invalid parameter combination
  bad_c,                // nonpositive sampling constant
  g_too_large,          // genus beyond the enumeration cutoff
  not_unicyclic,        // genus-1 dual graph must have exactly one cycle
  not_cyclomatic2,      // genus-2 dual graph must have cyclomatic number 2
  disconnected,         // graph input must be connected
  ell_out_of_range,     // cycle length outside [3, 8]
  budget_exceeded,      // search gave up before proving optimality
  parse_error,          // malformed or unknown-field JSON input
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace pantsatlas
