#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pantsatlas/curve_model.hpp"
#include "pantsatlas/genus.hpp"
#include "pantsatlas/polygon.hpp"
#include "pantsatlas/type_census.hpp"
#include "pantsatlas/unlabelled_sphere.hpp"

namespace pantsatlas {

// JSON wire formats. Parsers reject unknown fields (ParseError) so schema
// drift fails loudly. All serializers emit deterministic key order.

std::string to_json(const CurveCode& c);
CurveCode curve_code_from_json(const std::string& text);

std::string to_json(const CyclicInterval& a);
CyclicInterval cyclic_interval_from_json(const std::string& text);

std::string to_json(const ChordGraph& g);
ChordGraph chord_graph_from_json(const std::string& text);

std::string to_json(const ConcatCode& c);
ConcatCode concat_code_from_json(const std::string& text);

std::string to_json(const IndexFamily& f);
IndexFamily index_family_from_json(const std::string& text);

// Trees as parent arrays: {"n_leaves":N,"parent":[...]} with -1 at the root.
std::string to_json(const LabelledTree& t);
LabelledTree labelled_tree_from_json(const std::string& text);

std::string to_json(const MultiGraph& g);
MultiGraph multigraph_from_json(const std::string& text);

std::string to_json(const DualGraph& g);
DualGraph dual_graph_from_json(const std::string& text);

// Self-describing family files for the CLI round trip.
struct FamilyFile {
  std::string kind;                       // labelled_sphere | unlabelled_sphere |
                                          // polygon | genus1 | genus2 | closed
  int n = 0;                              // puncture / vertex count (m for genus, 2g closed)
  std::vector<CurveCode> codes;
  std::vector<CyclicInterval> intervals;
  std::vector<ConcatCode> concat_codes;
  std::vector<std::pair<int, int>> edges;
  std::optional<IndexFamily> index_meta;
  int genus = 0;                          // closed kind only
};

std::string to_json(const FamilyFile& f);
FamilyFile family_file_from_json(const std::string& text);

// {total, realized, failures:[...]}
std::string report_json(uint64_t total, uint64_t realized, const std::vector<std::string>& failures);

// DOT export.
std::string to_dot(const LabelledTree& t);
std::string to_dot(const MultiGraph& g);
std::string to_dot(const DualGraph& g);

}  // namespace pantsatlas
