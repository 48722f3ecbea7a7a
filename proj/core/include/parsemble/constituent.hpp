#pragma once

#include <compare>
#include <set>
#include <string>

#include "parsemble/tree.hpp"

namespace parsemble {

// Labeled span over a sentence's tokens: start inclusive, end exclusive,
// 0-based.  The minimal unit of parsing correctness.
struct Constituent {
  std::string label;
  int start = 0;
  int end = 0;

  auto operator<=>(const Constituent&) const = default;
};

struct ConstituentSet {
  std::set<Constituent> items;  // set semantics: duplicates collapse
  int n_tokens = 0;

  bool operator==(const ConstituentSet&) const = default;
};

// True iff the spans strictly overlap with neither nesting.  Two such spans
// can never coexist in one well-formed tree.
bool spans_cross(const Constituent& a, const Constituent& b);

bool has_crossing(const ConstituentSet& set);

struct NormalizationConfig {
  bool strip_function_tags = true;
  bool remove_none_nodes = true;
  std::set<std::string> drop_root_labels = {"ROOT", "S1", "TOP"};
  bool exclude_preterminals = true;
  // POS labels whose tokens are deleted like traces (evalb-style punctuation
  // skipping); empty by default so every token counts toward spans.
  std::set<std::string> ignore_pos;
};

// Label truncated at the first '-' or '=' unless it starts with '-'
// (keeps -NONE-, -LRB-, -RRB-).
std::string strip_function_tag(const std::string& label);

// Applies normalization as a tree transform: trace/ignored-token removal
// (deleting emptied ancestors), function-tag stripping, and promotion of a
// single-child root whose label is in drop_root_labels.
// Throws Error{EmptySentence} when every token is removed.
Tree normalize_tree(const Tree& tree, const NormalizationConfig& cfg);

// Converts a tree to its constituent set under cfg.  Preterminals contribute
// (POS, i, i+1) only when exclude_preterminals is off; a root whose label is
// in drop_root_labels contributes nothing.
ConstituentSet extract_constituents(const Tree& tree,
                                    const NormalizationConfig& cfg);

// Same, for a tree already passed through normalize_tree with the same cfg.
ConstituentSet extract_from_normalized(const Tree& normalized,
                                       const NormalizationConfig& cfg);

}  // namespace parsemble
