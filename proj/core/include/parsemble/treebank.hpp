#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "parsemble/constituent.hpp"
#include "parsemble/tree.hpp"

namespace parsemble {

// One sentence's k candidate parses, aligned by token sequence, plus the
// optional gold parse.  Parser order is fixed corpus-wide.
struct SentenceBundle {
  std::vector<std::string> tokens;           // normalized token sequence
  std::vector<ConstituentSet> candidates;    // one set per parser
  std::vector<Tree> candidate_trees;         // as parsed, unnormalized
  std::optional<ConstituentSet> gold;
  std::optional<Tree> gold_tree;

  int k() const { return static_cast<int>(candidates.size()); }
  int n_tokens() const { return static_cast<int>(tokens.size()); }
};

struct ReadOptions {
  // Downgrade TokenStringMismatch to a warning.  Token-count mismatches stay
  // fatal: spans would not be comparable.
  bool allow_token_mismatch = false;
  // Collects warnings when set; otherwise they go to stderr.
  std::vector<std::string>* warnings = nullptr;
};

// One bracketed tree per line; blank lines skipped.  Parse errors carry
// "file:line:" context.
std::vector<Tree> read_tree_file(const std::string& path);

// Reads and aligns a multi-parser corpus by line number.  All files must
// have equal tree counts, and per sentence equal normalized token counts;
// token strings must match exactly unless opts.allow_token_mismatch.
std::vector<SentenceBundle> read_corpus(
    const std::vector<std::string>& parser_files,
    const std::optional<std::string>& gold_file, const NormalizationConfig& cfg,
    const ReadOptions& opts = {});

// Reconstructs the unique tree in which each constituent dominates exactly
// the constituents nested inside it.  The reference tree (already
// normalized) supplies tokens and POS tags.  Equal-span constituents are
// chained with the label appearing higher in the reference made parent,
// ties broken alphabetically.  A synthetic TOP root is added when no
// constituent spans the whole sentence.  Throws Error{CrossingInput}.
Tree build_tree(const ConstituentSet& set, const Tree& reference);

void write_trees(std::ostream& out, const std::vector<Tree>& trees);
void write_trees(const std::string& path, const std::vector<Tree>& trees);

}  // namespace parsemble
