#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace parsemble {

// Rooted ordered labeled tree over a token sequence.  Terminal nodes carry
// the surface token and a POS-symbol label; internal nodes carry a
// nonterminal label and at least one child.
struct Tree {
  std::string label;
  std::vector<Tree> children;
  std::string token;  // set only on terminal nodes

  bool terminal() const { return children.empty(); }

  bool operator==(const Tree&) const = default;
};

// Parses a single Penn-Treebank-style bracketing, e.g.
// "(S (NP (DT the) (NN cat)) (VP (VB sat)))".  Whitespace between tokens is
// insignificant; token text keeps all non-whitespace bytes.
// Throws Error{UnbalancedBrackets, EmptyNode, TrailingInput, MalformedNode}.
Tree parse_bracketed(std::string_view text);

// Single-line rendering; parse_bracketed(render_bracketed(t)) == t.
std::string render_bracketed(const Tree& tree);

int count_terminals(const Tree& tree);

// Terminal nodes in left-to-right order.
std::vector<const Tree*> terminal_nodes(const Tree& tree);

std::vector<std::string> terminal_tokens(const Tree& tree);

}  // namespace parsemble
