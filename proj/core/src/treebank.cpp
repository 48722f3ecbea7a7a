#include "parsemble/treebank.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

#include "parsemble/errors.hpp"

namespace parsemble {

namespace {

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

[[noreturn]] void rethrow_with_context(const Error& e, const std::string& path,
                                       std::size_t line_no) {
  throw Error(e.code(),
              path + ":" + std::to_string(line_no) + ": " + e.what());
}

// Depth of the shallowest node carrying each label; used to order equal-span
// constituents the way the reference tree stacks its unary chains.
void label_depths(const Tree& t, int depth, std::map<std::string, int>& out) {
  auto [it, inserted] = out.emplace(t.label, depth);
  if (!inserted && depth < it->second) it->second = depth;
  for (const Tree& c : t.children) label_depths(c, depth + 1, out);
}

struct BuildNode {
  const Constituent* cons = nullptr;
  std::vector<BuildNode> children;
  std::vector<int> stray;  // token positions attached directly here
};

Tree realize(const BuildNode& node, const std::vector<const Tree*>& terminals) {
  Tree t;
  t.label = node.cons->label;
  std::size_t ci = 0, si = 0;
  while (ci < node.children.size() || si < node.stray.size()) {
    const bool take_child =
        ci < node.children.size() &&
        (si >= node.stray.size() ||
         node.children[ci].cons->start < node.stray[si]);
    if (take_child)
      t.children.push_back(realize(node.children[ci++], terminals));
    else
      t.children.push_back(*terminals[node.stray[si++]]);
  }
  return t;
}

void attach_strays(BuildNode& node, int lo, int hi) {
  int pos = lo;
  for (BuildNode& c : node.children) {
    for (; pos < c.cons->start; ++pos) node.stray.push_back(pos);
    attach_strays(c, c.cons->start, c.cons->end);
    pos = c.cons->end;
  }
  for (; pos < hi; ++pos) node.stray.push_back(pos);
}

}  // namespace

std::vector<Tree> read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::vector<Tree> trees;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    try {
      trees.push_back(parse_bracketed(line));
    } catch (const Error& e) {
      rethrow_with_context(e, path, line_no);
    }
  }
  return trees;
}

std::vector<SentenceBundle> read_corpus(
    const std::vector<std::string>& parser_files,
    const std::optional<std::string>& gold_file, const NormalizationConfig& cfg,
    const ReadOptions& opts) {
  if (parser_files.empty())
    throw Error(ErrorCode::Usage, "no parser files given");

  std::vector<std::vector<Tree>> corpora;
  for (const std::string& path : parser_files)
    corpora.push_back(read_tree_file(path));
  std::vector<Tree> gold_trees;
  if (gold_file) gold_trees = read_tree_file(*gold_file);

  const std::size_t n = corpora.front().size();
  for (std::size_t f = 1; f < corpora.size(); ++f)
    if (corpora[f].size() != n)
      throw Error(ErrorCode::LineCountMismatch,
                  parser_files[f] + " has " +
                      std::to_string(corpora[f].size()) + " trees, " +
                      parser_files[0] + " has " + std::to_string(n));
  if (gold_file && gold_trees.size() != n)
    throw Error(ErrorCode::LineCountMismatch,
                *gold_file + " has " + std::to_string(gold_trees.size()) +
                    " trees, " + parser_files[0] + " has " + std::to_string(n));

  auto warn = [&](const std::string& msg) {
    if (opts.warnings)
      opts.warnings->push_back(msg);
    else
      std::cerr << "warning: " << msg << "\n";
  };

  std::vector<SentenceBundle> bundles;
  bundles.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    SentenceBundle b;
    std::vector<std::vector<std::string>> all_tokens;
    auto add_parse = [&](const Tree& tree, const std::string& path) {
      Tree norm = [&] {
        try {
          return normalize_tree(tree, cfg);
        } catch (const Error& e) {
          rethrow_with_context(e, path, s + 1);
        }
      }();
      all_tokens.push_back(terminal_tokens(norm));
      return extract_from_normalized(norm, cfg);
    };

    for (std::size_t f = 0; f < corpora.size(); ++f) {
      b.candidates.push_back(add_parse(corpora[f][s], parser_files[f]));
      b.candidate_trees.push_back(corpora[f][s]);
    }
    if (gold_file) {
      b.gold = add_parse(gold_trees[s], *gold_file);
      b.gold_tree = gold_trees[s];
    }

    b.tokens = all_tokens.front();
    for (std::size_t f = 1; f < all_tokens.size(); ++f) {
      const std::string& path =
          f < parser_files.size() ? parser_files[f] : *gold_file;
      if (all_tokens[f].size() != b.tokens.size())
        throw Error(ErrorCode::TokenCountMismatch,
                    "sentence " + std::to_string(s + 1) + ": " + path +
                        " has " + std::to_string(all_tokens[f].size()) +
                        " tokens, " + parser_files[0] + " has " +
                        std::to_string(b.tokens.size()));
      for (std::size_t i = 0; i < b.tokens.size(); ++i) {
        if (all_tokens[f][i] != b.tokens[i]) {
          const std::string msg =
              "sentence " + std::to_string(s + 1) + ", token " +
              std::to_string(i) + ": " + path + " has '" + all_tokens[f][i] +
              "', " + parser_files[0] + " has '" + b.tokens[i] + "'";
          if (opts.allow_token_mismatch)
            warn(msg);
          else
            throw Error(ErrorCode::TokenStringMismatch, msg);
          break;
        }
      }
    }
    bundles.push_back(std::move(b));
  }
  return bundles;
}

Tree build_tree(const ConstituentSet& set, const Tree& reference) {
  const std::vector<const Tree*> terminals = terminal_nodes(reference);
  const int n = static_cast<int>(terminals.size());
  if (n != set.n_tokens)
    throw Error(ErrorCode::TokenCountMismatch,
                "reference has " + std::to_string(n) + " tokens, set expects " +
                    std::to_string(set.n_tokens));

  for (const Constituent& c : set.items)
    if (c.start < 0 || c.start >= c.end || c.end > set.n_tokens)
      throw Error(ErrorCode::InvalidConfig,
                  "constituent (" + c.label + "," + std::to_string(c.start) +
                      "," + std::to_string(c.end) + ") is out of range");

  for (auto i = set.items.begin(); i != set.items.end(); ++i) {
    auto j = i;
    for (++j; j != set.items.end(); ++j)
      if (spans_cross(*i, *j))
        throw Error(ErrorCode::CrossingInput,
                    "(" + i->label + "," + std::to_string(i->start) + "," +
                        std::to_string(i->end) + ") crosses (" + j->label +
                        "," + std::to_string(j->start) + "," +
                        std::to_string(j->end) + ")");
  }

  std::map<std::string, int> depth;
  label_depths(reference, 0, depth);
  auto label_rank = [&](const std::string& label) {
    auto it = depth.find(label);
    return it == depth.end() ? std::numeric_limits<int>::max() : it->second;
  };

  std::vector<const Constituent*> order;
  order.reserve(set.items.size());
  for (const Constituent& c : set.items) order.push_back(&c);
  std::sort(order.begin(), order.end(),
            [&](const Constituent* a, const Constituent* b) {
              if (a->start != b->start) return a->start < b->start;
              if (a->end != b->end) return a->end > b->end;
              // Equal spans: the reference's higher label becomes the parent.
              const int ra = label_rank(a->label), rb = label_rank(b->label);
              if (ra != rb) return ra < rb;
              return a->label < b->label;
            });

  const Constituent root_span{"TOP", 0, n};
  BuildNode root;
  root.cons = &root_span;
  std::vector<BuildNode*> stack{&root};
  auto contains = [](const Constituent& outer, const Constituent& inner) {
    return outer.start <= inner.start && inner.end <= outer.end;
  };
  for (const Constituent* c : order) {
    while (!contains(*stack.back()->cons, *c)) stack.pop_back();
    BuildNode child;
    child.cons = c;
    stack.back()->children.push_back(std::move(child));
    stack.push_back(&stack.back()->children.back());
  }
  attach_strays(root, 0, n);

  // A single top-level constituent spanning everything is the real root;
  // otherwise the synthetic TOP stays.
  if (root.children.size() == 1 && root.stray.empty() &&
      root.children.front().cons->start == 0 &&
      root.children.front().cons->end == n)
    return realize(root.children.front(), terminals);
  return realize(root, terminals);
}

void write_trees(std::ostream& out, const std::vector<Tree>& trees) {
  for (const Tree& t : trees) out << render_bracketed(t) << "\n";
}

void write_trees(const std::string& path, const std::vector<Tree>& trees) {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  write_trees(out, trees);
}

}  // namespace parsemble
