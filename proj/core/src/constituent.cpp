#include "parsemble/constituent.hpp"

#include <optional>
#include <utility>

#include "parsemble/errors.hpp"

namespace parsemble {

bool spans_cross(const Constituent& a, const Constituent& b) {
  return (a.start < b.start && b.start < a.end && a.end < b.end) ||
         (b.start < a.start && a.start < b.end && b.end < a.end);
}

bool has_crossing(const ConstituentSet& set) {
  // Quadratic pair scan; per-sentence sets are small.
  for (auto i = set.items.begin(); i != set.items.end(); ++i) {
    auto j = i;
    for (++j; j != set.items.end(); ++j)
      if (spans_cross(*i, *j)) return true;
  }
  return false;
}

std::string strip_function_tag(const std::string& label) {
  if (label.empty() || label.front() == '-') return label;
  const auto cut = label.find_first_of("-=");
  return cut == std::string::npos ? label : label.substr(0, cut);
}

namespace {

// Removes trace and ignored-POS terminals, deleting internal nodes that end
// up childless.  Returns nullopt when the whole subtree vanishes.
std::optional<Tree> prune(const Tree& t, const NormalizationConfig& cfg) {
  if (t.terminal()) {
    if (cfg.remove_none_nodes && t.label == "-NONE-") return std::nullopt;
    if (cfg.ignore_pos.count(t.label)) return std::nullopt;
    return t;
  }
  Tree out;
  out.label = t.label;
  for (const Tree& c : t.children)
    if (auto kept = prune(c, cfg)) out.children.push_back(std::move(*kept));
  if (out.children.empty()) return std::nullopt;
  return out;
}

void strip_labels(Tree& t) {
  t.label = strip_function_tag(t.label);
  for (Tree& c : t.children) strip_labels(c);
}

// Collects spans; pos is the next terminal index.  skip_self drops only the
// root-level constituent (root label in drop_root_labels).
int collect(const Tree& t, const NormalizationConfig& cfg, int pos,
            bool skip_self, std::set<Constituent>& out) {
  if (t.terminal()) {
    if (!cfg.exclude_preterminals && !skip_self)
      out.insert({t.label, pos, pos + 1});
    return pos + 1;
  }
  int end = pos;
  for (const Tree& c : t.children) end = collect(c, cfg, end, false, out);
  if (!skip_self) out.insert({t.label, pos, end});
  return end;
}

}  // namespace

Tree normalize_tree(const Tree& tree, const NormalizationConfig& cfg) {
  auto pruned = prune(tree, cfg);
  if (!pruned)
    throw Error(ErrorCode::EmptySentence, "all tokens were removed");
  if (cfg.strip_function_tags) strip_labels(*pruned);
  // Promote through single-child roots whose label is in the drop set.  A
  // multi-child root is kept; extraction still skips its constituent.
  Tree root = std::move(*pruned);
  while (!root.terminal() && root.children.size() == 1 &&
         cfg.drop_root_labels.count(root.label))
    root = std::move(root.children.front());
  return root;
}

ConstituentSet extract_from_normalized(const Tree& normalized,
                                       const NormalizationConfig& cfg) {
  ConstituentSet set;
  const bool drop_root = cfg.drop_root_labels.count(normalized.label) > 0;
  set.n_tokens = collect(normalized, cfg, 0, drop_root, set.items);
  return set;
}

ConstituentSet extract_constituents(const Tree& tree,
                                    const NormalizationConfig& cfg) {
  return extract_from_normalized(normalize_tree(tree, cfg), cfg);
}

}  // namespace parsemble
