#include "parsemble/tree.hpp"

#include <cstddef>

#include "parsemble/errors.hpp"

namespace parsemble {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  }

  [[noreturn]] void fail(ErrorCode code, const std::string& what) const {
    throw Error(code, what + " at byte position " + std::to_string(pos));
  }

  std::string_view atom() {
    const std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos]) && text[pos] != '(' &&
           text[pos] != ')')
      ++pos;
    return text.substr(start, pos - start);
  }

  Tree node() {
    if (pos >= text.size() || text[pos] != '(')
      fail(ErrorCode::UnbalancedBrackets, "expected '('");
    ++pos;
    skip_space();
    if (pos < text.size() && (text[pos] == ')' || text[pos] == '('))
      fail(ErrorCode::EmptyNode, "node without a label");
    if (pos >= text.size())
      fail(ErrorCode::UnbalancedBrackets, "unclosed bracket");

    Tree t;
    t.label = std::string(atom());
    skip_space();

    std::vector<std::string> tokens;
    for (;;) {
      if (pos >= text.size())
        fail(ErrorCode::UnbalancedBrackets, "unclosed bracket");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == '(') {
        t.children.push_back(node());
      } else {
        tokens.push_back(std::string(atom()));
      }
      skip_space();
    }

    if (tokens.empty() && t.children.empty())
      fail(ErrorCode::EmptyNode, "label '" + t.label + "' with no content");
    if (!tokens.empty() && !t.children.empty())
      fail(ErrorCode::MalformedNode,
           "node '" + t.label + "' mixes tokens and subtrees");
    if (tokens.size() > 1)
      fail(ErrorCode::MalformedNode,
           "node '" + t.label + "' has multiple bare tokens");
    if (!tokens.empty()) t.token = std::move(tokens.front());
    return t;
  }
};

void render(const Tree& t, std::string& out) {
  out += '(';
  out += t.label;
  if (t.terminal()) {
    out += ' ';
    out += t.token;
  } else {
    for (const Tree& c : t.children) {
      out += ' ';
      render(c, out);
    }
  }
  out += ')';
}

void collect_terminals(const Tree& t, std::vector<const Tree*>& out) {
  if (t.terminal()) {
    out.push_back(&t);
    return;
  }
  for (const Tree& c : t.children) collect_terminals(c, out);
}

}  // namespace

Tree parse_bracketed(std::string_view text) {
  Parser p{text};
  p.skip_space();
  Tree root = p.node();
  p.skip_space();
  if (p.pos < text.size())
    throw Error(ErrorCode::TrailingInput,
                "content after the root closes at byte " +
                    std::to_string(p.pos));
  return root;
}

std::string render_bracketed(const Tree& tree) {
  std::string out;
  render(tree, out);
  return out;
}

int count_terminals(const Tree& tree) {
  if (tree.terminal()) return 1;
  int n = 0;
  for (const Tree& c : tree.children) n += count_terminals(c);
  return n;
}

std::vector<const Tree*> terminal_nodes(const Tree& tree) {
  std::vector<const Tree*> out;
  collect_terminals(tree, out);
  return out;
}

std::vector<std::string> terminal_tokens(const Tree& tree) {
  std::vector<std::string> out;
  for (const Tree* t : terminal_nodes(tree)) out.push_back(t->token);
  return out;
}

}  // namespace parsemble
