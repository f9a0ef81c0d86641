#include <charconv>
#include <sstream>
#include <stdexcept>

#include "jpm/cli.hpp"

namespace jpm::cli {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

// Whitespace-separated tokens with their 1-based positions.
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (is_space(text[i])) {
      ++column;
      ++i;
      continue;
    }
    const std::size_t start = i;
    const std::size_t start_column = column;
    while (i < text.size() && !is_space(text[i])) {
      ++i;
      ++column;
    }
    tokens.push_back({text.substr(start, i - start), line, start_column});
  }
  return tokens;
}

Cost parse_integer(const Token& token) {
  Cost value = 0;
  const char* first = token.text.data();
  const char* last = first + token.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(token.line, token.column,
                     "expected a decimal integer, got '" + std::string(token.text) + "'");
  }
  return value;
}

BinaryString parse_binary_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  std::size_t line = 1;
  std::size_t column = 0;
  for (char c : text) {
    ++column;
    if (c == '\n') {
      ++line;
      column = 0;
    } else if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else if (!is_space(c)) {
      throw ParseError(line, column, std::string("unexpected character '") + c + "'");
    }
  }
  if (bits.empty()) throw ParseError(1, 0, "empty string input");
  return BinaryString(std::move(bits));
}

Weights parse_weights(std::string_view text) {
  Weights weights;
  for (const Token& token : tokenize(text)) weights.push_back(parse_integer(token));
  if (weights.empty()) throw ParseError(1, 0, "empty weight list");
  return weights;
}

LabeledTree parse_tree(std::string_view text, bool weighted) {
  const std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) throw ParseError(1, 0, "empty tree input");
  const Cost n = parse_integer(tokens[0]);
  if (n < 1) throw ParseError(tokens[0].line, tokens[0].column, "node count must be positive");
  if (tokens.size() != 1 + 2 * static_cast<std::size_t>(n)) {
    const std::size_t line = tokens.back().line;
    throw ParseError(line, 0, "expected " + std::to_string(n) + " lines of 'parent label'");
  }
  std::vector<NodeId> parents(static_cast<std::size_t>(n));
  std::vector<Cost> labels(static_cast<std::size_t>(n));
  std::optional<std::size_t> root_line;
  for (std::size_t v = 0; v < parents.size(); ++v) {
    const Token& parent_token = tokens[1 + 2 * v];
    const Token& label_token = tokens[2 + 2 * v];
    if (parent_token.line != label_token.line) {
      throw ParseError(parent_token.line, 0, "expected 'parent label' on one line");
    }
    const Cost parent = parse_integer(parent_token);
    if (parent < 0 || parent > n || parent == static_cast<Cost>(v + 1)) {
      throw ParseError(parent_token.line, parent_token.column, "invalid parent " + std::to_string(parent));
    }
    if (parent == 0) {
      if (root_line) {
        throw ParseError(parent_token.line, parent_token.column,
                         "second root (first on line " + std::to_string(*root_line) + ")");
      }
      root_line = parent_token.line;
    }
    parents[v] = parent == 0 ? kNoNode : static_cast<NodeId>(parent - 1);
    labels[v] = parse_integer(label_token);
    if (!weighted && labels[v] != 0 && labels[v] != 1) {
      throw ParseError(label_token.line, label_token.column, "label must be 0 or 1");
    }
  }
  if (!root_line) throw ParseError(1, 0, "no root (parent 0) given");
  try {
    return LabeledTree(std::move(parents), std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(1, 0, e.what());
  }
}

// Uniform double in [0, 1) from the top 53 bits.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

std::string_view to_string(InputKind kind) {
  switch (kind) {
    case InputKind::string:
      return "string";
    case InputKind::tree:
      return "tree";
    case InputKind::weighted_string:
      return "weighted-string";
    case InputKind::weighted_tree:
      return "weighted-tree";
  }
  return "?";
}

std::optional<InputKind> parse_kind(std::string_view name) {
  for (InputKind k : {InputKind::string, InputKind::tree, InputKind::weighted_string,
                      InputKind::weighted_tree}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::size_t Input::size() const {
  return std::visit([](const auto& d) -> std::size_t { return d.size(); }, data);
}

Input parse_input(std::string_view text, InputKind kind) {
  switch (kind) {
    case InputKind::string:
      return {kind, parse_binary_string(text)};
    case InputKind::weighted_string:
      return {kind, parse_weights(text)};
    case InputKind::tree:
      return {kind, parse_tree(text, false)};
    case InputKind::weighted_tree:
      return {kind, parse_tree(text, true)};
  }
  throw std::logic_error("parse_input: unknown kind");
}

std::string format_input(const Input& input) {
  std::ostringstream out;
  if (const auto* s = std::get_if<BinaryString>(&input.data)) {
    out << s->to_text() << '\n';
  } else if (const auto* w = std::get_if<Weights>(&input.data)) {
    for (std::size_t i = 0; i < w->size(); ++i) out << (i ? " " : "") << (*w)[i];
    out << '\n';
  } else {
    const auto& t = std::get<LabeledTree>(input.data);
    out << t.size() << '\n';
    for (NodeId v = 0; v < t.size(); ++v) {
      out << (t.parent(v) == kNoNode ? 0 : t.parent(v) + 1) << ' ' << t.label(v) << '\n';
    }
  }
  return out.str();
}

Input generate_input(InputKind kind, std::size_t n, std::uint64_t seed, double density) {
  if (n < 1) throw std::invalid_argument("generate_input: n must be at least 1");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("generate_input: density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  auto label = [&]() -> Cost {
    if (kind == InputKind::weighted_string || kind == InputKind::weighted_tree) {
      return static_cast<Cost>(rng() % 21) - 10;
    }
    return unit(rng) < density ? 1 : 0;
  };
  if (kind == InputKind::string || kind == InputKind::weighted_string) {
    std::vector<Cost> values(n);
    for (Cost& v : values) v = label();
    if (kind == InputKind::weighted_string) return {kind, std::move(values)};
    return {kind, BinaryString(std::vector<std::uint8_t>(values.begin(), values.end()))};
  }
  std::vector<NodeId> parents(n, kNoNode);
  std::vector<Cost> labels(n);
  for (NodeId v = 0; v < n; ++v) {
    if (v > 0) parents[v] = static_cast<NodeId>(rng() % v);
    labels[v] = label();
  }
  return {kind, LabeledTree(std::move(parents), std::move(labels))};
}

}  // namespace jpm::cli
