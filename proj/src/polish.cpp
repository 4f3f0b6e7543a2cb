#include "plogic/polish.hpp"

#include <cctype>
#include <utility>

namespace plogic {

namespace {

constexpr int kMaxParseDepth = 10'000;

bool is_atom_char(char c) { return c >= 'a' && c <= 'z'; }
bool is_const_char(char c) { return c == '0' || c == '1'; }

std::string describe(ParseError::Kind kind, std::size_t position) {
  switch (kind) {
    case ParseError::Kind::UnknownToken:
      return "unknown token at position " + std::to_string(position);
    case ParseError::Kind::UnexpectedEnd:
      return "unexpected end of input at position " + std::to_string(position);
    case ParseError::Kind::TrailingTokens:
      return "trailing tokens starting at position " + std::to_string(position);
  }
  return "parse error";
}

// One past the last token, i.e. where the missing rest of the formula
// would have started.
std::size_t end_position(const std::vector<Token>& tokens) {
  return tokens.empty() ? 0 : tokens.back().position + 1;
}

Formula parse_one(const std::vector<Token>& tokens, std::size_t& pos,
                  const OperatorTable& table, std::size_t end, int depth) {
  if (depth > kMaxParseDepth)
    throw std::length_error("formula nesting exceeds depth limit of " +
                            std::to_string(kMaxParseDepth));
  if (pos >= tokens.size()) throw ParseError(ParseError::Kind::UnexpectedEnd, end);

  const Token& tok = tokens[pos++];
  switch (tok.kind) {
    case TokenKind::Atom:
      return Formula::atom(tok.symbol);
    case TokenKind::Constant:
      return Formula::constant(tok.symbol == '1');
    case TokenKind::Operator: {
      const int n = table.arity(tok.symbol);
      std::vector<Formula> children;
      children.reserve(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        children.push_back(parse_one(tokens, pos, table, end, depth + 1));
      return Formula::op(tok.symbol, std::move(children));
    }
  }
  throw std::logic_error("unreachable token kind");
}

}  // namespace

const OperatorTable& OperatorTable::standard() {
  static const OperatorTable table = [] {
    OperatorTable t;
    t.add('N', 1);
    t.add('C', 2);
    t.add('K', 2);
    t.add('A', 2);
    return t;
  }();
  return table;
}

void OperatorTable::add(char symbol, int arity) {
  const unsigned char uc = static_cast<unsigned char>(symbol);
  if (!(std::isupper(uc) || std::ispunct(uc)))
    throw std::invalid_argument(std::string("operator symbol '") + symbol +
                                "' must be an uppercase letter or punctuation");
  if (arity < 1) throw std::invalid_argument("operator arity must be positive");
  entries_[symbol] = arity;
}

bool OperatorTable::contains(char symbol) const { return entries_.count(symbol) != 0; }

int OperatorTable::arity(char symbol) const { return entries_.at(symbol); }

ParseError::ParseError(Kind kind, std::size_t position)
    : std::runtime_error(describe(kind, position)), kind_(kind), position_(position) {}

Formula::Formula(NodeKind kind, char symbol, std::vector<Formula> children)
    : kind_(kind), symbol_(symbol), children_(std::move(children)) {}

Formula Formula::atom(char name) {
  if (!is_atom_char(name))
    throw std::invalid_argument(std::string("atom name '") + name +
                                "' must be a lowercase letter");
  return Formula(NodeKind::Atom, name, {});
}

Formula Formula::constant(bool value) {
  return Formula(NodeKind::Constant, value ? '1' : '0', {});
}

Formula Formula::op(char symbol, std::vector<Formula> children) {
  if (children.empty()) throw std::invalid_argument("operator node needs children");
  return Formula(NodeKind::Op, symbol, std::move(children));
}

bool Formula::constant_value() const {
  if (kind_ != NodeKind::Constant) throw std::logic_error("not a constant node");
  return symbol_ == '1';
}

std::vector<Token> tokenize(std::string_view input, const OperatorTable& table) {
  std::vector<Token> tokens;
  tokens.reserve(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    const char c = input[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (table.contains(c))
      tokens.push_back({TokenKind::Operator, c, i});
    else if (is_atom_char(c))
      tokens.push_back({TokenKind::Atom, c, i});
    else if (is_const_char(c))
      tokens.push_back({TokenKind::Constant, c, i});
    else
      throw ParseError(ParseError::Kind::UnknownToken, i);
  }
  return tokens;
}

Formula parse(const std::vector<Token>& tokens, const OperatorTable& table) {
  std::size_t pos = 0;
  Formula f = parse_one(tokens, pos, table, end_position(tokens), 0);
  if (pos < tokens.size())
    throw ParseError(ParseError::Kind::TrailingTokens, tokens[pos].position);
  return f;
}

Formula parse(std::string_view input, const OperatorTable& table) {
  return parse(tokenize(input, table), table);
}

WellFormedness is_well_formed(const std::vector<Token>& tokens, const OperatorTable& table) {
  long need = 1;
  for (const Token& tok : tokens) {
    if (need == 0) return {false, tok.position};  // complete formula before the end
    if (tok.kind == TokenKind::Operator)
      need += table.arity(tok.symbol) - 1;
    else
      --need;
  }
  if (need != 0) return {false, end_position(tokens)};
  return {true, end_position(tokens)};
}

WellFormedness is_well_formed(std::string_view input, const OperatorTable& table) {
  return is_well_formed(tokenize(input, table), table);
}

namespace {

void emit_polish(const Formula& f, std::string& out) {
  out.push_back(f.symbol());
  for (const Formula& child : f.children()) emit_polish(child, out);
}

const char* infix_glyph(char symbol) {
  switch (symbol) {
    case 'N': return "¬";  // negation sign
    case 'C': return "→";  // rightwards arrow
    case 'K': return "∧";  // logical and
    case 'A': return "∨";  // logical or
    default: return nullptr;
  }
}

std::string infix(const Formula& f) {
  switch (f.kind()) {
    case NodeKind::Atom:
    case NodeKind::Constant:
      return std::string(1, f.symbol());
    case NodeKind::Op:
      break;
  }
  const auto& kids = f.children();
  const char* glyph = infix_glyph(f.symbol());
  if (kids.size() == 1)
    return (glyph ? std::string(glyph) : std::string(1, f.symbol())) + infix(kids[0]);
  if (kids.size() == 2)
    return "(" + infix(kids[0]) + " " + (glyph ? std::string(glyph) : std::string(1, f.symbol())) +
           " " + infix(kids[1]) + ")";
  // Higher arities fall back to function notation.
  std::string out(1, f.symbol());
  out += "(";
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i > 0) out += ", ";
    out += infix(kids[i]);
  }
  out += ")";
  return out;
}

void collect_variables(const Formula& f, std::vector<char>& out, bool (&seen)[26]) {
  if (f.kind() == NodeKind::Atom) {
    const int idx = f.symbol() - 'a';
    if (!seen[idx]) {
      seen[idx] = true;
      out.push_back(f.symbol());
    }
    return;
  }
  for (const Formula& child : f.children()) collect_variables(child, out, seen);
}

}  // namespace

std::string to_polish(const Formula& f) {
  std::string out;
  emit_polish(f, out);
  return out;
}

std::string to_infix(const Formula& f) { return infix(f); }

std::vector<char> free_variables(const Formula& f) {
  std::vector<char> out;
  bool seen[26] = {};
  collect_variables(f, out, seen);
  return out;
}

}  // namespace plogic
