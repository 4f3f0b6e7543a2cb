#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plogic {

// Maps single-character operator symbols to their arities. Operator symbols
// are uppercase letters or punctuation, so they can never collide with atoms
// (lowercase letters) or the constants '0'/'1'.
class OperatorTable {
 public:
  OperatorTable() = default;

  // The Lukasiewicz connectives: negation N, implication C, conjunction K,
  // disjunction A.
  static const OperatorTable& standard();

  void add(char symbol, int arity);
  bool contains(char symbol) const;
  int arity(char symbol) const;  // throws std::out_of_range for unknown symbols

  const std::map<char, int>& entries() const { return entries_; }

 private:
  std::map<char, int> entries_;
};

enum class TokenKind { Operator, Atom, Constant };

struct Token {
  TokenKind kind;
  char symbol;
  std::size_t position;  // character index in the source string
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { UnknownToken, UnexpectedEnd, TrailingTokens };

  ParseError(Kind kind, std::size_t position);

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

enum class NodeKind { Atom, Constant, Op };

// Immutable formula tree. Atom names are single lowercase letters, constants
// are '0'/'1', operator nodes hold exactly arity(symbol) children for the
// table in effect when they were parsed.
class Formula {
 public:
  static Formula atom(char name);
  static Formula constant(bool value);
  static Formula op(char symbol, std::vector<Formula> children);

  NodeKind kind() const noexcept { return kind_; }
  // Atom name, operator symbol, or '0'/'1' for constants.
  char symbol() const noexcept { return symbol_; }
  bool constant_value() const;
  const std::vector<Formula>& children() const { return children_; }

  bool operator==(const Formula& other) const = default;

 private:
  Formula(NodeKind kind, char symbol, std::vector<Formula> children);

  NodeKind kind_;
  char symbol_;
  std::vector<Formula> children_;
};

// Splits the input into single-character tokens, skipping whitespace.
// Throws ParseError{UnknownToken} for any character that is not whitespace,
// an operator of the table, a lowercase letter, or '0'/'1'.
std::vector<Token> tokenize(std::string_view input,
                            const OperatorTable& table = OperatorTable::standard());

// Standard prefix parse: an atom or constant is a complete formula, an
// operator of arity k is followed by k complete formulas. The whole token
// list must be consumed exactly; throws ParseError otherwise.
Formula parse(const std::vector<Token>& tokens,
              const OperatorTable& table = OperatorTable::standard());
Formula parse(std::string_view input,
              const OperatorTable& table = OperatorTable::standard());

struct WellFormedness {
  bool ok;
  // When !ok: position of the first leftover token, or one past the last
  // token when the input ends mid-formula.
  std::size_t position;

  explicit operator bool() const noexcept { return ok; }
};

// Single-pass arity counter: start with one pending formula; each atom or
// constant closes one, an operator of arity k replaces one pending formula
// by k. Well-formed iff the count reaches zero exactly at the end and never
// before. Equivalent to parse() succeeding.
WellFormedness is_well_formed(const std::vector<Token>& tokens,
                              const OperatorTable& table = OperatorTable::standard());
WellFormedness is_well_formed(std::string_view input,
                              const OperatorTable& table = OperatorTable::standard());

// Preorder traversal, one character per node. parse(to_polish(f)) == f.
std::string to_polish(const Formula& f);

// Fully parenthesized infix rendering with glyphs for the standard
// connectives (N C K A become the usual negation/implication/and/or signs).
// Unary operators bind directly to their operand.
std::string to_infix(const Formula& f);

// Distinct atom names in first-occurrence order.
std::vector<char> free_variables(const Formula& f);

}  // namespace plogic
