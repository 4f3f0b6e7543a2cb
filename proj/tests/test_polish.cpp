#include <functional>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "plogic/polish.hpp"

using namespace plogic;

namespace {

bool parses(std::string_view input, const OperatorTable& table = OperatorTable::standard()) {
  try {
    parse(input, table);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

OperatorTable plus_table() {
  OperatorTable t;
  t.add('+', 2);
  return t;
}

}  // namespace

TEST_SUITE_BEGIN("polish");

TEST_CASE("tokenize splits into single-character tokens") {
  const auto tokens = tokenize("NKpNp");
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0].kind == TokenKind::Operator);
  CHECK(tokens[0].symbol == 'N');
  CHECK(tokens[1].symbol == 'K');
  CHECK(tokens[2].kind == TokenKind::Atom);
  CHECK(tokens[2].symbol == 'p');
  CHECK(tokens[3].symbol == 'N');
  CHECK(tokens[4].symbol == 'p');
  CHECK(tokens[4].position == 4);

  CHECK(tokenize("").empty());
  CHECK(tokenize("  \t\n ").empty());
}

TEST_CASE("tokenize skips whitespace and keeps source positions") {
  const auto tokens = tokenize("+ a + bc", plus_table());
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[0].position == 0);
  CHECK(tokens[1].position == 2);
  CHECK(tokens[4].position == 7);
  CHECK(tokens[2].kind == TokenKind::Operator);
}

TEST_CASE("tokenize rejects unknown characters with their position") {
  try {
    tokenize("Kp$");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::UnknownToken);
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(tokenize("K?q"), ParseError);
  // '1' and '0' are constants, not unknown tokens
  CHECK(tokenize("K10").size() == 3);
}

TEST_CASE("parse builds prefix trees") {
  const Formula f = parse("ANpq");
  const Formula expected =
      Formula::op('A', {Formula::op('N', {Formula::atom('p')}), Formula::atom('q')});
  CHECK(f == expected);
}

TEST_CASE("parse reports missing operands") {
  try {
    parse("CKCpqq");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::UnexpectedEnd);
    CHECK(e.position() == 6);
  }
  try {
    parse("");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::UnexpectedEnd);
    CHECK(e.position() == 0);
  }
}

TEST_CASE("parse reports leftover tokens") {
  try {
    parse("Kpqr");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::TrailingTokens);
    CHECK(e.position() == 3);
  }
}

TEST_CASE("parse depth guard trips only on pathological nesting") {
  std::string deep(9'999, 'N');
  deep += 'p';
  CHECK_NOTHROW(parse(deep));

  std::string too_deep(10'001, 'N');
  too_deep += 'p';
  CHECK_THROWS_AS(parse(too_deep), std::length_error);
}

TEST_CASE("is_well_formed verdicts") {
  CHECK(is_well_formed("CCpKqNqNp").ok);
  CHECK(is_well_formed("CKCpqpq").ok);
  CHECK_FALSE(is_well_formed("N").ok);
  CHECK_FALSE(is_well_formed("CKCpqq").ok);
  CHECK_FALSE(is_well_formed("").ok);
  CHECK(is_well_formed("p").ok);

  const auto trailing = is_well_formed("Kpqr");
  CHECK_FALSE(trailing.ok);
  CHECK(trailing.position == 3);
}

TEST_CASE("to_polish round trips") {
  const Formula excluded_middle =
      Formula::op('A', {Formula::atom('p'), Formula::op('N', {Formula::atom('p')})});
  CHECK(to_polish(excluded_middle) == "ApNp");
  CHECK(to_polish(Formula::atom('p')) == "p");
  CHECK(to_polish(parse("NANpNq")) == "NANpNq");
}

TEST_CASE("round trip holds on random formulas") {
  std::mt19937 rng(20240901);
  for (int i = 0; i < 500; ++i) {
    const Formula f = testing::random_formula(rng, 6, {'p', 'q', 'r', 's'}, true);
    const std::string s = to_polish(f);
    CHECK(parse(s) == f);
    CHECK(is_well_formed(s).ok);
  }
}

TEST_CASE("to_infix renders with the usual glyphs") {
  CHECK(to_infix(parse("Cpq")) == "(p → q)");
  CHECK(to_infix(parse("NKpNp")) == "¬(p ∧ ¬p)");
  CHECK(to_infix(parse("CCpKqNqNp")) ==
        "((p → (q ∧ ¬q)) → ¬p)");

  // cross-check the absurdity rendering against a hand-built tree
  const Formula hand = Formula::op(
      'C', {Formula::op('C', {Formula::atom('p'),
                              Formula::op('K', {Formula::atom('q'),
                                                Formula::op('N', {Formula::atom('q')})})}),
            Formula::op('N', {Formula::atom('p')})});
  CHECK(hand == parse("CCpKqNqNp"));
  CHECK(to_infix(hand) == to_infix(parse("CCpKqNqNp")));

  CHECK(to_infix(parse("K01")) == "(0 ∧ 1)");
  CHECK(to_infix(parse("+a+bc", plus_table())) == "(a + (b + c))");
}

TEST_CASE("free_variables in first-occurrence order") {
  CHECK(free_variables(parse("CKCpqpq")) == std::vector<char>{'p', 'q'});
  CHECK(free_variables(parse("1")).empty());
  CHECK(free_variables(parse("AqKpq")) == std::vector<char>{'q', 'p'});
}

TEST_CASE("generic arity table parses the arithmetic example") {
  const OperatorTable t = plus_table();
  const Formula right = parse("+a+bc", t);
  const Formula left = parse("++abc", t);
  CHECK(right != left);
  CHECK(right == Formula::op('+', {Formula::atom('a'),
                                   Formula::op('+', {Formula::atom('b'), Formula::atom('c')})}));
  CHECK(left == Formula::op('+', {Formula::op('+', {Formula::atom('a'), Formula::atom('b')}),
                                  Formula::atom('c')}));
}

TEST_CASE("operator table rejects symbols that could collide with atoms") {
  OperatorTable t;
  CHECK_THROWS_AS(t.add('p', 1), std::invalid_argument);
  CHECK_THROWS_AS(t.add('0', 1), std::invalid_argument);
  CHECK_THROWS_AS(t.add('N', 0), std::invalid_argument);
  CHECK_NOTHROW(t.add('N', 1));
  CHECK_NOTHROW(t.add('*', 3));
}

// Exhaustive sweep over every string of length <= 9 on a four-character
// alphabet covering all token classes: the counter verdict must coincide
// with the parser, and no proper prefix of a well-formed string may itself
// be well-formed.
TEST_CASE("counter check is equivalent to parsing, and WFFs are prefix-free") {
  const char alphabet[] = {'N', 'C', 'p', '1'};
  const OperatorTable& table = OperatorTable::standard();

  long counter_mismatches = 0;
  long prefix_violations = 0;
  long wff_count = 0;

  std::string s;
  for (int len = 0; len <= 9; ++len) {
    std::vector<int> digit(len, 0);
    for (;;) {
      s.clear();
      for (int j = 0; j < len; ++j) s += alphabet[digit[j]];

      const auto tokens = tokenize(s, table);
      const bool counter_ok = is_well_formed(tokens, table).ok;
      if (counter_ok != parses(s, table)) ++counter_mismatches;

      if (counter_ok) {
        ++wff_count;
        for (int cut = 1; cut < len; ++cut) {
          if (is_well_formed(std::string_view(s).substr(0, cut), table).ok) ++prefix_violations;
        }
      }

      int j = len - 1;
      while (j >= 0 && digit[j] == 3) digit[j--] = 0;
      if (j < 0) break;
      ++digit[j];
    }
  }

  CHECK(counter_mismatches == 0);
  CHECK(prefix_violations == 0);
  CHECK(wff_count > 1000);  // the sweep actually saw plenty of WFFs
}

TEST_SUITE_END();
