#include "plogic/classical.hpp"

namespace plogic {

namespace {

constexpr bool kNeg[2] = {true, false};
// [antecedent][consequent]
constexpr bool kImp[2][2] = {{true, true}, {false, true}};
constexpr bool kConj[2][2] = {{false, false}, {false, true}};
constexpr bool kDisj[2][2] = {{false, true}, {true, true}};

// Assignments in countdown order: mask (2^n - 1) .. 0, first variable in
// the most significant bit.
std::vector<bool> row_values(unsigned long mask, std::size_t n) {
  std::vector<bool> values(n);
  for (std::size_t j = 0; j < n; ++j) values[j] = (mask >> (n - 1 - j)) & 1u;
  return values;
}

std::optional<Assignment2> first_failure(const std::vector<char>& variables,
                                         const Formula& f, const Formula* g) {
  const std::size_t n = variables.size();
  if (n > kMaxTableVariables2) throw TooManyVariables(n, kMaxTableVariables2);
  for (unsigned long mask = (1ul << n); mask-- > 0;) {
    Assignment2 assignment;
    for (std::size_t j = 0; j < n; ++j)
      assignment[variables[j]] = (mask >> (n - 1 - j)) & 1u;
    const bool lhs = eval2(f, assignment);
    const bool ok = g ? (lhs == eval2(*g, assignment)) : lhs;
    if (!ok) return assignment;
  }
  return std::nullopt;
}

}  // namespace

bool eval2(const Formula& f, const Assignment2& assignment) {
  switch (f.kind()) {
    case NodeKind::Atom: {
      auto it = assignment.find(f.symbol());
      if (it == assignment.end()) throw MissingVariable(f.symbol());
      return it->second;
    }
    case NodeKind::Constant:
      return f.constant_value();
    case NodeKind::Op:
      break;
  }
  const auto& kids = f.children();
  switch (f.symbol()) {
    case 'N':
      return kNeg[eval2(kids[0], assignment)];
    case 'C':
      return kImp[eval2(kids[0], assignment)][eval2(kids[1], assignment)];
    case 'K':
      return kConj[eval2(kids[0], assignment)][eval2(kids[1], assignment)];
    case 'A':
      return kDisj[eval2(kids[0], assignment)][eval2(kids[1], assignment)];
    default:
      throw UnknownConnective(f.symbol());
  }
}

TruthTable truth_table(const Formula& f) {
  TruthTable table;
  table.variables = free_variables(f);
  const std::size_t n = table.variables.size();
  if (n > kMaxTableVariables2) throw TooManyVariables(n, kMaxTableVariables2);

  table.rows.reserve(1ul << n);
  for (unsigned long mask = (1ul << n); mask-- > 0;) {
    Assignment2 assignment;
    for (std::size_t j = 0; j < n; ++j)
      assignment[table.variables[j]] = (mask >> (n - 1 - j)) & 1u;
    table.rows.emplace_back(row_values(mask, n), eval2(f, assignment));
  }
  return table;
}

std::optional<Assignment2> tautology_counterexample(const Formula& f) {
  return first_failure(free_variables(f), f, nullptr);
}

bool is_tautology(const Formula& f) { return !tautology_counterexample(f).has_value(); }

std::optional<Assignment2> equivalence_counterexample(const Formula& f, const Formula& g) {
  std::vector<char> variables = free_variables(f);
  bool seen[26] = {};
  for (char v : variables) seen[v - 'a'] = true;
  for (char v : free_variables(g)) {
    if (!seen[v - 'a']) {
      seen[v - 'a'] = true;
      variables.push_back(v);
    }
  }
  return first_failure(variables, f, &g);
}

bool are_equivalent(const Formula& f, const Formula& g) {
  return !equivalence_counterexample(f, g).has_value();
}

}  // namespace plogic
