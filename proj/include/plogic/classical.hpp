#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "plogic/errors.hpp"
#include "plogic/polish.hpp"

namespace plogic {

using Assignment2 = std::map<char, bool>;

// Recursive two-valued evaluation over the connective tables
// N0=1 N1=0 / C10=0 else 1 / K11=1 else 0 / A00=0 else 1.
// Constants evaluate to themselves. Throws MissingVariable for uncovered
// atoms and UnknownConnective for operators outside N/C/K/A.
bool eval2(const Formula& f, const Assignment2& assignment);

struct TruthTable {
  std::vector<char> variables;  // column order, from free_variables
  std::vector<std::pair<std::vector<bool>, bool>> rows;
};

// All 2^n assignments in binary countdown order (first row all 1s, first
// variable is the most significant digit). Guarded at 16 variables.
TruthTable truth_table(const Formula& f);

constexpr std::size_t kMaxTableVariables2 = 16;

bool is_tautology(const Formula& f);

// First assignment (countdown order) on which the formula is false.
std::optional<Assignment2> tautology_counterexample(const Formula& f);

// Equivalence over the union of the two variable sets; variables absent
// from one formula are vacuous there.
bool are_equivalent(const Formula& f, const Formula& g);
std::optional<Assignment2> equivalence_counterexample(const Formula& f, const Formula& g);

}  // namespace plogic
