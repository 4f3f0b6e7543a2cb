#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "plogic/errors.hpp"
#include "plogic/polish.hpp"

namespace plogic {

// The third truth value is stored exactly: the underlying integer counts
// half-units, so False=0, Half=1, True=2. No floating point in this module.
enum class TruthValue3 : unsigned char { False = 0, Half = 1, True = 2 };

constexpr int halves(TruthValue3 v) { return static_cast<int>(v); }

TruthValue3 from_halves(int h);

inline double as_weight(TruthValue3 v) { return halves(v) / 2.0; }

// "0", "1/2", "1"
std::string to_string(TruthValue3 v);

enum class Trivalent { Lukasiewicz, Kleene };

using Assignment3 = std::map<char, TruthValue3>;

// Connective tables. Negation, conjunction and disjunction are shared by
// both systems; implication is where they part ways: with two Half
// arguments Lukasiewicz yields True, Kleene yields Half.
TruthValue3 neg3(TruthValue3 x);
TruthValue3 imp3(TruthValue3 x, TruthValue3 y, Trivalent semantics);
TruthValue3 conj3(TruthValue3 x, TruthValue3 y);
TruthValue3 disj3(TruthValue3 x, TruthValue3 y);

TruthValue3 eval3(const Formula& f, const Assignment3& assignment, Trivalent semantics);
TruthValue3 eval3_lukasiewicz(const Formula& f, const Assignment3& assignment);
TruthValue3 eval3_kleene(const Formula& f, const Assignment3& assignment);

struct TrivalentTable {
  std::vector<char> variables;
  Trivalent semantics;
  std::vector<std::pair<std::vector<TruthValue3>, TruthValue3>> rows;
};

constexpr std::size_t kMaxTableVariables3 = 10;

// All 3^n assignments, each digit running 1, 1/2, 0 with the first variable
// as the most significant digit. Guarded at 10 variables.
TrivalentTable trivalent_table(const Formula& f, Trivalent semantics);

struct SemanticsDisagreement {
  Assignment3 assignment;
  TruthValue3 lukasiewicz;
  TruthValue3 kleene;
};

// Every assignment on which the two systems disagree, in table row order.
std::vector<SemanticsDisagreement> diff_semantics(const Formula& f);

}  // namespace plogic
