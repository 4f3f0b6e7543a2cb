#include "plogic/trivalent.hpp"

#include <stdexcept>

namespace plogic {

namespace {

constexpr TruthValue3 F = TruthValue3::False;
constexpr TruthValue3 H = TruthValue3::Half;
constexpr TruthValue3 T = TruthValue3::True;

constexpr TruthValue3 kNeg[3] = {T, H, F};

// Row: first argument (0, 1/2, 1); column: second argument.
constexpr TruthValue3 kImpLukasiewicz[3][3] = {
    {T, T, T},
    {H, T, T},
    {F, H, T},
};

constexpr TruthValue3 kImpKleene[3][3] = {
    {T, T, T},
    {H, H, T},
    {F, H, T},
};

constexpr TruthValue3 kConj[3][3] = {
    {F, F, F},
    {F, H, H},
    {F, H, T},
};

constexpr TruthValue3 kDisj[3][3] = {
    {F, H, T},
    {H, H, T},
    {T, T, T},
};

// Digit order for table rows: 1, 1/2, 0.
constexpr TruthValue3 kDigitOrder[3] = {T, H, F};

template <typename Visit>
void for_each_assignment(const std::vector<char>& variables, Visit&& visit) {
  const std::size_t n = variables.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;

  std::vector<std::size_t> digits(n, 0);
  for (std::size_t row = 0; row < total; ++row) {
    std::vector<TruthValue3> values(n);
    Assignment3 assignment;
    for (std::size_t j = 0; j < n; ++j) {
      values[j] = kDigitOrder[digits[j]];
      assignment[variables[j]] = values[j];
    }
    visit(values, assignment);
    for (std::size_t j = n; j-- > 0;) {
      if (++digits[j] < 3) break;
      digits[j] = 0;
    }
  }
}

}  // namespace

TruthValue3 from_halves(int h) {
  if (h < 0 || h > 2) throw std::out_of_range("truth value must be 0, 1, or 2 half-units");
  return static_cast<TruthValue3>(h);
}

std::string to_string(TruthValue3 v) {
  switch (v) {
    case F: return "0";
    case H: return "1/2";
    case T: return "1";
  }
  return "?";
}

TruthValue3 neg3(TruthValue3 x) { return kNeg[halves(x)]; }

TruthValue3 imp3(TruthValue3 x, TruthValue3 y, Trivalent semantics) {
  return semantics == Trivalent::Lukasiewicz ? kImpLukasiewicz[halves(x)][halves(y)]
                                             : kImpKleene[halves(x)][halves(y)];
}

TruthValue3 conj3(TruthValue3 x, TruthValue3 y) { return kConj[halves(x)][halves(y)]; }

TruthValue3 disj3(TruthValue3 x, TruthValue3 y) { return kDisj[halves(x)][halves(y)]; }

TruthValue3 eval3(const Formula& f, const Assignment3& assignment, Trivalent semantics) {
  switch (f.kind()) {
    case NodeKind::Atom: {
      auto it = assignment.find(f.symbol());
      if (it == assignment.end()) throw MissingVariable(f.symbol());
      return it->second;
    }
    case NodeKind::Constant:
      return f.constant_value() ? T : F;
    case NodeKind::Op:
      break;
  }
  const auto& kids = f.children();
  switch (f.symbol()) {
    case 'N':
      return neg3(eval3(kids[0], assignment, semantics));
    case 'C':
      return imp3(eval3(kids[0], assignment, semantics),
                  eval3(kids[1], assignment, semantics), semantics);
    case 'K':
      return conj3(eval3(kids[0], assignment, semantics),
                   eval3(kids[1], assignment, semantics));
    case 'A':
      return disj3(eval3(kids[0], assignment, semantics),
                   eval3(kids[1], assignment, semantics));
    default:
      throw UnknownConnective(f.symbol());
  }
}

TruthValue3 eval3_lukasiewicz(const Formula& f, const Assignment3& assignment) {
  return eval3(f, assignment, Trivalent::Lukasiewicz);
}

TruthValue3 eval3_kleene(const Formula& f, const Assignment3& assignment) {
  return eval3(f, assignment, Trivalent::Kleene);
}

TrivalentTable trivalent_table(const Formula& f, Trivalent semantics) {
  TrivalentTable table;
  table.variables = free_variables(f);
  table.semantics = semantics;
  const std::size_t n = table.variables.size();
  if (n > kMaxTableVariables3) throw TooManyVariables(n, kMaxTableVariables3);

  for_each_assignment(table.variables,
                      [&](const std::vector<TruthValue3>& values, const Assignment3& assignment) {
                        table.rows.emplace_back(values, eval3(f, assignment, semantics));
                      });
  return table;
}

std::vector<SemanticsDisagreement> diff_semantics(const Formula& f) {
  const std::vector<char> variables = free_variables(f);
  if (variables.size() > kMaxTableVariables3)
    throw TooManyVariables(variables.size(), kMaxTableVariables3);

  std::vector<SemanticsDisagreement> out;
  for_each_assignment(variables,
                      [&](const std::vector<TruthValue3>&, const Assignment3& assignment) {
                        const TruthValue3 luk = eval3(f, assignment, Trivalent::Lukasiewicz);
                        const TruthValue3 kle = eval3(f, assignment, Trivalent::Kleene);
                        if (luk != kle) out.push_back({assignment, luk, kle});
                      });
  return out;
}

}  // namespace plogic
