#pragma once

#include <random>
#include <string>
#include <vector>

#include "plogic/polish.hpp"

namespace plogic::testing {

// Random formula over the standard connectives, depth at most max_depth.
inline Formula random_formula(std::mt19937& rng, int max_depth,
                              const std::vector<char>& atoms, bool allow_consts = false) {
  std::uniform_int_distribution<int> percent(0, 99);
  const bool leaf = max_depth == 0 || percent(rng) < 25;
  if (leaf) {
    const std::size_t choices = atoms.size() + (allow_consts ? 2 : 0);
    std::uniform_int_distribution<std::size_t> pick(0, choices - 1);
    const std::size_t i = pick(rng);
    if (i < atoms.size()) return Formula::atom(atoms[i]);
    return Formula::constant(i == atoms.size() + 1);
  }
  static const char ops[] = {'N', 'C', 'K', 'A'};
  std::uniform_int_distribution<int> pick_op(0, 3);
  const char op = ops[pick_op(rng)];
  if (op == 'N')
    return Formula::op('N', {random_formula(rng, max_depth - 1, atoms, allow_consts)});
  return Formula::op(op, {random_formula(rng, max_depth - 1, atoms, allow_consts),
                          random_formula(rng, max_depth - 1, atoms, allow_consts)});
}

// Visits every formula of depth <= 3 over the given leaves exactly once,
// represented by a bottom-up summary Value instead of a tree. Materializes
// the depth <= 2 layer (786 entries for two leaves) and streams the rest,
// which keeps exhaustive depth-3 sweeps around a couple of million visits.
//
//   unary(x)          -> Value of applying N
//   binary(op, x, y)  -> Value of applying op in {C, K, A}
//   check(v)          -> called once per formula
template <typename Value, typename Unary, typename Binary, typename Check>
void for_each_formula_depth3(const std::vector<Value>& leaves, Unary unary, Binary binary,
                             Check check) {
  static const char dyadic[] = {'C', 'K', 'A'};

  std::vector<Value> prev = leaves;  // depth <= 0
  for (int depth = 1; depth <= 2; ++depth) {
    std::vector<Value> next = leaves;
    next.reserve(leaves.size() + prev.size() + 3 * prev.size() * prev.size());
    for (const Value& x : prev) next.push_back(unary(x));
    for (char op : dyadic)
      for (const Value& x : prev)
        for (const Value& y : prev) next.push_back(binary(op, x, y));
    prev = std::move(next);
  }

  for (const Value& v : leaves) check(v);
  for (const Value& x : prev) check(unary(x));
  for (char op : dyadic)
    for (const Value& x : prev)
      for (const Value& y : prev) check(binary(op, x, y));
}

}  // namespace plogic::testing
