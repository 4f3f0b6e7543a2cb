#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "plogic/errors.hpp"
#include "plogic/polish.hpp"
#include "plogic/trivalent.hpp"

namespace plogic {

class InvalidDimension : public std::invalid_argument {
 public:
  explicit InvalidDimension(int dim)
      : std::invalid_argument("basis dimension " + std::to_string(dim) +
                              " outside the supported range [2, 64]") {}
};

class WeightOutOfRange : public std::domain_error {
 public:
  explicit WeightOutOfRange(double alpha)
      : std::domain_error("truth weight " + std::to_string(alpha) + " outside [0, 1]") {}
};

class OutOfSpan : public std::domain_error {
 public:
  OutOfSpan() : std::domain_error("vector lies outside span{f, t}") {}
};

class BasisMismatch : public std::logic_error {
 public:
  BasisMismatch() : std::logic_error("operands were built over different bases") {}
};

// An orthonormal pair of truth vectors: f encodes "false", t encodes "true".
// Immutable after construction.
class Basis {
 public:
  // f and t are the first two standard basis vectors.
  static Basis canonical(int dim);

  // Two vectors drawn from a seeded generator and orthonormalized; nearly
  // collinear draws (absolute cosine > 1 - 1e-6) are rejected and redrawn.
  static Basis random(int dim, std::uint64_t seed);

  int dim() const noexcept { return static_cast<int>(f_.size()); }
  const Eigen::VectorXd& f() const noexcept { return f_; }
  const Eigen::VectorXd& t() const noexcept { return t_; }

  // Content identity; mixing distinct bases in one computation is an error.
  bool same_as(const Basis& other) const;

 private:
  Basis(Eigen::VectorXd f, Eigen::VectorXd t);

  Eigen::VectorXd f_, t_;
};

struct TruthVector {
  Eigen::VectorXd components;
  Basis basis;
};

// Standard Kronecker product: block (i, j) of the result is a(i,j) * b.
Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);
Eigen::VectorXd kron(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// A connective as a matrix of summed outer products over the basis:
//   N = f t' + t f'                                              (d x d)
//   C = t(t(x)t)' + f(t(x)f)' + t(f(x)t)' + t(f(x)f)'            (d x d^2)
//   K = t(t(x)t)' + f(t(x)f)' + f(f(x)t)' + f(f(x)f)'            (d x d^2)
//   A = t(t(x)t)' + t(t(x)f)' + t(f(x)t)' + f(f(x)f)'            (d x d^2)
// where (x) is the Kronecker product and ' the transpose.
class LogicMatrix {
 public:
  char symbol() const noexcept { return symbol_; }
  int arity() const noexcept { return symbol_ == 'N' ? 1 : 2; }
  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  const Basis& basis() const noexcept { return basis_; }

  TruthVector apply(const TruthVector& x) const;
  TruthVector apply(const TruthVector& left, const TruthVector& right) const;

 private:
  friend LogicMatrix build_matrix(char symbol, const Basis& basis);
  LogicMatrix(char symbol, Eigen::MatrixXd entries, Basis basis);

  char symbol_;
  Eigen::MatrixXd entries_;
  Basis basis_;
};

LogicMatrix build_matrix(char symbol, const Basis& basis);

// alpha t + (1 - alpha) f. Weight 0 is f, 1 is t, 1/2 the maximally
// uncertain vector.
TruthVector vectorize(double alpha, const Basis& basis);

using AssignmentVec = std::map<char, double>;

// Recursive matrix-Kronecker evaluation: leaves become weighted truth
// vectors (constants 0/1 become f/t), a negation node applies N, a dyadic
// node applies its matrix to the Kronecker product of the child results.
TruthVector eval_matrix(const Formula& f, const AssignmentVec& assignment, const Basis& basis);

// Coefficient of the output on t. Requires the vector to lie in span{f, t}
// (residual norm at most 1e-9); throws OutOfSpan otherwise.
double decode(const TruthVector& v);

// Scalar shadow of eval_matrix: with child weights a and b, the connectives
// project onto t as
//   N: 1 - a     C: 1 - a(1 - b)     K: a b     A: a + b - a b
// Basis-free and exactly what decode(eval_matrix(...)) computes.
double eval_projection(const Formula& f, const AssignmentVec& assignment);

struct ProjectionDiscrepancy {
  std::vector<TruthValue3> args;  // one entry for N, two for C/K/A
  TruthValue3 lukasiewicz;
  double projection;
};

// Evaluates the projection formulas and the three-valued tables over the
// {0, 1/2, 1} argument grid (row order 1, 1/2, 0 as in trivalent tables)
// and reports every cell where they differ.
std::vector<ProjectionDiscrepancy> compare_with_lukasiewicz(char symbol);

constexpr int kMinBasisDimension = 2;
constexpr int kMaxBasisDimension = 64;
constexpr double kSpanTolerance = 1e-9;

}  // namespace plogic
