#include "plogic/vector_logic.hpp"

#include <cmath>
#include <random>
#include <utility>

namespace plogic {

namespace {

void check_dimension(int dim) {
  if (dim < kMinBasisDimension || dim > kMaxBasisDimension) throw InvalidDimension(dim);
}

void check_weight(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw WeightOutOfRange(alpha);
}

struct ConnectiveMatrices {
  LogicMatrix neg, imp, conj, disj;

  explicit ConnectiveMatrices(const Basis& basis)
      : neg(build_matrix('N', basis)),
        imp(build_matrix('C', basis)),
        conj(build_matrix('K', basis)),
        disj(build_matrix('A', basis)) {}

  const LogicMatrix& of(char symbol) const {
    switch (symbol) {
      case 'N': return neg;
      case 'C': return imp;
      case 'K': return conj;
      case 'A': return disj;
      default: throw UnknownConnective(symbol);
    }
  }
};

TruthVector eval_node(const Formula& f, const AssignmentVec& assignment,
                      const ConnectiveMatrices& matrices, const Basis& basis) {
  switch (f.kind()) {
    case NodeKind::Atom: {
      auto it = assignment.find(f.symbol());
      if (it == assignment.end()) throw MissingVariable(f.symbol());
      return vectorize(it->second, basis);
    }
    case NodeKind::Constant:
      return vectorize(f.constant_value() ? 1.0 : 0.0, basis);
    case NodeKind::Op:
      break;
  }
  const LogicMatrix& m = matrices.of(f.symbol());
  const auto& kids = f.children();
  if (m.arity() == 1) return m.apply(eval_node(kids[0], assignment, matrices, basis));
  return m.apply(eval_node(kids[0], assignment, matrices, basis),
                 eval_node(kids[1], assignment, matrices, basis));
}

}  // namespace

Basis::Basis(Eigen::VectorXd f, Eigen::VectorXd t) : f_(std::move(f)), t_(std::move(t)) {}

Basis Basis::canonical(int dim) {
  check_dimension(dim);
  Eigen::VectorXd f = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd t = Eigen::VectorXd::Zero(dim);
  f(0) = 1.0;
  t(1) = 1.0;
  return Basis(std::move(f), std::move(t));
}

Basis Basis::random(int dim, std::uint64_t seed) {
  check_dimension(dim);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&] {
    Eigen::VectorXd v(dim);
    do {
      for (int i = 0; i < dim; ++i) v(i) = gauss(rng);
    } while (v.norm() < 1e-12);
    return v;
  };

  Eigen::VectorXd f = draw().normalized();
  Eigen::VectorXd t;
  for (;;) {
    t = draw().normalized();
    if (std::abs(f.dot(t)) <= 1.0 - 1e-6) break;  // reject nearly collinear draws
  }
  t = (t - f.dot(t) * f).normalized();
  return Basis(std::move(f), std::move(t));
}

bool Basis::same_as(const Basis& other) const {
  return f_.size() == other.f_.size() && f_ == other.f_ && t_ == other.t_;
}

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Eigen::VectorXd kron(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  Eigen::VectorXd out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

LogicMatrix::LogicMatrix(char symbol, Eigen::MatrixXd entries, Basis basis)
    : symbol_(symbol), entries_(std::move(entries)), basis_(std::move(basis)) {}

TruthVector LogicMatrix::apply(const TruthVector& x) const {
  if (arity() != 1) throw std::logic_error("dyadic matrix applied to one operand");
  if (!basis_.same_as(x.basis)) throw BasisMismatch();
  return {entries_ * x.components, basis_};
}

TruthVector LogicMatrix::apply(const TruthVector& left, const TruthVector& right) const {
  if (arity() != 2) throw std::logic_error("negation matrix applied to two operands");
  if (!basis_.same_as(left.basis) || !basis_.same_as(right.basis)) throw BasisMismatch();
  return {entries_ * kron(left.components, right.components), basis_};
}

LogicMatrix build_matrix(char symbol, const Basis& basis) {
  const Eigen::VectorXd& f = basis.f();
  const Eigen::VectorXd& t = basis.t();
  const Eigen::Index d = f.size();

  if (symbol == 'N') {
    Eigen::MatrixXd n = f * t.transpose() + t * f.transpose();
    return LogicMatrix('N', std::move(n), basis);
  }

  const Eigen::VectorXd tt = kron(t, t);
  const Eigen::VectorXd tf = kron(t, f);
  const Eigen::VectorXd ft = kron(f, t);
  const Eigen::VectorXd ff = kron(f, f);

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d * d);
  switch (symbol) {
    case 'C':
      m = t * tt.transpose() + f * tf.transpose() + t * ft.transpose() + t * ff.transpose();
      break;
    case 'K':
      m = t * tt.transpose() + f * tf.transpose() + f * ft.transpose() + f * ff.transpose();
      break;
    case 'A':
      m = t * tt.transpose() + t * tf.transpose() + t * ft.transpose() + f * ff.transpose();
      break;
    default:
      throw UnknownConnective(symbol);
  }
  return LogicMatrix(symbol, std::move(m), basis);
}

TruthVector vectorize(double alpha, const Basis& basis) {
  check_weight(alpha);
  return {alpha * basis.t() + (1.0 - alpha) * basis.f(), basis};
}

TruthVector eval_matrix(const Formula& f, const AssignmentVec& assignment, const Basis& basis) {
  const ConnectiveMatrices matrices(basis);
  return eval_node(f, assignment, matrices, basis);
}

double decode(const TruthVector& v) {
  const double on_t = v.basis.t().dot(v.components);
  const double on_f = v.basis.f().dot(v.components);
  const Eigen::VectorXd residual = v.components - on_t * v.basis.t() - on_f * v.basis.f();
  if (residual.norm() > kSpanTolerance) throw OutOfSpan();
  return on_t;
}

double eval_projection(const Formula& f, const AssignmentVec& assignment) {
  switch (f.kind()) {
    case NodeKind::Atom: {
      auto it = assignment.find(f.symbol());
      if (it == assignment.end()) throw MissingVariable(f.symbol());
      check_weight(it->second);
      return it->second;
    }
    case NodeKind::Constant:
      return f.constant_value() ? 1.0 : 0.0;
    case NodeKind::Op:
      break;
  }
  const auto& kids = f.children();
  switch (f.symbol()) {
    case 'N':
      return 1.0 - eval_projection(kids[0], assignment);
    case 'C': {
      const double a = eval_projection(kids[0], assignment);
      const double b = eval_projection(kids[1], assignment);
      return 1.0 - a * (1.0 - b);
    }
    case 'K':
      return eval_projection(kids[0], assignment) * eval_projection(kids[1], assignment);
    case 'A': {
      const double a = eval_projection(kids[0], assignment);
      const double b = eval_projection(kids[1], assignment);
      return a + b - a * b;
    }
    default:
      throw UnknownConnective(f.symbol());
  }
}

std::vector<ProjectionDiscrepancy> compare_with_lukasiewicz(char symbol) {
  constexpr TruthValue3 kGrid[3] = {TruthValue3::True, TruthValue3::Half, TruthValue3::False};
  std::vector<ProjectionDiscrepancy> out;

  auto record = [&](std::vector<TruthValue3> args, TruthValue3 luk, double projection) {
    if (std::abs(projection - as_weight(luk)) > 1e-12)
      out.push_back({std::move(args), luk, projection});
  };

  if (symbol == 'N') {
    for (TruthValue3 x : kGrid) record({x}, neg3(x), 1.0 - as_weight(x));
    return out;
  }

  for (TruthValue3 x : kGrid) {
    for (TruthValue3 y : kGrid) {
      const double a = as_weight(x);
      const double b = as_weight(y);
      switch (symbol) {
        case 'C':
          record({x, y}, imp3(x, y, Trivalent::Lukasiewicz), 1.0 - a * (1.0 - b));
          break;
        case 'K':
          record({x, y}, conj3(x, y), a * b);
          break;
        case 'A':
          record({x, y}, disj3(x, y), a + b - a * b);
          break;
        default:
          throw UnknownConnective(symbol);
      }
    }
  }
  return out;
}

}  // namespace plogic
