#ifndef GINV_LINALG_HPP
#define GINV_LINALG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ginv/ratfunc.hpp"
#include "ginv/rational.hpp"

namespace ginv {

using Index = Eigen::Index;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using MatrixQ = Matrix<Rational>;
using VectorQ = Vector<Rational>;
using MatrixE = Matrix<RatFuncE>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition failed; what() names the violated condition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <class Scalar>
struct Echelon {
  Matrix<Scalar> reduced;
  std::vector<Index> pivots;
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Reduced row echelon form. Pivot = first nonzero entry scanning down the
/// current column; exact arithmetic needs nothing smarter.
template <class Scalar>
Echelon<Scalar> rref(Matrix<Scalar> m) {
  Echelon<Scalar> out;
  const Index rows = m.rows(), cols = m.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    for (Index j = c; j < cols; ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (Index j = c; j < cols; ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class Scalar>
Index rank(const Matrix<Scalar>& m) {
  return rref(m).rank();
}

template <class Scalar>
bool is_zero(const Matrix<Scalar>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Canonical basis (nonzero RREF rows) of the row space.
template <class Scalar>
Matrix<Scalar> rowspace(const Matrix<Scalar>& m) {
  auto e = rref(m);
  return e.reduced.topRows(e.rank());
}

/// Canonical basis of the span of the given columns, returned as columns.
template <class Scalar>
Matrix<Scalar> canonical_columns(const Matrix<Scalar>& cols) {
  return rowspace<Scalar>(cols.transpose()).transpose();
}

template <class Scalar>
Matrix<Scalar> colspace(const Matrix<Scalar>& m) {
  return canonical_columns<Scalar>(m);
}

/// Canonical basis of {x : m x = 0}, as columns. Empty (cols x 0) iff m is
/// injective.
template <class Scalar>
Matrix<Scalar> nullspace(const Matrix<Scalar>& m) {
  const auto e = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(n, n - e.rank());
  Index k = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, k) = Scalar(1);
    for (Index i = 0; i < e.rank(); ++i) basis(e.pivots[static_cast<std::size_t>(i)], k) = -e.reduced(i, f);
    ++k;
  }
  return canonical_columns<Scalar>(basis);
}

/// Solves m X = rhs column by column. Free coordinates are set to zero, so
/// the answer is deterministic. nullopt when some column is inconsistent.
template <class Scalar>
std::optional<Matrix<Scalar>> solve(const Matrix<Scalar>& m, const Matrix<Scalar>& rhs) {
  if (rhs.rows() != m.rows())
    throw DimensionError("solve: right-hand side has " + std::to_string(rhs.rows()) + " rows, expected " +
                         std::to_string(m.rows()));
  Matrix<Scalar> aug(m.rows(), m.cols() + rhs.cols());
  aug << m, rhs;
  const auto e = rref(aug);
  Index rank_m = 0;
  for (Index p : e.pivots) {
    if (p >= m.cols()) return std::nullopt;
    ++rank_m;
  }
  Matrix<Scalar> x = Matrix<Scalar>::Zero(m.cols(), rhs.cols());
  for (Index i = 0; i < rank_m; ++i)
    for (Index j = 0; j < rhs.cols(); ++j) x(e.pivots[static_cast<std::size_t>(i)], j) = e.reduced(i, m.cols() + j);
  return x;
}

template <class Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar>& m, const Vector<Scalar>& b) {
  auto x = solve<Scalar>(m, Matrix<Scalar>(b));
  if (!x) return std::nullopt;
  return Vector<Scalar>(x->col(0));
}

/// Inverse of a square matrix; throws PreconditionError if singular.
template <class Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix is not square");
  auto x = solve<Scalar>(m, Matrix<Scalar>(Matrix<Scalar>::Identity(m.rows(), m.rows())));
  if (!x || rank(m) != m.rows()) throw PreconditionError("inverse: matrix is singular");
  return *x;
}

template <class Scalar>
Matrix<Scalar> identity(Index n) {
  return Matrix<Scalar>::Identity(n, n);
}

/// Exact equality including shape.
template <class Scalar>
bool same(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || a == b);
}

template <class Scalar>
bool is_idempotent(const Matrix<Scalar>& p) {
  return p.rows() == p.cols() && same<Scalar>(Matrix<Scalar>(p * p), p);
}

}  // namespace ginv

#endif  // GINV_LINALG_HPP
