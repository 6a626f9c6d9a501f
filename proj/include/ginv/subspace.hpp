#ifndef GINV_SUBSPACE_HPP
#define GINV_SUBSPACE_HPP

#include <string>
#include <utility>
#include <vector>

#include "ginv/linalg.hpp"

namespace ginv {

/// Subspace of F^n spanned by column vectors. The basis is always the
/// canonical one (transposed RREF), so == is span equality.
template <class Scalar>
class Subspace {
 public:
  Subspace() = default;

  /// Span of the columns of `vectors` (need not be independent).
  static Subspace span(const Matrix<Scalar>& vectors) { return Subspace(vectors.rows(), canonical_columns<Scalar>(vectors)); }
  static Subspace span(Index ambient, const std::vector<Vector<Scalar>>& vectors) {
    Matrix<Scalar> m(ambient, static_cast<Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      if (vectors[j].size() != ambient) throw DimensionError("span: vector length differs from ambient dimension");
      m.col(static_cast<Index>(j)) = vectors[j];
    }
    return span(m);
  }
  static Subspace zero(Index ambient) { return Subspace(ambient, Matrix<Scalar>(ambient, 0)); }
  static Subspace full(Index ambient) { return Subspace(ambient, identity<Scalar>(ambient)); }

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  /// ambient x dim, columns are basis vectors.
  const Matrix<Scalar>& basis() const { return basis_; }
  Vector<Scalar> vector(Index i) const { return basis_.col(i); }

  bool contains(const Vector<Scalar>& v) const {
    if (v.size() != ambient_) throw DimensionError("contains: vector length differs from ambient dimension");
    return solve<Scalar>(basis_, v).has_value();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && same<Scalar>(a.basis_, b.basis_);
  }

 private:
  Subspace(Index ambient, Matrix<Scalar> basis) : ambient_(ambient), basis_(std::move(basis)) {}
  Index ambient_ = 0;
  Matrix<Scalar> basis_;
};

/// Subspace of the dual (F^n)* spanned by row covectors. Finite dimensional,
/// hence orthogonally closed.
template <class Scalar>
class DualSubspace {
 public:
  DualSubspace() = default;

  /// Span of the rows of `covectors`.
  static DualSubspace span(const Matrix<Scalar>& covectors) { return DualSubspace(covectors.cols(), rowspace<Scalar>(covectors)); }
  static DualSubspace zero(Index ambient) { return DualSubspace(ambient, Matrix<Scalar>(0, ambient)); }
  static DualSubspace full(Index ambient) { return DualSubspace(ambient, identity<Scalar>(ambient)); }

  Index ambient() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  /// dim x ambient, rows are basis covectors.
  const Matrix<Scalar>& basis() const { return basis_; }
  RowVector<Scalar> covector(Index i) const { return basis_.row(i); }

  bool contains(const RowVector<Scalar>& c) const {
    if (c.size() != ambient_) throw DimensionError("contains: covector length differs from ambient dimension");
    return solve<Scalar>(Matrix<Scalar>(basis_.transpose()), Matrix<Scalar>(c.transpose())).has_value();
  }

  friend bool operator==(const DualSubspace& a, const DualSubspace& b) {
    return a.ambient_ == b.ambient_ && same<Scalar>(a.basis_, b.basis_);
  }

 private:
  DualSubspace(Index ambient, Matrix<Scalar> basis) : ambient_(ambient), basis_(std::move(basis)) {}
  Index ambient_ = 0;
  Matrix<Scalar> basis_;
};

using SubspaceQ = Subspace<Rational>;
using DualSubspaceQ = DualSubspace<Rational>;

namespace detail {

inline void check_ambient(Index a, Index b, const char* op) {
  if (a != b)
    throw DimensionError(std::string(op) + ": ambient dimensions differ (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
}

template <class Scalar>
Matrix<Scalar> hstack(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> m(a.rows(), a.cols() + b.cols());
  m << a, b;
  return m;
}

template <class Scalar>
Matrix<Scalar> vstack(const Matrix<Scalar>& a, const Matrix<Scalar>& b) {
  Matrix<Scalar> m(a.rows() + b.rows(), a.cols());
  m << a, b;
  return m;
}

}  // namespace detail

// ---- lattice operations -------------------------------------------------

template <class Scalar>
Subspace<Scalar> sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  detail::check_ambient(a.ambient(), b.ambient(), "sum");
  return Subspace<Scalar>::span(detail::hstack<Scalar>(a.basis(), b.basis()));
}

template <class Scalar>
DualSubspace<Scalar> sum(const DualSubspace<Scalar>& a, const DualSubspace<Scalar>& b) {
  detail::check_ambient(a.ambient(), b.ambient(), "sum");
  return DualSubspace<Scalar>::span(detail::vstack<Scalar>(a.basis(), b.basis()));
}

template <class Scalar>
Subspace<Scalar> operator+(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  return sum(a, b);
}
template <class Scalar>
DualSubspace<Scalar> operator+(const DualSubspace<Scalar>& a, const DualSubspace<Scalar>& b) {
  return sum(a, b);
}

/// {beta : beta(u) = 0 for all u in U}
template <class Scalar>
DualSubspace<Scalar> orthogonal(const Subspace<Scalar>& u) {
  Matrix<Scalar> ker = nullspace<Scalar>(Matrix<Scalar>(u.basis().transpose()));
  return DualSubspace<Scalar>::span(Matrix<Scalar>(ker.transpose()));
}

/// {v : beta(v) = 0 for all beta in B}
template <class Scalar>
Subspace<Scalar> orthogonal(const DualSubspace<Scalar>& b) {
  return Subspace<Scalar>::span(nullspace<Scalar>(b.basis()));
}

/// Meet via the orthogonal: (U1^perp + U2^perp)^perp.
template <class Scalar>
Subspace<Scalar> intersect(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  detail::check_ambient(a.ambient(), b.ambient(), "intersect");
  return orthogonal(sum(orthogonal(a), orthogonal(b)));
}

template <class Scalar>
DualSubspace<Scalar> intersect(const DualSubspace<Scalar>& a, const DualSubspace<Scalar>& b) {
  detail::check_ambient(a.ambient(), b.ambient(), "intersect");
  return orthogonal(sum(orthogonal(a), orthogonal(b)));
}

template <class Scalar>
Subspace<Scalar> operator&(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  return intersect(a, b);
}
template <class Scalar>
DualSubspace<Scalar> operator&(const DualSubspace<Scalar>& a, const DualSubspace<Scalar>& b) {
  return intersect(a, b);
}

/// true iff inner <= outer
template <class Space>
bool includes(const Space& outer, const Space& inner) {
  detail::check_ambient(outer.ambient(), inner.ambient(), "includes");
  return sum(outer, inner).dim() == outer.dim();
}

/// true iff a and b intersect trivially
template <class Space>
bool is_direct(const Space& a, const Space& b) {
  detail::check_ambient(a.ambient(), b.ambient(), "is_direct");
  return sum(a, b).dim() == a.dim() + b.dim();
}

/// true iff the ambient space is a (+) b
template <class Space>
bool is_complement(const Space& a, const Space& b) {
  return is_direct(a, b) && a.dim() + b.dim() == a.ambient();
}

namespace detail {

template <class Scalar>
std::vector<Index> non_pivot_coordinates(const Matrix<Scalar>& canonical_rows, Index ambient) {
  std::vector<bool> pivot(static_cast<std::size_t>(ambient), false);
  for (Index i = 0; i < canonical_rows.rows(); ++i)
    for (Index j = 0; j < ambient; ++j)
      if (!is_zero(canonical_rows(i, j))) {
        pivot[static_cast<std::size_t>(j)] = true;
        break;
      }
  std::vector<Index> out;
  for (Index j = 0; j < ambient; ++j)
    if (!pivot[static_cast<std::size_t>(j)]) out.push_back(j);
  return out;
}

}  // namespace detail

/// Standard basis vectors at the non-pivot coordinates of U's canonical basis.
template <class Scalar>
Subspace<Scalar> complement(const Subspace<Scalar>& u) {
  const auto free = detail::non_pivot_coordinates<Scalar>(Matrix<Scalar>(u.basis().transpose()), u.ambient());
  Matrix<Scalar> m = Matrix<Scalar>::Zero(u.ambient(), static_cast<Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) m(free[k], static_cast<Index>(k)) = Scalar(1);
  return Subspace<Scalar>::span(m);
}

template <class Scalar>
DualSubspace<Scalar> complement(const DualSubspace<Scalar>& b) {
  const auto free = detail::non_pivot_coordinates<Scalar>(b.basis(), b.ambient());
  Matrix<Scalar> m = Matrix<Scalar>::Zero(static_cast<Index>(free.size()), b.ambient());
  for (std::size_t k = 0; k < free.size(); ++k) m(static_cast<Index>(k), free[k]) = Scalar(1);
  return DualSubspace<Scalar>::span(m);
}

/// W' with inner (+) W' = outer, built greedily from outer's canonical basis.
template <class Scalar>
Subspace<Scalar> complement_within(const Subspace<Scalar>& inner, const Subspace<Scalar>& outer) {
  if (!includes(outer, inner)) throw PreconditionError("complement_within: inner space is not contained in outer space");
  Subspace<Scalar> acc = inner;
  std::vector<Vector<Scalar>> chosen;
  for (Index j = 0; j < outer.dim() && acc.dim() < outer.dim(); ++j) {
    auto next = sum(acc, Subspace<Scalar>::span(Matrix<Scalar>(outer.basis().col(j))));
    if (next.dim() > acc.dim()) {
      chosen.push_back(outer.basis().col(j));
      acc = std::move(next);
    }
  }
  return Subspace<Scalar>::span(outer.ambient(), chosen);
}

// ---- linear maps acting on subspaces -----------------------------------

template <class Scalar>
Subspace<Scalar> kernel(const Matrix<Scalar>& a) {
  return Subspace<Scalar>::span(nullspace<Scalar>(a));
}

template <class Scalar>
Subspace<Scalar> range(const Matrix<Scalar>& a) {
  return Subspace<Scalar>::span(a);
}

/// A(U)
template <class Scalar>
Subspace<Scalar> image(const Matrix<Scalar>& a, const Subspace<Scalar>& u) {
  detail::check_ambient(a.cols(), u.ambient(), "image");
  return Subspace<Scalar>::span(Matrix<Scalar>(a * u.basis()));
}

/// A^{-1}(W) = {v : A v in W}
template <class Scalar>
Subspace<Scalar> preimage(const Matrix<Scalar>& a, const Subspace<Scalar>& w) {
  detail::check_ambient(a.rows(), w.ambient(), "preimage");
  const auto annihilator = orthogonal(w);
  return Subspace<Scalar>::span(nullspace<Scalar>(Matrix<Scalar>(annihilator.basis() * a)));
}

/// Ker A^* = {gamma : gamma A = 0}
template <class Scalar>
DualSubspace<Scalar> dual_kernel(const Matrix<Scalar>& a) {
  return DualSubspace<Scalar>::span(Matrix<Scalar>(nullspace<Scalar>(Matrix<Scalar>(a.transpose())).transpose()));
}

/// Im A^* = row space of A
template <class Scalar>
DualSubspace<Scalar> dual_range(const Matrix<Scalar>& a) {
  return DualSubspace<Scalar>::span(a);
}

/// A^*(C) = {gamma A : gamma in C}
template <class Scalar>
DualSubspace<Scalar> transpose_image(const Matrix<Scalar>& a, const DualSubspace<Scalar>& c) {
  detail::check_ambient(a.rows(), c.ambient(), "transpose_image");
  return DualSubspace<Scalar>::span(Matrix<Scalar>(c.basis() * a));
}

/// (A^*)^{-1}(B) = {gamma : gamma A in B}
template <class Scalar>
DualSubspace<Scalar> transpose_preimage(const Matrix<Scalar>& a, const DualSubspace<Scalar>& b) {
  detail::check_ambient(a.cols(), b.ambient(), "transpose_preimage");
  return dual_kernel<Scalar>(Matrix<Scalar>(a * orthogonal(b).basis()));
}

// ---- evaluation matrices ------------------------------------------------

/// Entry (i, j) = beta_i(u_j); beta as rows, u as columns.
template <class Scalar>
Matrix<Scalar> eval_matrix(const Matrix<Scalar>& beta, const Matrix<Scalar>& u) {
  if (beta.cols() != u.rows())
    throw DimensionError("eval_matrix: covectors have length " + std::to_string(beta.cols()) +
                         ", vectors have length " + std::to_string(u.rows()));
  return beta * u;
}

template <class Scalar>
struct Intersections {
  Subspace<Scalar> primal;    // U cap B^perp
  DualSubspace<Scalar> dual;  // U^perp cap B
};

/// Given generators u of U and beta of B, computes U cap B^perp and
/// U^perp cap B from the kernels of beta(u) and beta(u)^T.
template <class Scalar>
Intersections<Scalar> evaluation_intersections(const Matrix<Scalar>& beta, const Matrix<Scalar>& u) {
  const Matrix<Scalar> ev = eval_matrix<Scalar>(beta, u);
  const Matrix<Scalar> k = nullspace<Scalar>(ev);
  const Matrix<Scalar> kappa = nullspace<Scalar>(Matrix<Scalar>(ev.transpose()));
  return {Subspace<Scalar>::span(Matrix<Scalar>(u * k)),
          DualSubspace<Scalar>::span(Matrix<Scalar>(kappa.transpose() * beta))};
}

/// U cap B^perp
template <class Scalar>
Subspace<Scalar> cap_perp(const Subspace<Scalar>& u, const DualSubspace<Scalar>& b) {
  detail::check_ambient(u.ambient(), b.ambient(), "cap_perp");
  return evaluation_intersections<Scalar>(b.basis(), u.basis()).primal;
}

/// B cap U^perp
template <class Scalar>
DualSubspace<Scalar> cap_perp(const DualSubspace<Scalar>& b, const Subspace<Scalar>& u) {
  detail::check_ambient(u.ambient(), b.ambient(), "cap_perp");
  return evaluation_intersections<Scalar>(b.basis(), u.basis()).dual;
}

}  // namespace ginv

#endif  // GINV_SUBSPACE_HPP
