#ifndef GINV_TESTS_RANDOM_INSTANCES_HPP
#define GINV_TESTS_RANDOM_INSTANCES_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>

#include "ginv/geninv.hpp"

namespace ginv::testing {

/// Seeded generator of small exact instances: dimensions up to 6, entries
/// in [-5, 5] with denominators 1, 2 or 3.
class InstanceGen {
 public:
  explicit InstanceGen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational entry() {
    static constexpr int dens[] = {1, 1, 1, 2, 3};
    const int d = dens[uniform(0, 4)];
    return Rational(mpz_class(uniform(-5 * d, 5 * d)), mpz_class(d));
  }

  Index dim(int lo = 1, int hi = 6) { return uniform(lo, hi); }

  VectorQ vector(Index n) {
    VectorQ v(n);
    for (Index i = 0; i < n; ++i) v(i) = entry();
    return v;
  }

  /// Random matrix whose rank is usually below min(rows, cols): a few random
  /// rows, the rest copies (possibly negated) of them or zero.
  MatrixQ matrix(Index rows, Index cols) {
    MatrixQ m(rows, cols);
    const Index target = uniform(0, static_cast<int>(std::min(rows, cols)));
    for (Index i = 0; i < rows; ++i) {
      if (i < target) {
        for (Index j = 0; j < cols; ++j) m(i, j) = entry();
      } else if (target > 0 && coin(0.7)) {
        m.row(i) = m.row(uniform(0, static_cast<int>(target) - 1));
        if (coin()) m.row(i) = -m.row(i);
      } else {
        for (Index j = 0; j < cols; ++j) m(i, j) = Rational(0);
      }
    }
    for (Index i = rows - 1; i > 0; --i) m.row(i).swap(m.row(uniform(0, static_cast<int>(i))));
    return m;
  }

  MatrixQ full_matrix(Index rows, Index cols) {
    MatrixQ m(rows, cols);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m(i, j) = entry();
    return m;
  }

  SubspaceQ subspace(Index n, Index max_dim) {
    const Index k = uniform(0, static_cast<int>(max_dim));
    MatrixQ m(n, k);
    for (Index j = 0; j < k; ++j) m.col(j) = vector(n);
    return SubspaceQ::span(m);
  }

  SubspaceQ subspace(Index n) { return subspace(n, n); }

  /// Random W with U (+) W = F^n.
  SubspaceQ complement(const SubspaceQ& u) {
    SubspaceQ acc = u;
    std::vector<VectorQ> chosen;
    for (int attempt = 0; attempt < 64 && !acc.is_full(); ++attempt) {
      VectorQ v = vector(u.ambient());
      auto next = sum(acc, SubspaceQ::span(MatrixQ(v)));
      if (next.dim() > acc.dim()) {
        chosen.push_back(v);
        acc = std::move(next);
      }
    }
    auto w = SubspaceQ::span(u.ambient(), chosen);
    if (!acc.is_full()) w = sum(w, ginv::complement(acc));
    return w;
  }

  /// Random W with inner (+) W = outer.
  SubspaceQ complement_within(const SubspaceQ& inner, const SubspaceQ& outer) {
    SubspaceQ acc = inner;
    std::vector<VectorQ> chosen;
    for (int attempt = 0; attempt < 64 && acc.dim() < outer.dim(); ++attempt) {
      VectorQ coeffs = vector(outer.dim());
      VectorQ v = outer.basis() * coeffs;
      auto next = sum(acc, SubspaceQ::span(MatrixQ(v)));
      if (next.dim() > acc.dim()) {
        chosen.push_back(v);
        acc = std::move(next);
      }
    }
    auto w = SubspaceQ::span(inner.ambient(), chosen);
    if (acc.dim() < outer.dim()) w = sum(w, ginv::complement_within(acc, outer));
    return w;
  }

  /// Defining spaces (B, E) of some outer inverse of t.
  std::pair<SubspaceQ, SubspaceQ> outer_pair(const MatrixQ& t) {
    const auto ker = kernel<Rational>(t);
    const Index r = t.cols() - ker.dim();
    const Index k = uniform(0, static_cast<int>(r));
    SubspaceQ b = SubspaceQ::zero(t.cols());
    for (int attempt = 0; attempt < 64 && b.dim() < k; ++attempt) {
      auto next = sum(b, SubspaceQ::span(MatrixQ(vector(t.cols()))));
      if (next.dim() > b.dim() && is_direct(next, ker)) b = std::move(next);
    }
    return {b, complement(image(t, b))};
  }

  /// Defining spaces (B, E) of inner inverses: V = Ker T (+) B, W = Im T (+) E.
  std::pair<SubspaceQ, SubspaceQ> inner_pair(const MatrixQ& t) {
    return {complement(kernel<Rational>(t)), complement(range<Rational>(t))};
  }

  Projector<Rational> projector(Index n) {
    auto im = subspace(n);
    return ginv::projector(im, complement(im));
  }

  /// Random inner inverse of t with random action on the exceptional space.
  MatrixQ inner_inverse(const MatrixQ& t) {
    auto [b, e] = inner_pair(t);
    MatrixQ action(t.cols(), e.dim());
    for (Index i = 0; i < action.rows(); ++i)
      for (Index j = 0; j < action.cols(); ++j) action(i, j) = coin(0.6) ? entry() : Rational(0);
    return construct_inner<Rational>(t, b, e, action);
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace ginv::testing

#endif  // GINV_TESTS_RANDOM_INSTANCES_HPP
