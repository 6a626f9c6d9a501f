#ifndef GINV_GENINV_HPP
#define GINV_GENINV_HPP

#include <array>
#include <optional>
#include <string>

#include "ginv/projector.hpp"
#include "ginv/subspace.hpp"

namespace ginv {

enum class InverseKind { outer, inner, reflexive };

inline const char* to_string(InverseKind k) {
  switch (k) {
    case InverseKind::outer: return "outer";
    case InverseKind::inner: return "inner";
    case InverseKind::reflexive: return "reflexive";
  }
  return "?";
}

/// A generalized inverse of T : V -> W described by its defining spaces:
/// prescribed image B <= V and kernel E <= W.
template <class Scalar>
struct GenInvSpec {
  Matrix<Scalar> op;
  Subspace<Scalar> image;
  Subspace<Scalar> kernel;
  InverseKind kind = InverseKind::outer;
  /// Inner kind only: images of the basis of `kernel` (dim V x dim E).
  std::optional<Matrix<Scalar>> inner_action;

  /// Image given implicitly by its orthogonal.
  static GenInvSpec with_dual_image(Matrix<Scalar> op, const DualSubspace<Scalar>& image_perp,
                                    Subspace<Scalar> kernel, InverseKind kind) {
    return {std::move(op), orthogonal(image_perp), std::move(kernel), kind, std::nullopt};
  }
};

namespace detail {

template <class Scalar>
void check_outer_data(const Matrix<Scalar>& t, const Subspace<Scalar>& b, const Subspace<Scalar>& e, const char* op) {
  check_ambient(t.cols(), b.ambient(), op);
  check_ambient(t.rows(), e.ambient(), op);
  if (!is_direct(b, kernel<Scalar>(t)))
    throw PreconditionError(std::string(op) + ": B cap Ker T != {0}");
  if (!is_complement(e, image<Scalar>(t, b)))
    throw PreconditionError(std::string(op) + ": W != E (+) T(B)");
}

template <class Scalar>
void check_inner_data(const Matrix<Scalar>& t, const Subspace<Scalar>& b, const Subspace<Scalar>& e, const char* op) {
  check_ambient(t.cols(), b.ambient(), op);
  check_ambient(t.rows(), e.ambient(), op);
  if (!is_complement(kernel<Scalar>(t), b)) throw PreconditionError(std::string(op) + ": V != Ker T (+) B");
  if (!is_complement(range<Scalar>(t), e)) throw PreconditionError(std::string(op) + ": W != Im T (+) E");
}

}  // namespace detail

/// The unique outer inverse G of T with Im G = B and Ker G = E, built as
/// (T|_B)^{-1} Q with Q the projector onto T(B) along E.
template <class Scalar>
Matrix<Scalar> construct_outer(const Matrix<Scalar>& t, const Subspace<Scalar>& b, const Subspace<Scalar>& e) {
  detail::check_outer_data(t, b, e, "construct_outer");
  const Matrix<Scalar> tb = t * b.basis();
  const auto q = projector(Subspace<Scalar>::span(tb), e);
  // T|_B is injective, so tb * coeffs = Q has a unique solution.
  auto coeffs = solve<Scalar>(tb, q.matrix);
  return b.basis() * (*coeffs);
}

/// Inner inverse: (T|_B)^{-1} on Im T and `action` on E (zero when absent).
template <class Scalar>
Matrix<Scalar> construct_inner(const Matrix<Scalar>& t, const Subspace<Scalar>& b, const Subspace<Scalar>& e,
                               const std::optional<Matrix<Scalar>>& action = std::nullopt) {
  detail::check_inner_data(t, b, e, "construct_inner");
  Matrix<Scalar> on_e = Matrix<Scalar>::Zero(t.cols(), e.dim());
  if (action) {
    if (action->rows() != t.cols() || action->cols() != e.dim())
      throw DimensionError("construct_inner: inner action must be " + std::to_string(t.cols()) + "x" +
                           std::to_string(e.dim()));
    on_e = *action;
  }
  const Matrix<Scalar> tb = t * b.basis();
  const Matrix<Scalar> frame = detail::hstack<Scalar>(tb, e.basis());
  const Matrix<Scalar> values = detail::hstack<Scalar>(b.basis(), on_e);
  return values * inverse<Scalar>(frame);
}

/// Algebraic generalized inverse with Im G = B and Ker G = E.
template <class Scalar>
Matrix<Scalar> construct_reflexive(const Matrix<Scalar>& t, const Subspace<Scalar>& b, const Subspace<Scalar>& e) {
  return construct_inner<Scalar>(t, b, e, std::nullopt);
}

template <class Scalar>
Matrix<Scalar> construct(const GenInvSpec<Scalar>& spec) {
  switch (spec.kind) {
    case InverseKind::outer: return construct_outer(spec.op, spec.image, spec.kernel);
    case InverseKind::inner: return construct_inner(spec.op, spec.image, spec.kernel, spec.inner_action);
    case InverseKind::reflexive: return construct_reflexive(spec.op, spec.image, spec.kernel);
  }
  throw std::logic_error("construct: unknown kind");
}

struct VerifyReport {
  bool inner = false;
  bool outer = false;
  bool reflexive = false;
  /// The seven equivalent characterizations of an outer inverse, (i)..(vii).
  std::array<bool, 7> seven_way{};
  /// All seven agree with `outer`.
  bool seven_way_agree = false;
};

template <class Scalar>
VerifyReport verify(const Matrix<Scalar>& t, const Matrix<Scalar>& g) {
  if (g.rows() != t.cols() || g.cols() != t.rows())
    throw DimensionError("verify: G must be " + std::to_string(t.cols()) + "x" + std::to_string(t.rows()));
  VerifyReport r;
  const Matrix<Scalar> gt = g * t, tg = t * g;
  r.inner = same<Scalar>(Matrix<Scalar>(t * g * t), t);
  r.outer = same<Scalar>(Matrix<Scalar>(gt * g), g);
  r.reflexive = r.inner && r.outer;

  const bool gt_proj = is_idempotent<Scalar>(gt), tg_proj = is_idempotent<Scalar>(tg);
  const auto im_g = range<Scalar>(g), ker_g = kernel<Scalar>(g);
  const auto im_t = range<Scalar>(t), ker_t = kernel<Scalar>(t);
  r.seven_way = {
      r.outer,
      gt_proj && range<Scalar>(gt) == im_g,
      gt_proj && is_complement(im_g, kernel<Scalar>(gt)),
      gt_proj && sum(im_t, ker_g).is_full(),
      tg_proj && kernel<Scalar>(tg) == ker_g,
      tg_proj && is_complement(ker_g, range<Scalar>(tg)),
      tg_proj && is_direct(im_g, ker_t),
  };
  r.seven_way_agree = true;
  for (bool s : r.seven_way) r.seven_way_agree = r.seven_way_agree && (s == r.outer);
  return r;
}

/// (T1 T2)^{-1}(W1) = G2(T1^{-1}(W1) cap Im T2) (+) Ker T2 for an inner
/// inverse G2 of T2.
template <class Scalar>
Subspace<Scalar> composition_preimage(const Matrix<Scalar>& t1, const Matrix<Scalar>& g2, const Matrix<Scalar>& t2,
                                      const Subspace<Scalar>& w1) {
  if (t1.cols() != t2.rows()) throw DimensionError("composition_preimage: T1 T2 is not defined");
  if (!verify(t2, g2).inner) throw PreconditionError("composition_preimage: G2 is not an inner inverse of T2");
  const auto mid = intersect(preimage(t1, w1), range<Scalar>(t2));
  const auto first = image(g2, mid);
  const auto ker = kernel<Scalar>(t2);
  if (!is_direct(first, ker)) throw std::logic_error("composition_preimage: sum is not direct");
  return sum(first, ker);
}

}  // namespace ginv

#endif  // GINV_GENINV_HPP
