#ifndef GINV_PROJECTOR_HPP
#define GINV_PROJECTOR_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ginv/subspace.hpp"

namespace ginv {

/// Idempotent map determined by complementary image and kernel.
template <class Scalar>
struct Projector {
  Subspace<Scalar> image;
  Subspace<Scalar> kernel;
  Matrix<Scalar> matrix;

  Index ambient() const { return matrix.rows(); }

  /// Wraps an idempotent matrix; throws PreconditionError otherwise.
  static Projector from_matrix(const Matrix<Scalar>& p) {
    if (!is_idempotent<Scalar>(p)) throw PreconditionError("from_matrix: matrix is not idempotent");
    return {ginv::range<Scalar>(p), ginv::kernel<Scalar>(p), p};
  }
};

/// The unique projector with the given image and kernel.
template <class Scalar>
Projector<Scalar> projector(const Subspace<Scalar>& image, const Subspace<Scalar>& kernel) {
  detail::check_ambient(image.ambient(), kernel.ambient(), "projector");
  if (!is_complement(image, kernel)) throw PreconditionError("projector: image and kernel are not complementary");
  const Index n = image.ambient();
  const Matrix<Scalar> frame = detail::hstack<Scalar>(image.basis(), kernel.basis());
  Matrix<Scalar> target = Matrix<Scalar>::Zero(n, n);
  target.leftCols(image.dim()) = image.basis();
  return {image, kernel, Matrix<Scalar>(target * inverse<Scalar>(frame))};
}

/// Sub/sup pair behind one inclusion condition: holds iff sub <= sup.
template <class Space>
struct Inclusion {
  Space sub;
  Space sup;
  bool holds = false;
};

template <class Space>
Inclusion<Space> inclusion(Space sub, Space sup) {
  const bool h = includes(sup, sub);
  return {std::move(sub), std::move(sup), h};
}

/// Conditions (ii)-(v) for idempotency of PQ, expressed through the images
/// and kernels of P and Q alone.
template <class Space>
struct ProductConditions {
  Inclusion<Space> ii, iii, iv, v;
  std::array<bool, 4> holds() const { return {ii.holds, iii.holds, iv.holds, v.holds}; }
};

template <class Space>
ProductConditions<Space> product_conditions(const Space& im_p, const Space& ker_p, const Space& im_q,
                                            const Space& ker_q) {
  const Space kp_kq = intersect(ker_p, ker_q);
  const Space kp_iq = intersect(ker_p, im_q);
  const Space iq_kp = sum(im_q, ker_p);
  const Space iq_ip = sum(im_q, im_p);
  return {
      inclusion(intersect(im_p, iq_kp), sum(im_q, kp_kq)),
      inclusion(im_q, sum(sum(im_p, kp_iq), kp_kq)),
      inclusion(intersect(ker_p, iq_ip), sum(ker_q, kp_iq)),
      inclusion(intersect(intersect(ker_q, iq_kp), iq_ip), ker_p),
  };
}

template <class Scalar>
struct ProjectorProductReport {
  /// (i) by matrix arithmetic, (ii)-(v) from images and kernels.
  std::array<bool, 5> conditions{};
  ProductConditions<Subspace<Scalar>> witnesses;
  bool is_projector = false;
  /// PQ is a projector with Im PQ = Im P cap Im Q (subspace criterion).
  bool img_cap = false;
  /// PQ is a projector with Ker PQ = Ker P + Ker Q (subspace criterion).
  bool ker_sum = false;
  /// PQ = QP decided from the two decompositions.
  bool commute = false;
  /// PQ = QP by matrix arithmetic.
  bool commute_direct = false;
};

namespace detail {

/// whole = a (+) b
template <class Space>
bool splits_as(const Space& whole, const Space& a, const Space& b) {
  return is_direct(a, b) && sum(a, b) == whole;
}

}  // namespace detail

template <class Scalar>
ProjectorProductReport<Scalar> projector_product_classify(const Projector<Scalar>& p, const Projector<Scalar>& q) {
  detail::check_ambient(p.ambient(), q.ambient(), "projector_product_classify");
  ProjectorProductReport<Scalar> r;
  const Matrix<Scalar> pq = p.matrix * q.matrix;
  r.is_projector = is_idempotent<Scalar>(pq);
  r.witnesses = product_conditions(p.image, p.kernel, q.image, q.kernel);
  const auto h = r.witnesses.holds();
  r.conditions = {r.is_projector, h[0], h[1], h[2], h[3]};

  const auto ip_iq = intersect(p.image, q.image);
  const auto kp_iq = intersect(p.kernel, q.image);
  const auto kp_kq = intersect(p.kernel, q.kernel);
  const auto ip_kq = intersect(p.image, q.kernel);
  r.img_cap = detail::splits_as(q.image, ip_iq, kp_iq);
  r.ker_sum = detail::splits_as(p.kernel, kp_kq, kp_iq);
  r.commute = r.img_cap && detail::splits_as(q.kernel, ip_kq, kp_kq);
  r.commute_direct = same<Scalar>(pq, Matrix<Scalar>(q.matrix * p.matrix));
  return r;
}

}  // namespace ginv

#endif  // GINV_PROJECTOR_HPP
