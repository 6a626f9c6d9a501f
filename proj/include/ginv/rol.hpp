#ifndef GINV_ROL_HPP
#define GINV_ROL_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ginv/geninv.hpp"

namespace ginv {

inline constexpr std::array<const char*, 5> kConditionNames = {"i", "ii", "iii", "iv", "v"};

/// Outcome of one reverse-order-law decision: the five equivalent
/// conditions, the verdict, and the subspaces behind every inclusion.
template <class Primal, class Dual>
struct RolReport {
  using Space = std::variant<Primal, Dual>;

  /// Index 0..4 = conditions (i)..(v). (i) is the direct operator identity and
  /// is absent when only implicit (finite) data is available.
  std::array<std::optional<bool>, 5> conditions{};
  bool verdict = false;
  /// Every evaluated condition equals the verdict.
  bool consistent = false;
  /// Named "ii.sub", "ii.sup", ... ; sub <= sup is what each condition tests.
  std::vector<std::pair<std::string, Space>> witnesses;

  const Space* witness(const std::string& name) const {
    for (const auto& [n, s] : witnesses)
      if (n == name) return &s;
    return nullptr;
  }

  std::vector<std::string> failed_conditions() const {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < 5; ++k)
      if (conditions[k] && !*conditions[k]) out.emplace_back(kConditionNames[k]);
    return out;
  }

  void finalize() {
    verdict = conditions[1].value_or(false);
    consistent = true;
    for (const auto& c : conditions)
      if (c && *c != verdict) consistent = false;
  }

  template <class Space_>
  void add(const std::string& cond, const Inclusion<Space_>& inc) {
    witnesses.emplace_back(cond + ".sub", inc.sub);
    witnesses.emplace_back(cond + ".sup", inc.sup);
  }
};

template <class Scalar>
using MatrixRolReport = RolReport<Subspace<Scalar>, DualSubspace<Scalar>>;

/// Raised when a composed object is requested but the reverse order law fails.
class RolFailure : public PreconditionError {
 public:
  RolFailure(const std::string& what, std::vector<std::string> failed)
      : PreconditionError(what), failed_(std::move(failed)) {}
  const std::vector<std::string>& failed_conditions() const { return failed_; }

 private:
  std::vector<std::string> failed_;
};

namespace detail {

template <class Scalar>
void fill_from_product(MatrixRolReport<Scalar>& report, const ProductConditions<Subspace<Scalar>>& pc) {
  const auto h = pc.holds();
  for (std::size_t k = 0; k < 4; ++k) report.conditions[k + 1] = h[k];
  report.add("ii", pc.ii);
  report.add("iii", pc.iii);
  report.add("iv", pc.iv);
  report.add("v", pc.v);
}

inline std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

}  // namespace detail

/// Is G2 G1 an outer inverse of T1 T2, for G1 = O(T1, B1, E1) and
/// G2 = O(T2, B2, E2)? T1 : V -> W, T2 : U -> V.
template <class Scalar>
MatrixRolReport<Scalar> rol_outer_check(const Matrix<Scalar>& t1, const Matrix<Scalar>& t2, const Subspace<Scalar>& b1,
                                        const Subspace<Scalar>& e1, const Subspace<Scalar>& b2,
                                        const Subspace<Scalar>& e2) {
  if (t1.cols() != t2.rows()) throw DimensionError("rol_outer_check: T1 T2 is not defined");
  detail::check_outer_data(t1, b1, e1, "rol_outer_check(T1)");
  detail::check_outer_data(t2, b2, e2, "rol_outer_check(T2)");
  MatrixRolReport<Scalar> report;
  // QP with Q = T2 G2 (image T2(B2), kernel E2) and P = G1 T1 (image B1,
  // kernel T1^{-1}(E1)).
  detail::fill_from_product(report, product_conditions(image(t2, b2), e2, b1, preimage(t1, e1)));
  const Matrix<Scalar> g = construct_outer(t2, b2, e2) * construct_outer(t1, b1, e1);
  const Matrix<Scalar> t = t1 * t2;
  report.conditions[0] = same<Scalar>(Matrix<Scalar>(g * t * g), g);
  report.finalize();
  return report;
}

/// Is G2 G1 an inner inverse of T1 T2 for inner inverses with Im G1 T1 = B1
/// and Ker T2 G2 = E2? Only these two spaces matter.
template <class Scalar>
MatrixRolReport<Scalar> rol_inner_check(const Matrix<Scalar>& t1, const Matrix<Scalar>& t2, const Subspace<Scalar>& b1,
                                        const Subspace<Scalar>& e2) {
  if (t1.cols() != t2.rows()) throw DimensionError("rol_inner_check: T1 T2 is not defined");
  detail::check_ambient(t1.cols(), b1.ambient(), "rol_inner_check");
  detail::check_ambient(t2.rows(), e2.ambient(), "rol_inner_check");
  const auto ker_t1 = kernel<Scalar>(t1);
  const auto im_t2 = range<Scalar>(t2);
  if (!is_complement(ker_t1, b1)) throw PreconditionError("rol_inner_check: V != Ker T1 (+) B1");
  if (!is_complement(im_t2, e2)) throw PreconditionError("rol_inner_check: V != Im T2 (+) E2");
  MatrixRolReport<Scalar> report;
  detail::fill_from_product(report, product_conditions(b1, ker_t1, im_t2, e2));
  const Matrix<Scalar> g1 = construct_reflexive(t1, b1, complement(range<Scalar>(t1)));
  const Matrix<Scalar> g2 = construct_reflexive(t2, complement(kernel<Scalar>(t2)), e2);
  const Matrix<Scalar> t = t1 * t2;
  report.conditions[0] = same<Scalar>(Matrix<Scalar>(t * g2 * g1 * t), t);
  report.finalize();
  return report;
}

/// G2 G1 is an inner inverse of T1 T2 for every pair of inner inverses.
template <class Scalar>
bool rol_all_inner(const Matrix<Scalar>& t1, const Matrix<Scalar>& t2) {
  if (t1.cols() != t2.rows()) throw DimensionError("rol_all_inner: T1 T2 is not defined");
  return is_zero<Scalar>(Matrix<Scalar>(t1 * t2)) || includes(range<Scalar>(t2), kernel<Scalar>(t1));
}

template <class Scalar>
struct RolConstruction {
  Subspace<Scalar> b1, e1, b2, e2;
  /// Intermediate decomposition: V1 (+) (Im T2 cap Ker T1) = Ker T1,
  /// V2 (+) (Im T2 cap Ker T1) = Im T2, V3 (+) (Im T2 + Ker T1) = V.
  Subspace<Scalar> v1, v2, v3;
};

/// Defining spaces for algebraic generalized inverses G1, G2 whose product
/// G2 G1 is an algebraic generalized inverse of T1 T2.
template <class Scalar>
RolConstruction<Scalar> rol_construct(const Matrix<Scalar>& t1, const Matrix<Scalar>& t2) {
  if (t1.cols() != t2.rows()) throw DimensionError("rol_construct: T1 T2 is not defined");
  const auto ker_t1 = kernel<Scalar>(t1);
  const auto im_t2 = range<Scalar>(t2);
  const auto meet = intersect(im_t2, ker_t1);
  RolConstruction<Scalar> c;
  c.v1 = complement_within(meet, ker_t1);
  c.v2 = complement_within(meet, im_t2);
  c.v3 = complement(sum(im_t2, ker_t1));
  c.b1 = sum(c.v2, c.v3);
  c.e2 = sum(c.v1, c.v3);
  c.e1 = complement(range<Scalar>(t1));
  c.b2 = complement(kernel<Scalar>(t2));
  return c;
}

template <class Scalar>
struct ImplicitProduct {
  /// Orthogonal of the image of G2 G1.
  DualSubspace<Scalar> image_perp;
  /// Kernel of G2 G1.
  Subspace<Scalar> kernel;
};

/// Defining spaces of G2 G1 for G1 = O(T1, B1perp, E1), G2 = O(T2, B2perp, E2),
/// computed without forming either factor. Throws RolFailure when G2 G1 is
/// not an outer inverse of T1 T2.
template <class Scalar>
ImplicitProduct<Scalar> product_implicit(const Matrix<Scalar>& t1, const Matrix<Scalar>& t2,
                                         const DualSubspace<Scalar>& b1_perp, const Subspace<Scalar>& e1,
                                         const DualSubspace<Scalar>& b2_perp, const Subspace<Scalar>& e2) {
  const auto b1 = orthogonal(b1_perp), b2 = orthogonal(b2_perp);
  const auto check = rol_outer_check(t1, t2, b1, e1, b2, e2);
  if (!check.verdict)
    throw RolFailure("product_implicit: reverse order law fails (conditions " +
                         detail::join(check.failed_conditions()) + ")",
                     check.failed_conditions());
  const auto extra_perp = transpose_image(t2, cap_perp(b1_perp, e2));
  if (!is_direct(b2_perp, extra_perp)) throw std::logic_error("product_implicit: image orthogonal sum is not direct");
  const auto extra_ker = image(t1, cap_perp(e2, b1_perp));
  if (!is_direct(e1, extra_ker)) throw std::logic_error("product_implicit: kernel sum is not direct");
  return {sum(b2_perp, extra_perp), sum(e1, extra_ker)};
}

/// The outer-inverse conditions restated through finite data only:
/// C2 = T2(B2)^perp, K1 = T1^{-1}(E1), B1perp, E2. Works for any pair of
/// space types providing sum, intersect, includes and cap_perp, so the same
/// code serves matrices and boundary problems.
template <class Primal, class Dual>
RolReport<Primal, Dual> fredholm_conditions(const Dual& c2, const Primal& k1, const Dual& b1_perp, const Primal& e2) {
  RolReport<Primal, Dual> report;
  const Primal e2_k1 = intersect(e2, k1);
  const Dual b1_e2 = cap_perp(b1_perp, e2);
  const Primal e2_b1 = cap_perp(e2, b1_perp);
  const Dual b1_c2 = intersect(b1_perp, c2);

  const auto ii = inclusion(cap_perp(b1_perp, e2_k1), sum(c2, b1_e2));
  const auto iii = inclusion(cap_perp(c2, sum(e2_b1, e2_k1)), b1_perp);
  const auto iv = inclusion(cap_perp(e2, b1_c2), sum(k1, e2_b1));
  const auto v = inclusion(cap_perp(k1, sum(b1_e2, b1_c2)), e2);
  report.conditions = {std::nullopt, ii.holds, iii.holds, iv.holds, v.holds};
  report.add("ii", ii);
  report.add("iii", iii);
  report.add("iv", iv);
  report.add("v", v);
  report.finalize();
  return report;
}

/// Matrix instance of the finite-data check. `b1` must equal b1_perp^perp.
template <class Scalar>
MatrixRolReport<Scalar> fredholm_rol_outer_check(const DualSubspace<Scalar>& c2, const Subspace<Scalar>& k1,
                                                 const DualSubspace<Scalar>& b1_perp, const Subspace<Scalar>& e2,
                                                 const Subspace<Scalar>& b1) {
  detail::check_ambient(c2.ambient(), k1.ambient(), "fredholm_rol_outer_check");
  detail::check_ambient(c2.ambient(), b1_perp.ambient(), "fredholm_rol_outer_check");
  detail::check_ambient(c2.ambient(), e2.ambient(), "fredholm_rol_outer_check");
  if (!(orthogonal(b1_perp) == b1)) throw PreconditionError("fredholm_rol_outer_check: B1 != B1perp^perp");
  return fredholm_conditions(c2, k1, b1_perp, e2);
}

}  // namespace ginv

#endif  // GINV_ROL_HPP
