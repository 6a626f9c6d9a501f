#ifndef GINV_FUNCTIONAL_HPP
#define GINV_FUNCTIONAL_HPP

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ginv/diffop.hpp"
#include "ginv/linalg.hpp"

namespace ginv {

/// E_point D^order. Ordered by order descending, then point ascending, which
/// is the order used for canonical bases.
struct EvalKey {
  int point = 0;
  int order = 0;
  friend bool operator==(const EvalKey&, const EvalKey&) = default;
  friend bool operator<(const EvalKey& l, const EvalKey& r) {
    return l.order != r.order ? l.order > r.order : l.point < r.point;
  }
};

/// f |-> sum c * (D^order f)(point) + int_0^1 weight(x) f(x) dx, with points
/// in {0, 1}. The integral part always acts on f itself.
class BoundaryFunctional {
 public:
  using EvalTerms = std::map<EvalKey, RatFuncE>;

  BoundaryFunctional() = default;
  static BoundaryFunctional eval(int point, int order = 0, const RatFuncE& coeff = 1);
  static BoundaryFunctional integral(ExpPoly weight);

  const EvalTerms& eval_terms() const { return evals_; }
  const ExpPoly& weight() const { return weight_; }
  bool is_zero() const { return evals_.empty() && weight_.is_zero(); }
  /// Highest derivative order among evaluation terms, -1 if none.
  int max_order() const;

  RatFuncE apply(const ExpPoly& f) const;

  /// e.g. "E[0]D^3 - E[1]D^2", "int(exp(-x) + exp(x))".
  std::string to_string() const;

  BoundaryFunctional operator-() const;
  BoundaryFunctional& operator+=(const BoundaryFunctional& o);
  BoundaryFunctional& operator-=(const BoundaryFunctional& o);
  BoundaryFunctional& operator*=(const RatFuncE& c);
  friend BoundaryFunctional operator+(BoundaryFunctional a, const BoundaryFunctional& b) { return a += b; }
  friend BoundaryFunctional operator-(BoundaryFunctional a, const BoundaryFunctional& b) { return a -= b; }
  friend BoundaryFunctional operator*(BoundaryFunctional a, const RatFuncE& c) { return a *= c; }
  friend BoundaryFunctional operator*(const RatFuncE& c, BoundaryFunctional a) { return a *= c; }
  friend bool operator==(const BoundaryFunctional&, const BoundaryFunctional&) = default;
  friend std::ostream& operator<<(std::ostream& os, const BoundaryFunctional& b) { return os << b.to_string(); }

 private:
  void add_eval(EvalKey key, const RatFuncE& c);
  EvalTerms evals_;
  ExpPoly weight_;
};

inline RatFuncE apply_functional(const BoundaryFunctional& beta, const ExpPoly& f) { return beta.apply(f); }

/// beta o T, normalized: integrals of derivatives are removed by integration
/// by parts.
BoundaryFunctional compose_with_diffop(const BoundaryFunctional& beta, const DiffOp& t);

/// beta o V for the Volterra operator V f = sum p_j int_0^x q_j f.
BoundaryFunctional compose_with_volterra(const BoundaryFunctional& beta, const std::vector<VolterraTerm>& v);

/// Entry (i, j) = beta_i(u_j).
MatrixE eval_matrix_fn(const std::vector<BoundaryFunctional>& beta, const std::vector<ExpPoly>& u);

}  // namespace ginv

#endif  // GINV_FUNCTIONAL_HPP
