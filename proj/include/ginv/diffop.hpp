#ifndef GINV_DIFFOP_HPP
#define GINV_DIFFOP_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ginv/exppoly.hpp"

namespace ginv {

/// Monic constant-coefficient differential operator sum c_j D^j whose
/// characteristic polynomial splits over the integers.
class DiffOp {
 public:
  /// Coefficients of D^0 .. D^n. Throws std::invalid_argument unless monic of
  /// order >= 1 with integer characteristic roots.
  explicit DiffOp(std::vector<Rational> coefficients);
  /// prod (D - a) over the given roots.
  static DiffOp from_roots(const std::vector<int>& roots);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Characteristic roots ascending, with multiplicity.
  const std::vector<int>& roots() const { return roots_; }
  /// (root, multiplicity) pairs, ascending.
  std::vector<std::pair<int, int>> root_multiplicities() const;

  /// e.g. "D^4 - D^2", "D^2 - 1".
  std::string to_string() const;

  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.coeffs_ == b.coeffs_; }
  friend std::ostream& operator<<(std::ostream& os, const DiffOp& t) { return os << t.to_string(); }

 private:
  std::vector<Rational> coeffs_;
  std::vector<int> roots_;
};

ExpPoly apply_diffop(const DiffOp& t, const ExpPoly& f);

/// x^j e^{a x}, j < multiplicity, for each root a ascending.
std::vector<ExpPoly> kernel_basis(const DiffOp& t);

/// Particular solution of T u = f by variation of constants: (D - a)^{-1} f
/// = e^{a x} int_0^x e^{-a t} f(t) dt, applied for each root ascending.
ExpPoly right_inverse_apply(const DiffOp& t, const ExpPoly& f);

/// The right inverse above as a Volterra operator f |-> sum p_j(x) int_0^x q_j f.
struct VolterraTerm {
  ExpPoly outer;  // p_j
  ExpPoly inner;  // q_j
};
std::vector<VolterraTerm> right_inverse_kernel(const DiffOp& t);
ExpPoly apply_volterra(const std::vector<VolterraTerm>& v, const ExpPoly& f);

}  // namespace ginv

#endif  // GINV_DIFFOP_HPP
