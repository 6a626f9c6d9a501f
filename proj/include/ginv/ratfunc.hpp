#ifndef GINV_RATFUNC_HPP
#define GINV_RATFUNC_HPP

#include <optional>
#include <ostream>
#include <string>

#include "ginv/polynomial.hpp"
#include "ginv/rational.hpp"

namespace ginv {

/// Element of Q(e): a quotient of polynomials in the transcendental symbol e.
/// Canonical form: coprime numerator and monic denominator, so equality is
/// structural.
class RatFuncE {
 public:
  RatFuncE() : den_(Rational(1)) {}
  RatFuncE(int c) : RatFuncE(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  RatFuncE(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT
  RatFuncE(Polynomial num, Polynomial den);

  /// e^k for any integer k.
  static RatFuncE e_power(int k);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  /// The rational value if this element lies in Q.
  std::optional<Rational> as_rational() const;

  /// e.g. "(e^2-1)/e", "e^2+1", "5/12".
  std::string to_string() const;

  RatFuncE operator-() const { return RatFuncE(-num_, den_, Canonical{}); }
  RatFuncE& operator+=(const RatFuncE& o);
  RatFuncE& operator-=(const RatFuncE& o);
  RatFuncE& operator*=(const RatFuncE& o);
  RatFuncE& operator/=(const RatFuncE& o);
  friend RatFuncE operator+(RatFuncE a, const RatFuncE& b) { return a += b; }
  friend RatFuncE operator-(RatFuncE a, const RatFuncE& b) { return a -= b; }
  friend RatFuncE operator*(RatFuncE a, const RatFuncE& b) { return a *= b; }
  friend RatFuncE operator/(RatFuncE a, const RatFuncE& b) { return a /= b; }
  friend bool operator==(const RatFuncE&, const RatFuncE&) = default;

  friend std::ostream& operator<<(std::ostream& os, const RatFuncE& r) { return os << r.to_string(); }

 private:
  struct Canonical {};
  RatFuncE(Polynomial num, Polynomial den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

RatFuncE inverse(const RatFuncE& r);
RatFuncE pow(const RatFuncE& base, int exponent);
bool is_zero(const RatFuncE& r);

}  // namespace ginv

namespace Eigen {

template <>
struct NumTraits<ginv::RatFuncE> : GenericNumTraits<ginv::RatFuncE> {
  using Real = ginv::RatFuncE;
  using NonInteger = ginv::RatFuncE;
  using Literal = ginv::RatFuncE;
  using Nested = ginv::RatFuncE;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 64,
    MulCost = 64
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // GINV_RATFUNC_HPP
