#ifndef GINV_EXPPOLY_HPP
#define GINV_EXPPOLY_HPP

#include <compare>
#include <map>
#include <ostream>
#include <string>

#include "ginv/ratfunc.hpp"

namespace ginv {

/// Monomial x^k e^{a x}.
struct ExpKey {
  int a = 0;
  int k = 0;
  friend auto operator<=>(const ExpKey&, const ExpKey&) = default;
};

/// Exponential polynomial sum c * x^k * e^{a x} with integer a, k >= 0 and
/// coefficients in Q(e). No zero coefficients are stored.
class ExpPoly {
 public:
  using Terms = std::map<ExpKey, RatFuncE>;

  ExpPoly() = default;
  ExpPoly(RatFuncE constant);  // NOLINT(google-explicit-constructor)
  ExpPoly(int constant) : ExpPoly(RatFuncE(constant)) {}  // NOLINT(google-explicit-constructor)

  static ExpPoly term(RatFuncE c, int a, int k);
  static ExpPoly x() { return term(1, 0, 1); }
  static ExpPoly exp(int a) { return term(1, a, 0); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Only the key (0,0) is present (or none).
  bool is_constant() const;
  RatFuncE constant_value() const { return coefficient({0, 0}); }
  RatFuncE coefficient(ExpKey key) const;
  /// Highest power of x among terms with exponent a; -1 if none.
  int max_power(int a) const;

  /// e.g. "1/6*x^3 - 1/4*x^2 + 1/12", "exp(-x) + exp(x)".
  std::string to_string() const;

  ExpPoly operator-() const;
  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  ExpPoly& operator*=(const ExpPoly& o);
  ExpPoly& operator*=(const RatFuncE& c);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(ExpPoly a, const ExpPoly& b) { return a *= b; }
  friend ExpPoly operator*(ExpPoly a, const RatFuncE& c) { return a *= c; }
  friend ExpPoly operator*(const RatFuncE& c, ExpPoly a) { return a *= c; }
  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ExpPoly& f) { return os << f.to_string(); }

 private:
  void add_term(ExpKey key, const RatFuncE& c);
  Terms terms_;
};

ExpPoly differentiate(const ExpPoly& f, int times = 1);
/// F with F' = f and F(0) = 0.
ExpPoly integrate_0x(const ExpPoly& f);
/// f(c) for c in {0, 1}; any other point throws std::invalid_argument.
RatFuncE evaluate(const ExpPoly& f, int c);

/// Printed form of a coefficient inside a product: rational values as is,
/// anything else parenthesized.
std::string coefficient_string(const RatFuncE& c);

}  // namespace ginv

#endif  // GINV_EXPPOLY_HPP
