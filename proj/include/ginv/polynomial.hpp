#ifndef GINV_POLYNOMIAL_HPP
#define GINV_POLYNOMIAL_HPP

#include <string>
#include <utility>
#include <vector>

#include "ginv/rational.hpp"

namespace ginv {

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// lowest degree first with no trailing zeros; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Rational constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coefficients);

  /// c * t^k
  static Polynomial monomial(Rational c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& lead() const { return coeffs_.back(); }
  Rational coefficient(int k) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Number of nonzero coefficients.
  int term_count() const;
  /// Lowest power with nonzero coefficient (0 for the zero polynomial).
  int valuation() const;

  Rational evaluate(const Rational& t) const;
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Euclidean division; throws on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

  /// Highest power first, e.g. "e^2-1" or "1/2*e+3".
  std::string to_string(char variable) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace ginv

#endif  // GINV_POLYNOMIAL_HPP
