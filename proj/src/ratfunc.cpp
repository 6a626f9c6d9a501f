#include "ginv/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace ginv {

namespace {

/// gcd with shortcuts for constants and pure powers of e, which dominate in
/// practice.
Polynomial common_factor(const Polynomial& a, const Polynomial& b) {
  if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));
  if (a.term_count() == 1 || b.term_count() == 1)
    return Polynomial::monomial(Rational(1), std::min(a.valuation(), b.valuation()));
  return gcd(a, b);
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  return b.is_constant() ? a * Polynomial(inverse(b.lead())) : Polynomial::divmod(a, b).first;
}

}  // namespace

RatFuncE::RatFuncE(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFuncE::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    // Cheap path for pure powers of e in the denominator.
    const bool den_monomial = den_.term_count() == 1;
    if (den_monomial) {
      const int shift = std::min(num_.valuation(), den_.degree());
      if (shift > 0) {
        std::vector<Rational> n(num_.coefficients().begin() + shift, num_.coefficients().end());
        std::vector<Rational> d(den_.coefficients().begin() + shift, den_.coefficients().end());
        num_ = Polynomial(std::move(n));
        den_ = Polynomial(std::move(d));
      }
    } else {
      const Polynomial g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = Polynomial::divmod(num_, g).first;
        den_ = Polynomial::divmod(den_, g).first;
      }
    }
  }
  const Rational l = den_.lead();
  if (!l.is_one()) {
    num_ *= Polynomial(inverse(l));
    den_ *= Polynomial(inverse(l));
  }
}

RatFuncE RatFuncE::e_power(int k) {
  if (k >= 0) return RatFuncE(Polynomial::monomial(Rational(1), k), Polynomial(Rational(1)), Canonical{});
  return RatFuncE(Polynomial(Rational(1)), Polynomial::monomial(Rational(1), -k), Canonical{});
}

std::optional<Rational> RatFuncE::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return num_.coefficient(0) / den_.coefficient(0);
}

std::string RatFuncE::to_string() const {
  if (den_.is_constant()) return num_.to_string('e');
  std::string n = num_.to_string('e');
  if (num_.term_count() > 1 || n.find_first_of("*/") != std::string::npos)
    n = "(" + n + ")";
  std::string d = den_.to_string('e');
  if (den_.term_count() > 1) d = "(" + d + ")";
  return n + "/" + d;
}

RatFuncE& RatFuncE::operator+=(const RatFuncE& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    normalize();
    return *this;
  }
  // Over lcm(d1, d2); with coprime denominators the sum is already reduced.
  const Polynomial g = common_factor(den_, o.den_);
  const Polynomial a = exact_quotient(o.den_, g);
  num_ = num_ * a + o.num_ * exact_quotient(den_, g);
  den_ *= a;
  if (g.is_constant()) {
    if (num_.is_zero()) den_ = Polynomial(Rational(1));
  } else {
    normalize();
  }
  return *this;
}

RatFuncE& RatFuncE::operator-=(const RatFuncE& o) { return *this += -o; }

RatFuncE& RatFuncE::operator*=(const RatFuncE& o) {
  if (is_zero() || o.is_zero()) return *this = RatFuncE();
  // Both factors are reduced, so only cross cancellations remain.
  const Polynomial g1 = common_factor(num_, o.den_);
  const Polynomial g2 = common_factor(o.num_, den_);
  num_ = exact_quotient(num_, g1) * exact_quotient(o.num_, g2);
  den_ = exact_quotient(den_, g2) * exact_quotient(o.den_, g1);
  const Rational l = den_.lead();
  if (!l.is_one()) {
    num_ *= Polynomial(inverse(l));
    den_ *= Polynomial(inverse(l));
  }
  return *this;
}

RatFuncE& RatFuncE::operator/=(const RatFuncE& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(e)");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RatFuncE inverse(const RatFuncE& r) { return RatFuncE(1) / r; }

RatFuncE pow(const RatFuncE& base, int exponent) {
  if (exponent < 0) return inverse(pow(base, -exponent));
  RatFuncE result(1), b = base;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1u) result *= b;
    b *= b;
  }
  return result;
}

bool is_zero(const RatFuncE& r) { return r.is_zero(); }

}  // namespace ginv
