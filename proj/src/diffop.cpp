#include "ginv/diffop.hpp"

#include <algorithm>
#include <stdexcept>

namespace ginv {

namespace {

using IntPoly = std::vector<mpz_class>;  // low -> high

mpz_class horner(const IntPoly& p, const mpz_class& x) {
  mpz_class v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

/// p / (x - r), assuming r is a root.
IntPoly deflate(const IntPoly& p, const mpz_class& r) {
  IntPoly q(p.size() - 1);
  mpz_class carry = 0;
  for (std::size_t i = p.size() - 1; i > 0; --i) {
    carry = carry * r + p[i];
    q[i - 1] = carry;
  }
  return q;
}

std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<int> integer_roots(IntPoly p) {
  std::vector<int> roots;
  while (p.size() > 1) {
    if (p[0] == 0) {
      roots.push_back(0);
      p.erase(p.begin());
      continue;
    }
    bool found = false;
    for (const auto& d : divisors(p[0])) {
      for (const mpz_class& r : {mpz_class(d), mpz_class(-d)}) {
        if (horner(p, r) == 0) {
          if (!r.fits_sint_p()) throw std::invalid_argument("DiffOp: characteristic root out of range");
          roots.push_back(static_cast<int>(r.get_si()));
          p = deflate(p, r);
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) throw std::invalid_argument("DiffOp: characteristic polynomial does not split over the integers");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

DiffOp::DiffOp(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.size() < 2) throw std::invalid_argument("DiffOp: order must be at least 1");
  if (!coeffs_.back().is_one()) throw std::invalid_argument("DiffOp: operator must be monic");
  IntPoly p;
  for (const auto& c : coeffs_) {
    // integer roots of a monic polynomial force integer coefficients
    if (!c.is_integer()) throw std::invalid_argument("DiffOp: characteristic polynomial does not split over the integers");
    p.push_back(c.numerator());
  }
  roots_ = integer_roots(std::move(p));
}

DiffOp DiffOp::from_roots(const std::vector<int>& roots) {
  std::vector<Rational> c{Rational(1)};
  for (int a : roots) {
    std::vector<Rational> next(c.size() + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= Rational(a) * c[i];
    }
    c = std::move(next);
  }
  return DiffOp(std::move(c));
}

std::vector<std::pair<int, int>> DiffOp::root_multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int a : roots_) {
    if (!out.empty() && out.back().first == a) {
      ++out.back().second;
    } else {
      out.emplace_back(a, 1);
    }
  }
  return out;
}

std::string DiffOp::to_string() const {
  std::string out;
  for (int j = order(); j >= 0; --j) {
    const Rational& c = coeffs_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    const std::string d = j == 0 ? "" : (j == 1 ? "D" : "D^" + std::to_string(j));
    const Rational mag = abs(c);
    std::string t = d.empty() ? mag.to_string() : (mag.is_one() ? d : mag.to_string() + "*" + d);
    if (out.empty()) {
      out = c.sign() < 0 ? "-" + t : t;
    } else {
      out += (c.sign() < 0 ? " - " : " + ") + t;
    }
  }
  return out;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return DiffOp(std::move(c));
}

ExpPoly apply_diffop(const DiffOp& t, const ExpPoly& f) {
  ExpPoly out;
  ExpPoly d = f;
  for (std::size_t j = 0; j < t.coefficients().size(); ++j) {
    if (j > 0) d = differentiate(d);
    if (!t.coefficients()[j].is_zero()) out += d * RatFuncE(t.coefficients()[j]);
  }
  return out;
}

std::vector<ExpPoly> kernel_basis(const DiffOp& t) {
  std::vector<ExpPoly> out;
  for (const auto& [a, m] : t.root_multiplicities())
    for (int j = 0; j < m; ++j) out.push_back(ExpPoly::term(1, a, j));
  return out;
}

ExpPoly right_inverse_apply(const DiffOp& t, const ExpPoly& f) {
  ExpPoly u = f;
  for (int a : t.roots()) u = ExpPoly::exp(a) * integrate_0x(ExpPoly::exp(-a) * u);
  return u;
}

std::vector<VolterraTerm> right_inverse_kernel(const DiffOp& t) {
  std::vector<VolterraTerm> terms;
  for (int a : t.roots()) {
    if (terms.empty()) {
      terms.push_back({ExpPoly::exp(a), ExpPoly::exp(-a)});
      continue;
    }
    // (D - a)^{-1} [p int_0^x q f] = e^{ax} (P int_0^x q f - int_0^x P q f), P = int_0^x e^{-at} p
    std::vector<VolterraTerm> next;
    for (const auto& [p, q] : terms) {
      const ExpPoly big_p = integrate_0x(ExpPoly::exp(-a) * p);
      if (!big_p.is_zero()) {
        next.push_back({ExpPoly::exp(a) * big_p, q});
        next.push_back({-ExpPoly::exp(a), big_p * q});
      }
    }
    terms = std::move(next);
  }
  return terms;
}

ExpPoly apply_volterra(const std::vector<VolterraTerm>& v, const ExpPoly& f) {
  ExpPoly out;
  for (const auto& [p, q] : v) out += p * integrate_0x(q * f);
  return out;
}

}  // namespace ginv
