#include "ginv/exppoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ginv {

ExpPoly::ExpPoly(RatFuncE constant) { add_term({0, 0}, constant); }

ExpPoly ExpPoly::term(RatFuncE c, int a, int k) {
  if (k < 0) throw std::invalid_argument("ExpPoly::term: negative power of x");
  ExpPoly f;
  f.add_term({a, k}, c);
  return f;
}

bool ExpPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExpKey{0, 0});
}

RatFuncE ExpPoly::coefficient(ExpKey key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? RatFuncE(0) : it->second;
}

int ExpPoly::max_power(int a) const {
  int k = -1;
  for (const auto& [key, c] : terms_)
    if (key.a == a) k = std::max(k, key.k);
  return k;
}

void ExpPoly::add_term(ExpKey key, const RatFuncE& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly f = *this;
  for (auto& [key, c] : f.terms_) c = -c;
  return f;
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, c);
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key, -c);
  return *this;
}

ExpPoly& ExpPoly::operator*=(const ExpPoly& o) {
  ExpPoly out;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) out.add_term({k1.a + k2.a, k1.k + k2.k}, c1 * c2);
  return *this = std::move(out);
}

ExpPoly& ExpPoly::operator*=(const RatFuncE& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

std::string coefficient_string(const RatFuncE& c) {
  if (auto r = c.as_rational()) return r->to_string();
  return "(" + c.to_string() + ")";
}

namespace {

std::string monomial_string(ExpKey key) {
  std::string x, ex;
  if (key.k == 1) x = "x";
  if (key.k > 1) x = "x^" + std::to_string(key.k);
  if (key.a == 1) ex = "exp(x)";
  if (key.a == -1) ex = "exp(-x)";
  if (key.a != 0 && key.a != 1 && key.a != -1) ex = "exp(" + std::to_string(key.a) + "*x)";
  if (!x.empty() && !ex.empty()) return x + "*" + ex;
  return x + ex;
}

}  // namespace

std::string ExpPoly::to_string() const {
  if (terms_.empty()) return "0";
  // exponent ascending, powers of x descending
  std::vector<std::pair<ExpKey, RatFuncE>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    return l.first.a != r.first.a ? l.first.a < r.first.a : l.first.k > r.first.k;
  });
  std::string out;
  for (const auto& [key, c] : ordered) {
    const std::string mono = monomial_string(key);
    std::string t;
    if (mono.empty()) {
      t = out.empty() ? c.to_string() : coefficient_string(c);
    } else if (c == RatFuncE(1)) {
      t = mono;
    } else if (c == RatFuncE(-1)) {
      t = "-" + mono;
    } else {
      t = coefficient_string(c) + "*" + mono;
    }
    if (out.empty()) {
      out = t;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

ExpPoly differentiate(const ExpPoly& f, int times) {
  if (times < 0) throw std::invalid_argument("differentiate: negative order");
  ExpPoly cur = f;
  for (int n = 0; n < times && !cur.is_zero(); ++n) {
    ExpPoly next;
    for (const auto& [key, c] : cur.terms()) {
      if (key.k > 0) next += ExpPoly::term(c * RatFuncE(key.k), key.a, key.k - 1);
      if (key.a != 0) next += ExpPoly::term(c * RatFuncE(key.a), key.a, key.k);
    }
    cur = std::move(next);
  }
  return cur;
}

ExpPoly integrate_0x(const ExpPoly& f) {
  ExpPoly out;
  for (const auto& [key, c] : f.terms()) {
    if (key.a == 0) {
      out += ExpPoly::term(c / RatFuncE(key.k + 1), 0, key.k + 1);
      continue;
    }
    // e^{ax} sum_j (-1)^j k!/(k-j)! x^{k-j} / a^{j+1}, minus its value at 0
    const Rational a(key.a);
    Rational falling(1);  // k!/(k-j)!
    for (int j = 0; j <= key.k; ++j) {
      if (j > 0) falling *= Rational(key.k - j + 1);
      Rational w = falling / pow(a, j + 1);
      if (j % 2 == 1) w = -w;
      out += ExpPoly::term(c * RatFuncE(w), key.a, key.k - j);
      if (j == key.k) out -= ExpPoly(c * RatFuncE(w));
    }
  }
  return out;
}

RatFuncE evaluate(const ExpPoly& f, int c) {
  if (c != 0 && c != 1) throw std::invalid_argument("evaluate: evaluation point must be 0 or 1");
  RatFuncE v(0);
  for (const auto& [key, coeff] : f.terms()) {
    if (c == 0) {
      if (key.k == 0) v += coeff;
    } else {
      v += coeff * RatFuncE::e_power(key.a);
    }
  }
  return v;
}

}  // namespace ginv
