#include "ginv/functional.hpp"

#include <algorithm>
#include <stdexcept>

namespace ginv {

namespace {

Rational binomial(int n, int k) {
  Rational b(1);
  for (int i = 1; i <= k; ++i) b = b * Rational(n - k + i) / Rational(i);
  return b;
}

std::string eval_string(EvalKey key) {
  std::string s = "E[" + std::to_string(key.point) + "]";
  if (key.order == 1) s += "D";
  if (key.order > 1) s += "D^" + std::to_string(key.order);
  return s;
}

}  // namespace

BoundaryFunctional BoundaryFunctional::eval(int point, int order, const RatFuncE& coeff) {
  if (point != 0 && point != 1) throw std::invalid_argument("evaluation point must be 0 or 1");
  if (order < 0) throw std::invalid_argument("derivative order must be nonnegative");
  BoundaryFunctional b;
  b.add_eval({point, order}, coeff);
  return b;
}

BoundaryFunctional BoundaryFunctional::integral(ExpPoly weight) {
  BoundaryFunctional b;
  b.weight_ = std::move(weight);
  return b;
}

int BoundaryFunctional::max_order() const {
  int m = -1;
  for (const auto& [key, c] : evals_) m = std::max(m, key.order);
  return m;
}

void BoundaryFunctional::add_eval(EvalKey key, const RatFuncE& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = evals_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) evals_.erase(it);
  }
}

RatFuncE BoundaryFunctional::apply(const ExpPoly& f) const {
  RatFuncE v(0);
  for (const auto& [key, c] : evals_) v += c * evaluate(differentiate(f, key.order), key.point);
  if (!weight_.is_zero()) v += evaluate(integrate_0x(weight_ * f), 1);
  return v;
}

std::string BoundaryFunctional::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [key, c] : evals_) {
    const std::string e = eval_string(key);
    if (c == RatFuncE(1)) {
      parts.push_back(e);
    } else if (c == RatFuncE(-1)) {
      parts.push_back("-" + e);
    } else {
      parts.push_back(coefficient_string(c) + "*" + e);
    }
  }
  if (!weight_.is_zero()) parts.push_back("int(" + weight_.to_string() + ")");
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i)
    out += parts[i].front() == '-' ? " - " + parts[i].substr(1) : " + " + parts[i];
  return out;
}

BoundaryFunctional BoundaryFunctional::operator-() const {
  BoundaryFunctional b = *this;
  return b *= RatFuncE(-1);
}

BoundaryFunctional& BoundaryFunctional::operator+=(const BoundaryFunctional& o) {
  for (const auto& [key, c] : o.evals_) add_eval(key, c);
  weight_ += o.weight_;
  return *this;
}

BoundaryFunctional& BoundaryFunctional::operator-=(const BoundaryFunctional& o) {
  for (const auto& [key, c] : o.evals_) add_eval(key, -c);
  weight_ -= o.weight_;
  return *this;
}

BoundaryFunctional& BoundaryFunctional::operator*=(const RatFuncE& c) {
  if (c.is_zero()) {
    evals_.clear();
    weight_ = ExpPoly();
    return *this;
  }
  for (auto& [key, v] : evals_) v *= c;
  weight_ *= c;
  return *this;
}

BoundaryFunctional compose_with_diffop(const BoundaryFunctional& beta, const DiffOp& t) {
  BoundaryFunctional out;
  const auto& coeffs = t.coefficients();
  for (std::size_t jj = 0; jj < coeffs.size(); ++jj) {
    if (coeffs[jj].is_zero()) continue;
    const int j = static_cast<int>(jj);
    const RatFuncE cj(coeffs[jj]);
    BoundaryFunctional part;
    for (const auto& [key, c] : beta.eval_terms()) part += BoundaryFunctional::eval(key.point, key.order + j, c);
    // int w f^(j) = sum_{i<j} (-1)^i [w^(i) f^(j-1-i)]_0^1 + (-1)^j int w^(j) f
    const ExpPoly& w = beta.weight();
    if (!w.is_zero()) {
      ExpPoly wi = w;
      for (int i = 0; i < j; ++i) {
        const RatFuncE sign = i % 2 == 0 ? RatFuncE(1) : RatFuncE(-1);
        part += BoundaryFunctional::eval(1, j - 1 - i, sign * evaluate(wi, 1));
        part += BoundaryFunctional::eval(0, j - 1 - i, -sign * evaluate(wi, 0));
        wi = differentiate(wi);
      }
      part += BoundaryFunctional::integral(j % 2 == 0 ? wi : -wi);
    }
    out += part * cj;
  }
  return out;
}

BoundaryFunctional compose_with_volterra(const BoundaryFunctional& beta, const std::vector<VolterraTerm>& v) {
  BoundaryFunctional out;
  for (const auto& [key, c] : beta.eval_terms()) {
    const int k = key.order;
    // D^k (p int_0^x q f) = p^(k) int_0^x q f + sum_{m<k} D^{k-1-m}(p^(m) q f)
    if (key.point == 1) {
      ExpPoly w;
      for (const auto& [p, q] : v) w += q * evaluate(differentiate(p, k), 1);
      out += BoundaryFunctional::integral(w * c);
    }
    for (int m = 0; m < k; ++m) {
      ExpPoly r;
      for (const auto& [p, q] : v) r += differentiate(p, m) * q;
      const int s = k - 1 - m;
      for (int i = 0; i <= s; ++i) {
        const RatFuncE coeff = c * RatFuncE(binomial(s, i)) * evaluate(differentiate(r, s - i), key.point);
        out += BoundaryFunctional::eval(key.point, i, coeff);
      }
    }
  }
  // int_0^1 w(x) p(x) int_0^x q f = int_0^1 q(t) (W(1) - W(t)) f(t) dt with W = int_0^x w p
  if (!beta.weight().is_zero()) {
    ExpPoly w;
    for (const auto& [p, q] : v) {
      const ExpPoly big_w = integrate_0x(beta.weight() * p);
      w += q * (ExpPoly(evaluate(big_w, 1)) - big_w);
    }
    out += BoundaryFunctional::integral(w);
  }
  return out;
}

MatrixE eval_matrix_fn(const std::vector<BoundaryFunctional>& beta, const std::vector<ExpPoly>& u) {
  MatrixE m(static_cast<Index>(beta.size()), static_cast<Index>(u.size()));
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) m(static_cast<Index>(i), static_cast<Index>(j)) = beta[i].apply(u[j]);
  return m;
}

}  // namespace ginv
