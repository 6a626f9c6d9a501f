#include "ginv/fspan.hpp"

namespace ginv {

namespace detail {

template <>
std::vector<std::pair<ExpKey, RatFuncE>> CoordinateSpan<ExpPoly, ExpKey>::coordinates(const ExpPoly& x) {
  return {x.terms().begin(), x.terms().end()};
}

template <>
ExpPoly CoordinateSpan<ExpPoly, ExpKey>::element(const std::vector<ExpKey>& keys, const RowVector<RatFuncE>& row) {
  ExpPoly f;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const RatFuncE& c = row(static_cast<Index>(i));
    if (!c.is_zero()) f += ExpPoly::term(c, keys[i].a, keys[i].k);
  }
  return f;
}

template <>
std::vector<std::pair<FunctionalKey, RatFuncE>> CoordinateSpan<BoundaryFunctional, FunctionalKey>::coordinates(
    const BoundaryFunctional& x) {
  std::vector<std::pair<FunctionalKey, RatFuncE>> out;
  for (const auto& [key, c] : x.eval_terms()) out.push_back({FunctionalKey{false, key, {}}, c});
  for (const auto& [key, c] : x.weight().terms()) out.push_back({FunctionalKey{true, {}, key}, c});
  return out;
}

template <>
BoundaryFunctional CoordinateSpan<BoundaryFunctional, FunctionalKey>::element(const std::vector<FunctionalKey>& keys,
                                                                               const RowVector<RatFuncE>& row) {
  BoundaryFunctional b;
  ExpPoly w;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const RatFuncE& c = row(static_cast<Index>(i));
    if (c.is_zero()) continue;
    if (keys[i].is_weight) {
      w += ExpPoly::term(c, keys[i].weight.a, keys[i].weight.k);
    } else {
      b += BoundaryFunctional::eval(keys[i].eval.point, keys[i].eval.order, c);
    }
  }
  return b + BoundaryFunctional::integral(w);
}

}  // namespace detail

namespace {

template <class Span>
std::string span_string(const Span& s) {
  std::string out = "span{";
  bool first = true;
  for (const auto& b : s.basis()) {
    out += (first ? "" : ", ") + b.to_string();
    first = false;
  }
  return out + "}";
}

template <class Span, class Elem>
Span span_sum(const Span& a, const Span& b) {
  std::vector<Elem> g = a.basis();
  for (auto& x : b.basis()) g.push_back(std::move(x));
  return Span(g);
}

/// Rows x A = y B come from the left kernel of [A; -B]; the intersection is
/// spanned by the resulting x A.
template <class Span, class Elem>
Span span_intersect(const Span& a, const Span& b) {
  const std::vector<Elem> ga = a.basis();
  const std::vector<Elem> gb = b.basis();
  if (ga.empty() || gb.empty()) return Span();
  std::vector<Elem> all = ga;
  all.insert(all.end(), gb.begin(), gb.end());
  const Span joint(all);
  const auto& keys = joint.keys();
  const auto na = static_cast<Index>(ga.size());
  MatrixE m = MatrixE::Zero(static_cast<Index>(all.size()), static_cast<Index>(keys.size()));
  for (std::size_t i = 0; i < all.size(); ++i) {
    const RatFuncE sign = static_cast<Index>(i) < na ? RatFuncE(1) : RatFuncE(-1);
    for (const auto& [k, c] : Span::coordinates(all[i])) {
      const auto col = std::lower_bound(keys.begin(), keys.end(), k) - keys.begin();
      m(static_cast<Index>(i), static_cast<Index>(col)) = sign * c;
    }
  }
  const MatrixE z = nullspace<RatFuncE>(MatrixE(m.transpose()));
  std::vector<Elem> out;
  for (Index j = 0; j < z.cols(); ++j) {
    Elem x{};
    for (Index i = 0; i < na; ++i)
      if (!z(i, j).is_zero()) x += ga[static_cast<std::size_t>(i)] * z(i, j);
    out.push_back(std::move(x));
  }
  return Span(out);
}

}  // namespace

std::string FunctionSpan::to_string() const { return span_string(*this); }
std::string FunctionalSpan::to_string() const { return span_string(*this); }

FunctionSpan sum(const FunctionSpan& a, const FunctionSpan& b) { return span_sum<FunctionSpan, ExpPoly>(a, b); }
FunctionalSpan sum(const FunctionalSpan& a, const FunctionalSpan& b) {
  return span_sum<FunctionalSpan, BoundaryFunctional>(a, b);
}
FunctionSpan intersect(const FunctionSpan& a, const FunctionSpan& b) {
  return span_intersect<FunctionSpan, ExpPoly>(a, b);
}
FunctionalSpan intersect(const FunctionalSpan& a, const FunctionalSpan& b) {
  return span_intersect<FunctionalSpan, BoundaryFunctional>(a, b);
}

FunctionSpan cap_perp(const FunctionSpan& u, const FunctionalSpan& b) {
  const auto ub = u.basis();
  const auto bb = b.basis();
  if (bb.empty()) return u;
  const MatrixE k = nullspace<RatFuncE>(eval_matrix_fn(bb, ub));
  std::vector<ExpPoly> out;
  for (Index j = 0; j < k.cols(); ++j) {
    ExpPoly x;
    for (Index i = 0; i < k.rows(); ++i) x += ub[static_cast<std::size_t>(i)] * k(i, j);
    out.push_back(std::move(x));
  }
  return FunctionSpan(out);
}

FunctionalSpan cap_perp(const FunctionalSpan& b, const FunctionSpan& u) {
  const auto ub = u.basis();
  const auto bb = b.basis();
  if (ub.empty()) return b;
  const MatrixE k = nullspace<RatFuncE>(MatrixE(eval_matrix_fn(bb, ub).transpose()));
  std::vector<BoundaryFunctional> out;
  for (Index j = 0; j < k.cols(); ++j) {
    BoundaryFunctional x;
    for (Index i = 0; i < k.rows(); ++i) x += bb[static_cast<std::size_t>(i)] * k(i, j);
    out.push_back(std::move(x));
  }
  return FunctionalSpan(out);
}

}  // namespace ginv
