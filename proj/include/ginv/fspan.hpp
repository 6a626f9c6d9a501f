#ifndef GINV_FSPAN_HPP
#define GINV_FSPAN_HPP

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "ginv/functional.hpp"
#include "ginv/subspace.hpp"

namespace ginv {

/// Coordinate key of a functional: evaluation keys first, then monomials of
/// the integral weight.
struct FunctionalKey {
  bool is_weight = false;
  EvalKey eval;
  ExpKey weight;
  friend bool operator==(const FunctionalKey&, const FunctionalKey&) = default;
  friend bool operator<(const FunctionalKey& l, const FunctionalKey& r) {
    if (l.is_weight != r.is_weight) return !l.is_weight;
    return l.is_weight ? l.weight < r.weight : l.eval < r.eval;
  }
};

namespace detail {

/// Finite-dimensional span inside an infinite-dimensional space, stored as
/// the reduced row echelon form of its coordinate rows. Only the keys
/// actually used are kept, so equal spans have identical representations.
template <class Elem, class Key>
class CoordinateSpan {
 public:
  static std::vector<std::pair<Key, RatFuncE>> coordinates(const Elem& x);
  static Elem element(const std::vector<Key>& keys, const RowVector<RatFuncE>& row);

  CoordinateSpan() = default;
  explicit CoordinateSpan(const std::vector<Elem>& generators) {
    std::vector<std::vector<std::pair<Key, RatFuncE>>> coords;
    for (const auto& g : generators) {
      coords.push_back(coordinates(g));
      for (const auto& kc : coords.back()) keys_.push_back(kc.first);
    }
    std::sort(keys_.begin(), keys_.end());
    keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
    MatrixE m = MatrixE::Zero(static_cast<Index>(coords.size()), static_cast<Index>(keys_.size()));
    for (std::size_t i = 0; i < coords.size(); ++i)
      for (const auto& [k, c] : coords[i]) m(static_cast<Index>(i), column(k)) = c;
    rows_ = rowspace<RatFuncE>(m);
  }

  /// Function spaces are infinite dimensional; all spans share this marker.
  Index ambient() const { return -1; }
  Index dim() const { return rows_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const std::vector<Key>& keys() const { return keys_; }

  std::vector<Elem> basis() const {
    std::vector<Elem> out;
    for (Index i = 0; i < rows_.rows(); ++i) out.push_back(element(keys_, rows_.row(i)));
    return out;
  }

  bool contains(const Elem& x) const {
    std::vector<Elem> g = basis();
    g.push_back(x);
    return CoordinateSpan(g).dim() == dim();
  }

  friend bool operator==(const CoordinateSpan& a, const CoordinateSpan& b) {
    return a.keys_ == b.keys_ && same<RatFuncE>(a.rows_, b.rows_);
  }

 protected:
  Index column(const Key& k) const {
    return static_cast<Index>(std::lower_bound(keys_.begin(), keys_.end(), k) - keys_.begin());
  }

  std::vector<Key> keys_;
  MatrixE rows_ = MatrixE(0, 0);
};

template <>
std::vector<std::pair<ExpKey, RatFuncE>> CoordinateSpan<ExpPoly, ExpKey>::coordinates(const ExpPoly& x);
template <>
ExpPoly CoordinateSpan<ExpPoly, ExpKey>::element(const std::vector<ExpKey>& keys, const RowVector<RatFuncE>& row);
template <>
std::vector<std::pair<FunctionalKey, RatFuncE>> CoordinateSpan<BoundaryFunctional, FunctionalKey>::coordinates(
    const BoundaryFunctional& x);
template <>
BoundaryFunctional CoordinateSpan<BoundaryFunctional, FunctionalKey>::element(const std::vector<FunctionalKey>& keys,
                                                                               const RowVector<RatFuncE>& row);

}  // namespace detail

class FunctionSpan : public detail::CoordinateSpan<ExpPoly, ExpKey> {
 public:
  using CoordinateSpan::CoordinateSpan;
  static FunctionSpan span(const std::vector<ExpPoly>& g) { return FunctionSpan(g); }
  std::string to_string() const;
};

class FunctionalSpan : public detail::CoordinateSpan<BoundaryFunctional, FunctionalKey> {
 public:
  using CoordinateSpan::CoordinateSpan;
  static FunctionalSpan span(const std::vector<BoundaryFunctional>& g) { return FunctionalSpan(g); }
  std::string to_string() const;
};

FunctionSpan sum(const FunctionSpan& a, const FunctionSpan& b);
FunctionalSpan sum(const FunctionalSpan& a, const FunctionalSpan& b);
FunctionSpan intersect(const FunctionSpan& a, const FunctionSpan& b);
FunctionalSpan intersect(const FunctionalSpan& a, const FunctionalSpan& b);

/// U cap B^perp, from the kernel of the evaluation matrix beta(u).
FunctionSpan cap_perp(const FunctionSpan& u, const FunctionalSpan& b);
/// B cap U^perp, from the kernel of beta(u)^T.
FunctionalSpan cap_perp(const FunctionalSpan& b, const FunctionSpan& u);

}  // namespace ginv

#endif  // GINV_FSPAN_HPP
