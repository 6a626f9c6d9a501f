#ifndef GINV_TESTS_RANDOM_EXP_HPP
#define GINV_TESTS_RANDOM_EXP_HPP

#include <vector>

#include "ginv/functional.hpp"
#include "random_instances.hpp"

namespace ginv::testing {

/// Small random exponential polynomials, functionals and operators with
/// exponents in [-2, 2] and powers up to 2.
class ExpGen {
 public:
  explicit ExpGen(std::uint64_t seed) : g_(seed) {}

  InstanceGen& base() { return g_; }

  RatFuncE scalar() {
    RatFuncE c(g_.entry());
    if (g_.coin(0.2)) c *= RatFuncE::e_power(g_.uniform(-1, 1));
    return c;
  }

  ExpPoly poly(int max_terms = 3) {
    ExpPoly f;
    const int n = g_.uniform(1, max_terms);
    for (int i = 0; i < n; ++i) f += ExpPoly::term(scalar(), g_.uniform(-2, 2), g_.uniform(0, 2));
    return f;
  }

  BoundaryFunctional functional(int max_order = 2) {
    BoundaryFunctional b;
    const int n = g_.uniform(0, 3);
    for (int i = 0; i < n; ++i) b += BoundaryFunctional::eval(g_.uniform(0, 1), g_.uniform(0, max_order), scalar());
    if (n == 0 || g_.coin(0.4)) b += BoundaryFunctional::integral(poly(2));
    return b;
  }

  DiffOp diffop(int max_order = 3) {
    std::vector<int> roots;
    const int n = g_.uniform(1, max_order);
    for (int i = 0; i < n; ++i) roots.push_back(g_.uniform(-2, 2));
    return DiffOp::from_roots(roots);
  }

 private:
  InstanceGen g_;
};

}  // namespace ginv::testing

#endif  // GINV_TESTS_RANDOM_EXP_HPP
