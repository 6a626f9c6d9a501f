#ifndef GINV_TESTS_RANDOM_BVP_HPP
#define GINV_TESTS_RANDOM_BVP_HPP

#include <optional>

#include "ginv/boundary.hpp"
#include "random_exp.hpp"

namespace ginv::testing {

/// Random semi-regular Green's data: order <= 3, up to two conditions beyond
/// the order, and a random exceptional space complementing T(B^perp).
inline GreenSpec random_green_spec(ExpGen& g, int max_order = 3, int max_extra = 2) {
  for (;;) {
    const DiffOp t = g.diffop(max_order);
    const int extra = g.base().uniform(0, max_extra);
    std::vector<BoundaryFunctional> conds;
    for (int i = 0; i < t.order() + extra; ++i) {
      // mostly evaluation conditions, as in classical problems
      BoundaryFunctional b = BoundaryFunctional::eval(g.base().uniform(0, 1), g.base().uniform(0, t.order() - 1));
      if (g.base().coin(0.5)) b += BoundaryFunctional::eval(g.base().uniform(0, 1), g.base().uniform(0, t.order() + 1), g.scalar());
      if (g.base().coin(0.15)) b += BoundaryFunctional::integral(g.poly(1));
      conds.push_back(b);
    }
    if (FunctionalSpan(conds).dim() != static_cast<Index>(conds.size())) continue;
    BoundaryProblem problem(t, conds);
    if (!regularity(problem).semi_regular) continue;
    for (int attempt = 0; attempt < 5; ++attempt) {
      std::vector<ExpPoly> e;
      for (int i = 0; i < extra; ++i) e.push_back(g.poly(2));
      try {
        return GreenSpec(problem, e);
      } catch (const PreconditionError&) {
      }
    }
  }
}

}  // namespace ginv::testing

#endif  // GINV_TESTS_RANDOM_BVP_HPP
