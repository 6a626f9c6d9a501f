#ifndef GINV_BOUNDARY_HPP
#define GINV_BOUNDARY_HPP

#include <string>
#include <vector>

#include "ginv/fspan.hpp"
#include "ginv/rol.hpp"

namespace ginv {

/// Pair (T, B) of a differential operator and a finite set of linearly
/// independent boundary conditions spanning B.
class BoundaryProblem {
 public:
  BoundaryProblem(DiffOp op, std::vector<BoundaryFunctional> conditions);

  const DiffOp& op() const { return op_; }
  const std::vector<BoundaryFunctional>& conditions() const { return conditions_; }
  FunctionalSpan condition_span() const { return FunctionalSpan(conditions_); }

 private:
  DiffOp op_;
  std::vector<BoundaryFunctional> conditions_;
};

struct Regularity {
  bool regular = false;
  bool semi_regular = false;
};

/// Semi-regular iff B^perp cap Ker T = {0}; regular iff in addition the
/// number of conditions equals the order.
Regularity regularity(const BoundaryProblem& problem);

/// Canonical basis of the compatibility conditions T(B^perp)^perp. Throws
/// PreconditionError unless the problem is semi-regular.
std::vector<BoundaryFunctional> compatibility(const BoundaryProblem& problem);

/// T^{-1}(span E).
FunctionSpan preimage_of_exceptional(const DiffOp& op, const std::vector<ExpPoly>& exceptional);

/// Boundary problem plus exceptional space E, describing the generalized
/// Green's operator O(T, B, E). Validated on construction.
class GreenSpec {
 public:
  GreenSpec(BoundaryProblem problem, std::vector<ExpPoly> exceptional);

  const BoundaryProblem& problem() const { return problem_; }
  const DiffOp& op() const { return problem_.op(); }
  const std::vector<BoundaryFunctional>& conditions() const { return problem_.conditions(); }
  const std::vector<ExpPoly>& exceptional() const { return exceptional_; }
  const std::vector<BoundaryFunctional>& compatibility() const { return compat_; }

 private:
  BoundaryProblem problem_;
  std::vector<ExpPoly> exceptional_;
  std::vector<BoundaryFunctional> compat_;
};

ExpPoly green_apply(const GreenSpec& spec, const ExpPoly& f);

using BoundaryRolReport = RolReport<FunctionSpan, FunctionalSpan>;

/// Is G2 G1 an outer inverse of T1 T2, for G1 = green(first) and
/// G2 = green(second)? Condition (i) is left unevaluated.
BoundaryRolReport rol_check(const GreenSpec& first, const GreenSpec& second);

/// Green's data of G2 G1 for T1 T2. Throws RolFailure if the reverse order
/// law fails.
GreenSpec compose(const GreenSpec& first, const GreenSpec& second);

}  // namespace ginv

#endif  // GINV_BOUNDARY_HPP
