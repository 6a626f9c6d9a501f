#include "ginv/boundary.hpp"

#include <stdexcept>

namespace ginv {

namespace {

template <class Elem>
Elem combine(const std::vector<Elem>& elems, const MatrixE& coeffs, Index col) {
  Elem out{};
  for (Index i = 0; i < coeffs.rows(); ++i)
    if (!coeffs(i, col).is_zero()) out += elems[static_cast<std::size_t>(i)] * coeffs(i, col);
  return out;
}

Vector<RatFuncE> apply_all(const std::vector<BoundaryFunctional>& beta, const ExpPoly& f) {
  Vector<RatFuncE> v(static_cast<Index>(beta.size()));
  for (std::size_t i = 0; i < beta.size(); ++i) v(static_cast<Index>(i)) = beta[i].apply(f);
  return v;
}

}  // namespace

BoundaryProblem::BoundaryProblem(DiffOp op, std::vector<BoundaryFunctional> conditions)
    : op_(std::move(op)), conditions_(std::move(conditions)) {
  if (FunctionalSpan(conditions_).dim() != static_cast<Index>(conditions_.size()))
    throw PreconditionError("boundary conditions are linearly dependent");
}

Regularity regularity(const BoundaryProblem& problem) {
  const MatrixE m = eval_matrix_fn(problem.conditions(), kernel_basis(problem.op()));
  Regularity r;
  r.semi_regular = rank<RatFuncE>(m) == m.cols();
  r.regular = r.semi_regular && m.rows() == m.cols();
  return r;
}

std::vector<BoundaryFunctional> compatibility(const BoundaryProblem& problem) {
  if (!regularity(problem).semi_regular) throw PreconditionError("compatibility: problem is not semi-regular");
  const FunctionalSpan beyond_kernel = cap_perp(problem.condition_span(), FunctionSpan(kernel_basis(problem.op())));
  const auto v = right_inverse_kernel(problem.op());
  std::vector<BoundaryFunctional> out;
  for (const auto& b : beyond_kernel.basis()) out.push_back(compose_with_volterra(b, v));
  return FunctionalSpan(out).basis();
}

FunctionSpan preimage_of_exceptional(const DiffOp& op, const std::vector<ExpPoly>& exceptional) {
  std::vector<ExpPoly> g = kernel_basis(op);
  for (const auto& e : exceptional) g.push_back(right_inverse_apply(op, e));
  return FunctionSpan(g);
}

GreenSpec::GreenSpec(BoundaryProblem problem, std::vector<ExpPoly> exceptional)
    : problem_(std::move(problem)), exceptional_(std::move(exceptional)) {
  compat_ = ginv::compatibility(problem_);
  if (FunctionSpan(exceptional_).dim() != static_cast<Index>(exceptional_.size()))
    throw PreconditionError("exceptional functions are linearly dependent");
  if (exceptional_.size() != compat_.size())
    throw PreconditionError("exceptional space has dimension " + std::to_string(exceptional_.size()) + ", expected " +
                            std::to_string(compat_.size()));
  const MatrixE m = eval_matrix_fn(compat_, exceptional_);
  if (rank<RatFuncE>(m) != m.rows())
    throw PreconditionError("exceptional space is not a complement of the solvable right-hand sides");
}

ExpPoly green_apply(const GreenSpec& spec, const ExpPoly& f) {
  ExpPoly g = f;
  if (!spec.exceptional().empty()) {
    const auto c = solve<RatFuncE>(eval_matrix_fn(spec.compatibility(), spec.exceptional()),
                                   apply_all(spec.compatibility(), f));
    if (!c) throw std::logic_error("green_apply: projection onto the exceptional space failed");
    g -= combine(spec.exceptional(), MatrixE(*c), 0);
  }
  const ExpPoly particular = right_inverse_apply(spec.op(), g);
  const std::vector<ExpPoly> kernel = kernel_basis(spec.op());
  const auto c = solve<RatFuncE>(eval_matrix_fn(spec.conditions(), kernel),
                                 Vector<RatFuncE>(-apply_all(spec.conditions(), particular)));
  if (!c) throw std::logic_error("green_apply: boundary conditions cannot be met");
  return particular + combine(kernel, MatrixE(*c), 0);
}

BoundaryRolReport rol_check(const GreenSpec& first, const GreenSpec& second) {
  const FunctionalSpan c2(second.compatibility());
  const FunctionSpan k1 = preimage_of_exceptional(first.op(), first.exceptional());
  return fredholm_conditions(c2, k1, first.problem().condition_span(), FunctionSpan(second.exceptional()));
}

GreenSpec compose(const GreenSpec& first, const GreenSpec& second) {
  const BoundaryRolReport report = rol_check(first, second);
  if (!report.verdict)
    throw RolFailure("compose: reverse order law fails (conditions " + detail::join(report.failed_conditions()) + ")",
                     report.failed_conditions());
  const FunctionalSpan b1 = first.problem().condition_span();
  const FunctionSpan e2(second.exceptional());

  const FunctionalSpan b2 = second.problem().condition_span();
  std::vector<BoundaryFunctional> pulled;
  for (const auto& b : cap_perp(b1, e2).basis()) pulled.push_back(compose_with_diffop(b, second.op()));
  const FunctionalSpan extra_b(pulled);
  if (!is_direct(b2, extra_b)) throw std::logic_error("compose: boundary condition sum is not direct");

  const FunctionSpan e1(first.exceptional());
  std::vector<ExpPoly> pushed;
  for (const auto& u : cap_perp(e2, b1).basis()) pushed.push_back(apply_diffop(first.op(), u));
  const FunctionSpan extra_e(pushed);
  if (!is_direct(e1, extra_e)) throw std::logic_error("compose: exceptional sum is not direct");

  return GreenSpec(BoundaryProblem(first.op() * second.op(), sum(b2, extra_b).basis()), sum(e1, extra_e).basis());
}

}  // namespace ginv
