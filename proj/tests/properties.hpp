#ifndef GINV_TESTS_PROPERTIES_HPP
#define GINV_TESTS_PROPERTIES_HPP

// Randomized property suites over small exact instances. Each suite returns a
// SuiteResult so that the unit tests and the acceptance runner share them.

#include <cstdint>
#include <string>
#include <vector>

#include "ginv/rol.hpp"
#include "random_instances.hpp"

namespace ginv::testing {

struct SuiteResult {
  std::string name;
  int instances = 0;
  int failures = 0;
  /// Instances where the decided predicate came out true (non-vacuity).
  int positives = 0;
  std::string first_failure;

  bool expect(bool ok, const std::string& what) {
    if (!ok) {
      if (failures == 0) first_failure = what + " (instance " + std::to_string(instances) + ")";
      ++failures;
    }
    return ok;
  }
  bool passed() const { return failures == 0; }
};

namespace props {

/// Row-reduce [U^T U^T; W^T 0]; rows with vanishing left half span U cap W.
inline SubspaceQ zassenhaus(const SubspaceQ& u, const SubspaceQ& w) {
  const Index n = u.ambient();
  MatrixQ m = MatrixQ::Zero(u.dim() + w.dim(), 2 * n);
  m.topLeftCorner(u.dim(), n) = u.basis().transpose();
  m.topRightCorner(u.dim(), n) = u.basis().transpose();
  m.bottomLeftCorner(w.dim(), n) = w.basis().transpose();
  const auto e = rref<Rational>(m);
  std::vector<VectorQ> out;
  for (Index i = 0; i < e.rank(); ++i)
    if (is_zero<Rational>(MatrixQ(e.reduced.row(i).head(n)))) out.push_back(e.reduced.row(i).tail(n).transpose());
  return SubspaceQ::span(n, out);
}

inline SubspaceQ random_subspace_of(InstanceGen& gen, const SubspaceQ& s, int max_gens = 3) {
  return SubspaceQ::span(MatrixQ(s.basis() * gen.full_matrix(s.dim(), gen.uniform(0, max_gens))));
}

/// T with a prescribed kernel-ish structure: random with probability 1/2,
/// otherwise injective or zero-heavy, to exercise edge cases.
inline MatrixQ operator_matrix(InstanceGen& gen, Index rows, Index cols) {
  switch (gen.uniform(0, 5)) {
    case 0: return gen.full_matrix(rows, cols);
    case 1: return MatrixQ::Zero(rows, cols);
    default: return gen.matrix(rows, cols);
  }
}

/// Inner inverse of t with Im G T = b and Ker T G = e: its action on e lands
/// in Ker t.
inline MatrixQ inner_inverse_in(InstanceGen& gen, const MatrixQ& t, const SubspaceQ& b, const SubspaceQ& e) {
  const auto ker = kernel<Rational>(t);
  const MatrixQ action = ker.basis() * gen.full_matrix(ker.dim(), e.dim());
  return construct_inner<Rational>(t, b, e, action);
}

}  // namespace props

// ---- subspace lattice and duality -------------------------------------------

inline SuiteResult lattice_suite(std::uint64_t seed, int n) {
  SuiteResult r{"lattice: orthogonal Galois connection, lattice isomorphism, direct sums, modularity"};
  InstanceGen gen(seed);
  int mod_hits = 0;
  for (r.instances = 0; r.instances < n; ++r.instances) {
    const Index dim = gen.dim();
    const auto u1 = gen.subspace(dim), u2 = gen.subspace(dim);
    r.expect(orthogonal(orthogonal(u1)) == u1, "U perp perp = U");
    r.expect(u1.dim() + orthogonal(u1).dim() == dim, "dim U + dim U perp = n");
    r.expect(includes(orthogonal(u1), orthogonal(u1 + u2)), "orthogonal reverses inclusion");
    r.expect(orthogonal(u1 + u2) == (orthogonal(u1) & orthogonal(u2)), "(U1+U2) perp");
    r.expect(orthogonal(u1 & u2) == (orthogonal(u1) + orthogonal(u2)), "(U1 cap U2) perp");
    const auto b1 = orthogonal(gen.subspace(dim)), b2 = orthogonal(gen.subspace(dim));
    r.expect(orthogonal(b1 + b2) == (orthogonal(b1) & orthogonal(b2)), "(B1+B2) perp");
    r.expect(orthogonal(b1 & b2) == (orthogonal(b1) + orthogonal(b2)), "(B1 cap B2) perp");

    const auto c = gen.complement(u1);
    r.expect(is_complement(u1, c) && is_complement(orthogonal(u1), orthogonal(c)), "direct sum dualizes");

    const auto z = props::zassenhaus(u1, u2);
    r.expect(intersect(u1, u2) == z, "intersect agrees with Zassenhaus");

    const auto u3 = gen.subspace(dim);
    const auto sub3 = props::random_subspace_of(gen, u3);
    r.expect((sub3 + (u2 & u3)) == ((sub3 + u2) & u3), "modularity");

    const auto v4 = gen.complement(u3);
    const auto v1 = gen.coin(0.6) ? u3 : props::random_subspace_of(gen, u3, 2);
    const auto v2 = gen.coin(0.6) ? v4 : props::random_subspace_of(gen, v4, 2);
    if ((v1 + v2).is_full()) {
      ++mod_hits;
      r.expect(v1 == u3 && v2 == v4, "modular implication");
    }

    const auto b = orthogonal(gen.subspace(dim));
    MatrixQ gens = detail::hstack<Rational>(u1.basis(), MatrixQ(u1.basis() * gen.full_matrix(u1.dim(), 1)));
    const auto li = evaluation_intersections<Rational>(b.basis(), gens);
    r.expect(li.primal == intersect(u1, orthogonal(b)), "evaluation primal component");
    r.expect(li.dual == intersect(orthogonal(u1), b), "evaluation dual component");
    r.expect(li.primal == props::zassenhaus(u1, orthogonal(b)), "lemma vs Zassenhaus");
  }
  r.positives = mod_hits;
  r.expect(mod_hits > 0, "modular implication never exercised");
  return r;
}

inline SuiteResult transpose_suite(std::uint64_t seed, int n) {
  SuiteResult r{"transpose identities for images, kernels and preimages"};
  InstanceGen gen(seed);
  for (r.instances = 0; r.instances < n; ++r.instances) {
    const Index rows = gen.dim(), cols = gen.dim();
    const MatrixQ a = gen.matrix(rows, cols);
    r.expect(orthogonal(range<Rational>(a)) == dual_kernel<Rational>(a), "(Im A) perp = Ker A*");
    r.expect(dual_range<Rational>(a) == orthogonal(kernel<Rational>(a)), "Im A* = (Ker A) perp");
    const auto v1 = gen.subspace(cols);
    r.expect(orthogonal(image(a, v1)) == transpose_preimage(a, orthogonal(v1)), "A(V1) perp = (A*)^-1(V1 perp)");
    const auto w1 = gen.subspace(rows);
    r.expect(transpose_image(a, orthogonal(w1)) == orthogonal(preimage(a, w1)), "A*(W1 perp) = A^-1(W1) perp");
  }
  return r;
}

// ---- generalized inverses ---------------------------------------------------

inline SuiteResult outer_characterization_suite(std::uint64_t seed, int n) {
  SuiteResult r{"outer inverse: seven characterizations, identity triple, uniqueness"};
  InstanceGen gen(seed);
  for (r.instances = 0; r.instances < n; ++r.instances) {
    const MatrixQ t = props::operator_matrix(gen, gen.dim(), gen.dim());
    const auto [b, e] = gen.outer_pair(t);
    const MatrixQ g = construct_outer<Rational>(t, b, e);
    const auto v = verify<Rational>(t, g);
    r.expect(v.outer && v.seven_way_agree, "construct_outer output satisfies all seven");
    r.expect(range<Rational>(g) == b && kernel<Rational>(g) == e, "Im G = B, Ker G = E");
    const auto q = projector(image(t, b), e);
    const auto p = projector(preimage(t, e), b);
    r.expect(same<Rational>(MatrixQ(t * g), q.matrix), "TG = Q");
    r.expect(same<Rational>(MatrixQ(g * t), MatrixQ(identity<Rational>(t.cols()) - p.matrix)), "GT = 1 - P");
    r.expect(same<Rational>(construct_outer<Rational>(t, b, e), g), "uniqueness");
    if (v.outer) ++r.positives;

    // Perturbed and unrelated candidates: the seven statements still agree.
    MatrixQ mutated = g;
    mutated += gen.vector(g.rows()) * gen.vector(g.cols()).transpose();
    r.expect(verify<Rational>(t, mutated).seven_way_agree, "seven agree on a perturbed candidate");
    r.expect(verify<Rational>(t, gen.matrix(t.cols(), t.rows())).seven_way_agree, "seven agree on a random candidate");
  }
  return r;
}

inline SuiteResult product_criterion_suite(std::uint64_t seed, int n) {
  SuiteResult r{"products: G2G1 outer iff QP projector, inner iff PQ projector"};
  InstanceGen gen(seed);
  for (r.instances = 0; r.instances < n; ++r.instances) {
    const Index m = gen.dim(), k = gen.dim(), l = gen.dim();
    const MatrixQ t1 = props::operator_matrix(gen, m, k), t2 = props::operator_matrix(gen, k, l);
    const MatrixQ t = t1 * t2;
    {
      const auto [b1, e1] = gen.outer_pair(t1);
      const auto [b2, e2] = gen.outer_pair(t2);
      const MatrixQ g1 = construct_outer<Rational>(t1, b1, e1), g2 = construct_outer<Rational>(t2, b2, e2);
      const MatrixQ p = g1 * t1, q = t2 * g2;
      const bool outer = verify<Rational>(t, MatrixQ(g2 * g1)).outer;
      r.expect(outer == is_idempotent<Rational>(MatrixQ(q * p)), "outer <=> QP idempotent");
      if (outer) ++r.positives;
    }
    {
      const MatrixQ g1 = gen.inner_inverse(t1), g2 = gen.inner_inverse(t2);
      const MatrixQ p = g1 * t1, q = t2 * g2;
      const bool inner = verify<Rational>(t, MatrixQ(g2 * g1)).inner;
      r.expect(inner == is_idempotent<Rational>(MatrixQ(p * q)), "inner <=> PQ idempotent");
    }
  }
  return r;
}

inline SuiteResult composition_kernel_suite(std::uint64_t seed, int n) {
  SuiteResult r{"kernels and images of compositions with projectors"};
  InstanceGen gen(seed);
  for (r.instances = 0; r.instances < n; ++r.instances) {
    const Index rows = gen.dim(), cols = gen.dim();
    const MatrixQ t = gen.matrix(rows, cols);
    const auto q = gen.projector(cols);
    const auto p = gen.projector(rows);
    const auto ker_t = kernel<Rational>(t);
    const auto left = intersect(ker_t, q.image);
    r.expect(is_direct(left, q.kernel), "Ker TQ sum is direct");
    r.expect(kernel<Rational>(MatrixQ(t * q.matrix)) == left + q.kernel, "Ker TQ");
    r.expect(range<Rational>(MatrixQ(p.matrix * t)) == ((range<Rational>(t) + p.kernel) & p.image), "Im PT");

    const Index l = gen.dim();
    const MatrixQ t2 = gen.matrix(cols, l);
    const MatrixQ g2 = gen.inner_inverse(t2);
    const auto w1 = gen.subspace(rows);
    r.expect(composition_preimage<Rational>(t, g2, t2, w1) == preimage(MatrixQ(t * t2), w1), "(T1T2)^-1(W1)");
  }
  return r;
}

inline SuiteResult projector_product_suite(std::uint64_t seed, int n) {
  SuiteResult r{"projector products: five conditions, image/kernel criteria, commutation, duality"};
  InstanceGen gen(seed);
  for (r.instances = 0; r.instances < n; ++r.instances) {
    const Index dim = gen.dim();
    const auto p = gen.projector(dim);
    Projector<Rational> q;
    switch (gen.uniform(0, 2)) {
      case 0: q = gen.projector(dim); break;
      case 1: {
        // image built from pieces of Im P and Ker P
        const auto im = props::random_subspace_of(gen, p.image) + props::random_subspace_of(gen, p.kernel);
        q = projector(im, gen.complement(im));
        break;
      }
      default: {
        const auto ker = props::random_subspace_of(gen, p.image) + props::random_subspace_of(gen, p.kernel);
        q = projector(gen.complement(ker), ker);
      }
    }
    const auto c = projector_product_classify(p, q);
    bool agree = true;
    for (bool b : c.conditions) agree = agree && b == c.is_projector;
    r.expect(agree, "five conditions agree with idempotency of PQ");
    if (c.is_projector) ++r.positives;
    const MatrixQ pq = p.matrix * q.matrix;
    r.expect(c.img_cap == (c.is_projector && range<Rational>(pq) == (p.image & q.image)), "Im PQ = Im P cap Im Q");
    r.expect(c.ker_sum == (c.is_projector && kernel<Rational>(pq) == p.kernel + q.kernel), "Ker PQ = Ker P + Ker Q");
    r.expect(c.commute == c.commute_direct, "commutation criterion");

    // Transposes: Im P^T = (Ker P) perp and Ker P^T = (Im P) perp, as row spaces.
    const auto pt = Projector<Rational>::from_matrix(MatrixQ(p.matrix.transpose()));
    const auto qt = Projector<Rational>::from_matrix(MatrixQ(q.matrix.transpose()));
    const auto direct = product_conditions(p.image, p.kernel, q.image, q.kernel);
    const auto dual = product_conditions(qt.image, qt.kernel, pt.image, pt.kernel);
    r.expect(direct.iv.holds == dual.ii.holds, "(iv) on (P,Q) = (ii) on (Q^T,P^T)");
    r.expect(direct.v.holds == dual.iii.holds, "(v) on (P,Q) = (iii) on (Q^T,P^T)");
    const auto dual_sp = product_conditions(orthogonal(q.kernel), orthogonal(q.image), orthogonal(p.kernel),
                                            orthogonal(p.image));
    r.expect(dual_sp.ii.holds == direct.iv.holds && dual_sp.iii.holds == direct.v.holds,
             "same statement on dual subspaces");
  }
  r.expect(r.positives > 0 && r.positives < r.instances, "both outcomes exercised");
  return r;
}

inline SuiteResult outer_rol_suite(std::uint64_t seed, int n) {
  SuiteResult r{"outer reverse order law: five conditions, direct test, finite-data form"};
  InstanceGen gen(seed);
  for (r.instances = 0; r.instances < n; ++r.instances) {
    const Index m = gen.dim(), k = gen.dim(), l = gen.dim();
    const MatrixQ t1 = props::operator_matrix(gen, m, k), t2 = props::operator_matrix(gen, k, l);
    const auto [b1, e1] = gen.outer_pair(t1);
    const auto [b2, e2] = gen.outer_pair(t2);
    const auto rep = rol_outer_check(t1, t2, b1, e1, b2, e2);
    r.expect(rep.consistent, "five conditions agree");
    const MatrixQ g = construct_outer<Rational>(t2, b2, e2) * construct_outer<Rational>(t1, b1, e1);
    r.expect(verify<Rational>(MatrixQ(t1 * t2), g).outer == rep.verdict, "verdict = direct identity");
    if (rep.verdict) ++r.positives;

    const auto fr = fredholm_rol_outer_check(orthogonal(image(t2, b2)), preimage(t1, e1), orthogonal(b1), e2, b1);
    r.expect(fr.consistent && fr.verdict == rep.verdict, "finite-data conditions agree");
  }
  r.expect(r.positives > 0 && r.positives < r.instances, "both outcomes exercised");
  return r;
}

inline SuiteResult inner_rol_suite(std::uint64_t seed, int n) {
  SuiteResult r{"inner reverse order law: five conditions, direct test with non-reflexive factors"};
  InstanceGen gen(seed);
  for (r.instances = 0; r.instances < n; ++r.instances) {
    const Index m = gen.dim(), k = gen.dim(), l = gen.dim();
    MatrixQ t1 = props::operator_matrix(gen, m, k);
    if (gen.coin(0.2) && m >= k) t1 = gen.full_matrix(m, k);
    const MatrixQ t2 = props::operator_matrix(gen, k, l);
    const auto b1 = gen.complement(kernel<Rational>(t1));
    const auto e2 = gen.complement(range<Rational>(t2));
    const auto rep = rol_inner_check(t1, t2, b1, e2);
    r.expect(rep.consistent, "five conditions agree");
    if (rep.verdict) ++r.positives;
    // Any G1 in I(T1, B1, .) and G2 in I(T2, ., E2) gives the same answer.
    for (int s = 0; s < 2; ++s) {
      const MatrixQ g1 = construct_inner<Rational>(t1, b1, gen.complement(range<Rational>(t1)),
                                                   gen.full_matrix(t1.cols(), t1.rows() - rank<Rational>(t1)));
      const MatrixQ g2 = props::inner_inverse_in(gen, t2, gen.complement(kernel<Rational>(t2)), e2);
      const MatrixQ t = t1 * t2;
      r.expect(verify<Rational>(t, MatrixQ(g2 * g1)).inner == rep.verdict, "verdict = direct identity");
    }
  }
  r.expect(r.positives > 0 && r.positives < r.instances, "both outcomes exercised");
  return r;
}

inline SuiteResult construction_suite(std::uint64_t seed, int n) {
  SuiteResult r{"constructive existence: both checks pass, product reflexive"};
  InstanceGen gen(seed);
  for (r.instances = 0; r.instances < n; ++r.instances) {
    const Index m = gen.dim(), k = gen.dim(), l = gen.dim();
    const MatrixQ t1 = props::operator_matrix(gen, m, k), t2 = props::operator_matrix(gen, k, l);
    const auto c = rol_construct(t1, t2);
    r.expect(rol_outer_check(t1, t2, c.b1, c.e1, c.b2, c.e2).verdict, "outer check");
    r.expect(rol_inner_check(t1, t2, c.b1, c.e2).verdict, "inner check");
    const MatrixQ g = construct_reflexive<Rational>(t2, c.b2, c.e2) * construct_reflexive<Rational>(t1, c.b1, c.e1);
    r.expect(verify<Rational>(MatrixQ(t1 * t2), g).reflexive, "G2G1 reflexive");
  }
  return r;
}

inline SuiteResult implicit_product_suite(std::uint64_t seed, int n) {
  SuiteResult r{"implicit product equals explicit product"};
  InstanceGen gen(seed);
  for (r.instances = 0; r.instances < n; ++r.instances) {
    const Index m = gen.dim(), k = gen.dim(), l = gen.dim();
    const MatrixQ t1 = props::operator_matrix(gen, m, k), t2 = props::operator_matrix(gen, k, l);
    auto [b1, e1] = gen.outer_pair(t1);
    auto [b2, e2] = gen.outer_pair(t2);
    if (gen.coin()) {
      // bias towards instances where the law holds
      const auto c = rol_construct(t1, t2);
      b1 = c.b1, e1 = c.e1, b2 = c.b2, e2 = c.e2;
    }
    const bool holds = rol_outer_check(t1, t2, b1, e1, b2, e2).verdict;
    try {
      const auto ip = product_implicit(t1, t2, orthogonal(b1), e1, orthogonal(b2), e2);
      r.expect(holds, "product_implicit returned although the law fails");
      ++r.positives;
      const MatrixQ g = construct_outer<Rational>(t2, b2, e2) * construct_outer<Rational>(t1, b1, e1);
      r.expect(range<Rational>(g) == orthogonal(ip.image_perp), "image");
      r.expect(kernel<Rational>(g) == ip.kernel, "kernel");
      r.expect(same<Rational>(construct_outer<Rational>(MatrixQ(t1 * t2), orthogonal(ip.image_perp), ip.kernel), g),
               "matrix");
    } catch (const RolFailure&) {
      r.expect(!holds, "RolFailure although the law holds");
    }
  }
  r.expect(r.positives > 0, "no instance passed the checker");
  return r;
}

inline SuiteResult transpose_inverse_suite(std::uint64_t seed, int n) {
  SuiteResult r{"G outer/inner for T iff G^T outer/inner for T^T"};
  InstanceGen gen(seed);
  for (r.instances = 0; r.instances < n; ++r.instances) {
    const MatrixQ t = gen.matrix(gen.dim(), gen.dim());
    MatrixQ g;
    switch (gen.uniform(0, 2)) {
      case 0: {
        const auto [b, e] = gen.outer_pair(t);
        g = construct_outer<Rational>(t, b, e);
        break;
      }
      case 1: g = gen.inner_inverse(t); break;
      default: g = gen.matrix(t.cols(), t.rows());
    }
    const auto a = verify<Rational>(t, g);
    const auto b = verify<Rational>(MatrixQ(t.transpose()), MatrixQ(g.transpose()));
    r.expect(a.outer == b.outer && a.inner == b.inner, "transpose preserves kind");
    if (a.inner || a.outer) ++r.positives;
  }
  return r;
}

/// All inner inverse pairs: predicate true => 50 sampled pairs satisfy the
/// product identity; false => a violating pair within 200 samples.
inline SuiteResult all_inner_suite(std::uint64_t seed, int n) {
  SuiteResult r{"every inner inverse pair vs T1T2 = 0 or Ker T1 <= Im T2"};
  InstanceGen gen(seed);
  for (r.instances = 0; r.instances < n; ++r.instances) {
    const Index m = gen.dim(1, 5), k = gen.dim(1, 5), l = gen.dim(1, 5);
    MatrixQ t1 = gen.matrix(m, k), t2;
    switch (r.instances % 3) {
      case 0: {
        // Ker T1 <= Im T2 by construction
        const MatrixQ cols = detail::hstack<Rational>(kernel<Rational>(t1).basis(), gen.full_matrix(k, gen.uniform(0, 1)));
        t2 = detail::hstack<Rational>(cols, gen.full_matrix(k, gen.uniform(0, 1)));
        break;
      }
      case 1: t2 = gen.matrix(k, l); break;
      default: t2 = gen.full_matrix(k, l);
    }
    const bool predicate = rol_all_inner(t1, t2);
    const MatrixQ t = t1 * t2;
    auto sample_ok = [&] {
      const MatrixQ g = gen.inner_inverse(t2) * gen.inner_inverse(t1);
      return verify<Rational>(t, g).inner;
    };
    if (predicate) {
      ++r.positives;
      bool all = true;
      for (int s = 0; s < 50 && all; ++s) all = sample_ok();
      r.expect(all, "predicate true but a sampled pair violates the identity");
    } else {
      bool found = false;
      for (int s = 0; s < 200 && !found; ++s) found = !sample_ok();
      r.expect(found, "predicate false but no violating pair in 200 samples");
    }
  }
  r.expect(r.positives > 0 && r.positives < r.instances, "both outcomes exercised");
  return r;
}

}  // namespace ginv::testing

#endif  // GINV_TESTS_PROPERTIES_HPP
