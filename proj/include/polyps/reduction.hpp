#ifndef POLYPS_REDUCTION_HPP
#define POLYPS_REDUCTION_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polyps/algebroid.hpp"
#include "polyps/lie_algebra.hpp"
#include "polyps/polypoisson.hpp"

namespace polyps {

/// k-fold product of a subspace of covectors, embedded block-diagonally in
/// covector tuples.
template <class T>
Subspace<T> tuple_power(const Subspace<T>& s, std::size_t k, double eps) {
  return Subspace<T>::span(block_diag(s.basis(), k), eps);
}

/// Pointwise reduction input: the family at the chosen point, the vertical
/// subspace there, and the same data sampled at other points of the manifold.
/// Samples stand in for the subbundle condition, so they must share the
/// shape (m, k, dim W) but carry no further requirements; in particular a
/// sample family may be degenerate.
template <class T>
struct ReductionProblem {
  PolyForm<T> omega;
  Subspace<T> w;
  std::vector<std::pair<PolyForm<T>, Subspace<T>>> samples;
};

template <class T>
struct HypothesesVerdict {
  bool omega_ok = false;     // the family at the point is jointly nondegenerate
  bool dims_ok = false;      // S cap (W-ann)^k has the same dimension at every sample
  bool inclusion_ok = false; // flat preimage of the triple intersection sits inside W
  std::size_t dim_at_point = 0;
  std::optional<std::size_t> offending_sample;
  std::size_t offending_dim = 0;
  std::vector<T> witness;  // vector outside W violating the inclusion
  bool ok() const { return omega_ok && dims_ok && inclusion_ok; }
};

template <class T>
HypothesesVerdict<T> check_hypotheses(const ReductionProblem<T>& rp, double eps) {
  validate_skew(rp.omega, eps);
  const std::size_t m = rp.omega.m;
  const std::size_t k = rp.omega.k;
  if (rp.w.ambient() != m) throw std::invalid_argument("check_hypotheses: W ambient mismatch");
  for (std::size_t s = 0; s < rp.samples.size(); ++s) {
    const auto& [form, ws] = rp.samples[s];
    if (form.m != m || form.k != k || ws.ambient() != m || ws.dim() != rp.w.dim())
      throw std::invalid_argument("check_hypotheses: sample " + std::to_string(s) +
                                  " does not share the problem shape");
    validate_skew(form, eps);
  }

  HypothesesVerdict<T> v;
  v.omega_ok = is_polysymplectic(rp.omega, eps).ok;

  const auto cap_dim = [eps, k](const PolyForm<T>& form, const Subspace<T>& w) {
    const Subspace<T> s = Subspace<T>::span(flat_matrix(form).transpose(), eps);
    return intersect(s, tuple_power(annihilator(w, eps), k, eps), eps).dim();
  };
  v.dim_at_point = cap_dim(rp.omega, rp.w);
  v.dims_ok = true;
  for (std::size_t s = 0; s < rp.samples.size(); ++s) {
    const std::size_t ds = cap_dim(rp.samples[s].first, rp.samples[s].second);
    if (ds != v.dim_at_point) {
      v.dims_ok = false;
      v.offending_sample = s;
      v.offending_dim = ds;
      break;
    }
  }

  v.inclusion_ok = true;
  if (v.omega_ok) {
    const Mat<T> flat = flat_matrix(rp.omega);
    const Subspace<T> s = Subspace<T>::span(flat.transpose(), eps);
    const Subspace<T> scap = intersect(s, tuple_power(annihilator(rp.w, eps), k, eps), eps);
    const Subspace<T> wperp = poly_orthogonal(rp.omega, rp.w, eps);
    const Subspace<T> triple =
        intersect(scap, tuple_power(annihilator(wperp, eps), k, eps), eps);
    const Subspace<T> pre = preimage(flat, triple, eps);
    for (std::size_t i = 0; i < pre.dim(); ++i)
      if (!rp.w.contains(pre.basis().row(i), eps)) {
        v.inclusion_ok = false;
        v.witness = pre.basis().row(i);
        break;
      }
  } else {
    v.inclusion_ok = false;
  }
  return v;
}

/// Output of a pointwise reduction: the coordinate quotient by W, the
/// poly-orthogonal of W, the two diagnostic intersections, and the reduced
/// structure on the quotient.
template <class T>
struct ReducedStructure {
  Quotient<T> quot;
  Subspace<T> w_perp;    // inside R^m
  Subspace<T> s_cap;     // S cap (W-ann)^k, in ambient tuples
  Subspace<T> s_triple;  // s_cap cut down to (W-perp-ann)^k
  PolyPoissonPoint<T> pp;
};

/// Reduces the family at the point by the vertical subspace. The reduced
/// subspace consists of quotient covector tuples whose pullbacks land in S;
/// its sharp is projection of the flat inverse of the pullback. The image of
/// the reduced sharp equals the projection of W-perp, asserted internally.
template <class T>
ReducedStructure<T> reduce_point(const ReductionProblem<T>& rp, double eps) {
  const HypothesesVerdict<T> hv = check_hypotheses(rp, eps);
  if (!hv.omega_ok)
    throw std::invalid_argument("reduce_point: family at the point is degenerate");
  if (!hv.dims_ok)
    throw std::invalid_argument("reduce_point: intersection dimension jumps at sample " +
                                std::to_string(*hv.offending_sample));
  if (!hv.inclusion_ok)
    throw std::invalid_argument("reduce_point: flat preimage of the triple intersection "
                                "leaves the vertical subspace");

  const std::size_t m = rp.omega.m;
  const std::size_t k = rp.omega.k;
  const Mat<T> flat = flat_matrix(rp.omega);
  const Subspace<T> s = Subspace<T>::span(flat.transpose(), eps);

  ReducedStructure<T> red;
  red.quot = quotient(m, rp.w, eps);
  red.w_perp = poly_orthogonal(rp.omega, rp.w, eps);
  red.s_cap = intersect(s, tuple_power(annihilator(rp.w, eps), k, eps), eps);
  red.s_triple = intersect(red.s_cap, tuple_power(annihilator(red.w_perp, eps), k, eps), eps);

  const Mat<T> pullback = block_diag(red.quot.projection.transpose(), k);
  red.pp.m = red.quot.dim;
  red.pp.k = k;
  red.pp.S = preimage(pullback, s, eps);
  if (red.pp.S.dim() != red.s_cap.dim())
    throw std::runtime_error("reduce_point: reduced subspace dimension mismatch");
  red.pp.sharp = Mat<T>(red.quot.dim, red.pp.S.dim());
  for (std::size_t j = 0; j < red.pp.S.dim(); ++j) {
    const std::vector<T> pulled = pullback.apply(red.pp.S.basis().row(j));
    std::vector<T> x;
    if (!solve(flat, pulled, x, eps))
      throw std::runtime_error("reduce_point: pulled-back tuple left the flat image");
    red.pp.sharp.set_col(j, red.quot.projection.apply(x));
  }
  red.pp.integrability = IntegrabilityStatus::Structural;
  if (!check_axioms(red.pp, eps).ok())
    throw std::runtime_error("reduce_point: axiom check failed on the quotient");
  {
    const Subspace<T> im = characteristic_distribution(red.pp, eps);
    const Subspace<T> projected = image(red.quot.projection, red.w_perp, eps);
    if (!(im == projected) && !im.equals(projected, eps))
      throw std::runtime_error("reduce_point: reduced image differs from projected W-perp");
  }
  return red;
}

// ============================================================
// Group-model constructions (exact)
// ============================================================

/// Left-trivialized family on g + (g*)^k at the covector tuple mu:
/// w^A((xi1, t1), (xi2, t2)) = t2_A(xi1) - t1_A(xi2) + mu_A([xi1, xi2]).
PolyForm<Q> group_covelocity_form(const LieAlgebra& g, std::size_t k,
                                  const std::vector<std::vector<Q>>& mu);

struct CotangentGroupResult {
  ReductionProblem<Q> problem;
  HypothesesVerdict<Q> hyps;
  ReducedStructure<Q> red;
  bool flat_formula_ok = false;   // closed-form flat expression matches the flat map
  bool diag_cap_ok = false;       // S cap (W-ann)^k is the diagonal block
  bool isotropy_ok = false;       // triple intersection is the joint isotropy diagonal
};

/// Reduction of the group covelocity model at the identity over mu, with
/// deterministic sample points drawn from the seed. Requires a Jacobi-valid
/// algebra.
CotangentGroupResult cotangent_group(const LieAlgebra& g, std::size_t k,
                                     const std::vector<std::vector<Q>>& mu,
                                     std::size_t nsamples, unsigned long seed);

struct GstarComparison {
  bool s_equal = false;
  int ratio = 0;          // reduced sharp over the dual-copies sharp, a single sign
  bool zero_sharp = false;  // both sharps vanish, so any constant fits
};

/// The reduced structure lives on quotient coordinates that are literally the
/// k dual copies, so the comparison is entrywise.
GstarComparison compare_with_gstar(const CotangentGroupResult& r, const LieAlgebra& g,
                                   std::size_t k, const std::vector<std::vector<Q>>& mu);

struct PrincipalLocalResult {
  ReducedStructure<Q> red;         // on coordinates (x, P^1..P^k, tau^1..tau^k)
  Subspace<Q> s_transported;       // reduced S in fibre-major coordinates
  Mat<Q> sharp_transported;
  WhitneyPoint whitney;            // gauge-algebroid structure at (P, mu)
  bool s_match = false;
  int measured_ratio = 0;          // whitney sharp over transported reduced sharp
  bool zero_sharp = false;         // both sharps vanish, so any constant fits
  bool matches_recorded_sigma = false;
  bool frame_point = false;        // fibre values form a frame when k equals the rank
};

/// Local model of a trivial principal bundle over R^m_base: the product of
/// the canonical covelocity family with the group model, reduced by the
/// group directions, then compared against the gauge-algebroid Whitney sum
/// at the matching point. pvals holds the k base covelocity values
/// (copy-major), mu the k group covector values.
PrincipalLocalResult covelocity_principal_local(const LieAlgebra& g, std::size_t m_base,
                                                std::size_t k, const std::vector<Q>& pvals,
                                                const std::vector<std::vector<Q>>& mu,
                                                std::size_t nsamples, unsigned long seed);

}  // namespace polyps

#endif
