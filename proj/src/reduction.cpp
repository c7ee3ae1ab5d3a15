#include "polyps/reduction.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "polyps/conventions.hpp"

namespace polyps {

namespace {

std::vector<std::vector<Q>> random_covectors(std::size_t k, std::size_t n,
                                             std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<std::vector<Q>> out(k, std::vector<Q>(n));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t i = 0; i < n; ++i) {
      Q q(num(rng), den(rng));
      q.canonicalize();
      out[a][i] = q;
    }
  return out;
}

void validate_mu(const LieAlgebra& g, std::size_t k, const std::vector<std::vector<Q>>& mu,
                 const char* who) {
  if (mu.size() != k) throw std::invalid_argument(std::string(who) + ": expected k covectors");
  for (const auto& m : mu)
    if (m.size() != g.dim())
      throw std::invalid_argument(std::string(who) + ": covector length mismatch");
}

/// Closed-form flat of the group model: per component A the covector part is
/// N(mu_A) xi - tau_A and the vector part is xi placed in copy A.
std::vector<Q> group_flat_formula(const LieAlgebra& g, std::size_t k,
                                  const std::vector<std::vector<Q>>& mu,
                                  const std::vector<Q>& x) {
  const std::size_t n = g.dim();
  const std::size_t v = n * (1 + k);
  const std::vector<Q> xi(x.begin(), x.begin() + n);
  std::vector<Q> tup(k * v, Q(0));
  for (std::size_t a = 0; a < k; ++a) {
    const std::vector<Q> nxi = coadjoint_matrix(g, mu[a]).apply(xi);
    for (std::size_t j = 0; j < n; ++j)
      tup[a * v + j] = nxi[j] - x[n + a * n + j];
    for (std::size_t j = 0; j < n; ++j) tup[a * v + n + a * n + j] = xi[j];
  }
  return tup;
}

}  // namespace

PolyForm<Q> group_covelocity_form(const LieAlgebra& g, std::size_t k,
                                  const std::vector<std::vector<Q>>& mu) {
  validate_mu(g, k, mu, "group_covelocity_form");
  const std::size_t n = g.dim();
  const std::size_t v = n * (1 + k);
  PolyForm<Q> pf;
  pf.m = v;
  pf.k = k;
  pf.closedness = PolyForm<Q>::Closedness::ConstantAuto;
  for (std::size_t a = 0; a < k; ++a) {
    Mat<Q> w(v, v);
    w.set_block(0, 0, coadjoint_matrix(g, mu[a]).transpose());
    for (std::size_t i = 0; i < n; ++i) {
      w(i, n + a * n + i) = Q(1);
      w(n + a * n + i, i) = Q(-1);
    }
    pf.forms.push_back(std::move(w));
  }
  return pf;
}

CotangentGroupResult cotangent_group(const LieAlgebra& g, std::size_t k,
                                     const std::vector<std::vector<Q>>& mu,
                                     std::size_t nsamples, unsigned long seed) {
  validate_mu(g, k, mu, "cotangent_group");
  const JacobiVerdict jv = jacobi_check(g);
  if (!jv.ok)
    throw std::invalid_argument("cotangent_group: bracket table fails Jacobi on (" +
                                std::to_string(jv.a) + "," + std::to_string(jv.b) + "," +
                                std::to_string(jv.c) + ")");
  const std::size_t n = g.dim();
  const std::size_t v = n * (1 + k);

  CotangentGroupResult res;
  res.problem.omega = group_covelocity_form(g, k, mu);
  Mat<Q> wb(n, v);
  for (std::size_t i = 0; i < n; ++i) wb(i, i) = Q(1);
  res.problem.w = Subspace<Q>::span(wb, 0.0);

  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < nsamples; ++s) {
    const auto nu = random_covectors(k, n, rng);
    res.problem.samples.emplace_back(group_covelocity_form(g, k, nu), res.problem.w);
  }

  res.hyps = check_hypotheses(res.problem, 0.0);
  res.red = reduce_point(res.problem, 0.0);

  res.flat_formula_ok = true;
  for (std::size_t r = 0; r < v && res.flat_formula_ok; ++r) {
    std::vector<Q> e(v, Q(0));
    e[r] = Q(1);
    res.flat_formula_ok = (flat_apply(res.problem.omega, e) == group_flat_formula(g, k, mu, e));
  }

  Mat<Q> diag(n, k * v);
  for (std::size_t al = 0; al < n; ++al)
    for (std::size_t a = 0; a < k; ++a) diag(al, a * v + n + a * n + al) = Q(1);
  res.diag_cap_ok = (Subspace<Q>::span(diag, 0.0) == res.red.s_cap);

  Mat<Q> stacked(k * n, n);
  for (std::size_t a = 0; a < k; ++a)
    stacked.set_block(a * n, 0, coadjoint_matrix(g, mu[a]));
  const Mat<Q> joint = nullspace(stacked, 0.0);
  Mat<Q> iso(joint.rows(), k * v);
  for (std::size_t r = 0; r < joint.rows(); ++r)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t j = 0; j < n; ++j) iso(r, a * v + n + a * n + j) = joint(r, j);
  res.isotropy_ok = (Subspace<Q>::span(iso, 0.0) == res.red.s_triple);
  return res;
}

GstarComparison compare_with_gstar(const CotangentGroupResult& r, const LieAlgebra& g,
                                   std::size_t k, const std::vector<std::vector<Q>>& mu) {
  const PolyPoissonPoint<Q> gs = gstar_k(g, k, mu);
  GstarComparison c;
  c.s_equal = (r.red.pp.S == gs.S);
  if (c.s_equal) {
    if (is_zero_matrix(r.red.pp.sharp, 0.0) && is_zero_matrix(gs.sharp, 0.0)) {
      c.zero_sharp = true;
    } else {
      try {
        c.ratio = sign_ratio(r.red.pp.sharp, gs.sharp);
      } catch (const std::runtime_error&) {
        c.ratio = 0;
      }
    }
  }
  return c;
}

PrincipalLocalResult covelocity_principal_local(const LieAlgebra& g, std::size_t m_base,
                                                std::size_t k, const std::vector<Q>& pvals,
                                                const std::vector<std::vector<Q>>& mu,
                                                std::size_t nsamples, unsigned long seed) {
  validate_mu(g, k, mu, "covelocity_principal_local");
  if (pvals.size() != k * m_base)
    throw std::invalid_argument("covelocity_principal_local: expected k*m_base base values");
  const JacobiVerdict jv = jacobi_check(g);
  if (!jv.ok)
    throw std::invalid_argument("covelocity_principal_local: bracket table fails Jacobi");
  const std::size_t n = g.dim();
  const std::size_t base_dim = m_base * (1 + k);
  const PolyForm<Q> base = canonical_covelocity<Q>(m_base, k);

  ReductionProblem<Q> problem;
  problem.omega = product_polyform(base, group_covelocity_form(g, k, mu));
  Mat<Q> wb(n, base_dim + n * (1 + k));
  for (std::size_t i = 0; i < n; ++i) wb(i, base_dim + i) = Q(1);
  problem.w = Subspace<Q>::span(wb, 0.0);
  std::mt19937_64 rng(seed);
  for (std::size_t s = 0; s < nsamples; ++s) {
    const auto nu = random_covectors(k, n, rng);
    problem.samples.emplace_back(product_polyform(base, group_covelocity_form(g, k, nu)),
                                 problem.w);
  }

  PrincipalLocalResult res;
  res.red = reduce_point(problem, 0.0);
  const std::size_t dq = res.red.quot.dim;
  if (dq != base_dim + k * n)
    throw std::runtime_error("covelocity_principal_local: unexpected quotient dimension");

  const std::size_t fibre = m_base + n;
  std::vector<Q> p(k * fibre, Q(0));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t i = 0; i < m_base; ++i) p[a * fibre + i] = pvals[a * m_base + i];
    for (std::size_t j = 0; j < n; ++j) p[a * fibre + m_base + j] = mu[a][j];
  }
  res.whitney = whitney_point(AlgebroidPointData::atiyah_trivialized(g, m_base), k, p);
  res.frame_point = (k == fibre) && is_frame(fibre, p);

  // Quotient coordinates come out grouped (x, P^1..P^k, tau^1..tau^k); the
  // Whitney sum interleaves per copy as (x, (P^A, tau^A)_A).
  Mat<Q> pi(dq, dq);
  for (std::size_t i = 0; i < m_base; ++i) pi(i, i) = Q(1);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t j = 0; j < m_base; ++j)
      pi(m_base + a * fibre + j, m_base + a * m_base + j) = Q(1);
    for (std::size_t j = 0; j < n; ++j)
      pi(m_base + a * fibre + m_base + j, m_base + k * m_base + a * n + j) = Q(1);
  }
  const Mat<Q> tuples = block_diag(pi, k);
  res.s_transported = image(tuples, res.red.pp.S, 0.0);
  res.sharp_transported = Mat<Q>(dq, res.s_transported.dim());
  for (std::size_t j = 0; j < res.s_transported.dim(); ++j) {
    const std::vector<Q> back = tuples.transpose().apply(res.s_transported.basis().row(j));
    res.sharp_transported.set_col(j, pi.apply(sharp_of(res.red.pp, back, 0.0)));
  }

  res.s_match = (res.s_transported == res.whitney.pp.S);
  if (res.s_match) {
    if (is_zero_matrix(res.whitney.pp.sharp, 0.0) &&
        is_zero_matrix(res.sharp_transported, 0.0)) {
      res.zero_sharp = true;
    } else {
      try {
        res.measured_ratio = sign_ratio(res.whitney.pp.sharp, res.sharp_transported);
      } catch (const std::runtime_error&) {
        res.measured_ratio = 0;
      }
    }
  }
  res.matches_recorded_sigma =
      res.s_match && (res.zero_sharp || res.measured_ratio == recorded_sigma());
  return res;
}

}  // namespace polyps
