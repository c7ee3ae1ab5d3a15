#include "polyps/algebroid.hpp"

#include <stdexcept>
#include <string>

#include "polyps/coadjoint.hpp"
#include "polyps/section_algebra.hpp"

namespace polyps {

namespace {

std::vector<Q> zero_vec(std::size_t n) { return std::vector<Q>(n, Q(0)); }

}  // namespace

AlgebroidPointData AlgebroidPointData::from_lie_algebra(const LieAlgebra& g) {
  AlgebroidPointData d;
  d.m = 0;
  d.n = g.dim();
  d.rho = Mat<Q>(0, d.n);
  d.c.assign(d.n * d.n * d.n, Q(0));
  for (std::size_t gamma = 0; gamma < d.n; ++gamma)
    for (std::size_t alpha = 0; alpha < d.n; ++alpha)
      for (std::size_t beta = 0; beta < d.n; ++beta)
        d.c[(gamma * d.n + alpha) * d.n + beta] = g.c(gamma, alpha, beta);
  return d;
}

AlgebroidPointData AlgebroidPointData::trivial_tangent(std::size_t m) {
  AlgebroidPointData d;
  d.m = m;
  d.n = m;
  d.rho = Mat<Q>::identity(m);
  d.drho.assign(m, Mat<Q>(m, m));
  d.c.assign(m * m * m, Q(0));
  d.dc.assign(m, std::vector<Q>(m * m * m, Q(0)));
  return d;
}

AlgebroidPointData AlgebroidPointData::atiyah_trivialized(const LieAlgebra& g,
                                                          std::size_t m_base) {
  AlgebroidPointData d;
  d.m = m_base;
  d.n = m_base + g.dim();
  d.rho = Mat<Q>(m_base, d.n);
  for (std::size_t i = 0; i < m_base; ++i) d.rho(i, i) = 1;
  d.drho.assign(m_base, Mat<Q>(m_base, d.n));
  d.c.assign(d.n * d.n * d.n, Q(0));
  for (std::size_t gamma = 0; gamma < g.dim(); ++gamma)
    for (std::size_t alpha = 0; alpha < g.dim(); ++alpha)
      for (std::size_t beta = 0; beta < g.dim(); ++beta)
        d.c[((gamma + m_base) * d.n + alpha + m_base) * d.n + beta + m_base] =
            g.c(gamma, alpha, beta);
  d.dc.assign(m_base, std::vector<Q>(d.n * d.n * d.n, Q(0)));
  return d;
}

void validate(const AlgebroidPointData& d) {
  if (d.rho.rows() != d.m || d.rho.cols() != d.n)
    throw std::invalid_argument("algebroid data: anchor shape mismatch");
  if (d.drho.size() != d.m)
    throw std::invalid_argument("algebroid data: drho must have one matrix per base coordinate");
  for (const Mat<Q>& dm : d.drho)
    if (dm.rows() != d.m || dm.cols() != d.n)
      throw std::invalid_argument("algebroid data: drho entry shape mismatch");
  if (d.c.size() != d.n * d.n * d.n)
    throw std::invalid_argument("algebroid data: structure function size mismatch");
  if (d.dc.size() != d.m)
    throw std::invalid_argument("algebroid data: dc must have one table per base coordinate");
  for (const std::vector<Q>& t : d.dc)
    if (t.size() != d.n * d.n * d.n)
      throw std::invalid_argument("algebroid data: dc entry size mismatch");
  for (std::size_t gamma = 0; gamma < d.n; ++gamma)
    for (std::size_t alpha = 0; alpha < d.n; ++alpha)
      for (std::size_t beta = 0; beta <= alpha; ++beta) {
        if (d.cval(gamma, alpha, beta) != -d.cval(gamma, beta, alpha))
          throw std::invalid_argument("algebroid data: structure functions not antisymmetric at (" +
                                      std::to_string(alpha) + ", " + std::to_string(beta) + ")");
        for (std::size_t j = 0; j < d.m; ++j)
          if (d.dcval(j, gamma, alpha, beta) != -d.dcval(j, gamma, beta, alpha))
            throw std::invalid_argument("algebroid data: structure function derivatives not "
                                        "antisymmetric at (" +
                                        std::to_string(alpha) + ", " + std::to_string(beta) + ")");
      }
}

Mat<Q> structure_matrix(const AlgebroidPointData& d, const std::vector<Q>& p) {
  if (p.size() != d.n) throw std::invalid_argument("structure_matrix: fibre value size mismatch");
  Mat<Q> nmat(d.n, d.n);
  for (std::size_t beta = 0; beta < d.n; ++beta)
    for (std::size_t alpha = 0; alpha < d.n; ++alpha) {
      Q v(0);
      for (std::size_t gamma = 0; gamma < d.n; ++gamma) v += d.cval(gamma, alpha, beta) * p[gamma];
      nmat(beta, alpha) = v;
    }
  return nmat;
}

StructureEquationsVerdict structure_equations_check(const AlgebroidPointData& d) {
  validate(d);
  StructureEquationsVerdict v;
  for (std::size_t alpha = 0; alpha < d.n && v.anchor_ok; ++alpha)
    for (std::size_t beta = 0; beta < d.n && v.anchor_ok; ++beta)
      for (std::size_t j = 0; j < d.m; ++j) {
        Q lhs(0);
        for (std::size_t i = 0; i < d.m; ++i)
          lhs += d.rho(i, alpha) * d.drho[i](j, beta) - d.rho(i, beta) * d.drho[i](j, alpha);
        Q rhs(0);
        for (std::size_t gamma = 0; gamma < d.n; ++gamma)
          rhs += d.rho(j, gamma) * d.cval(gamma, alpha, beta);
        if (lhs != rhs) {
          v.anchor_ok = false;
          v.alpha = alpha;
          v.beta = beta;
          v.index = j;
          v.lhs = lhs;
          v.rhs = rhs;
          break;
        }
      }
  for (std::size_t alpha = 0; alpha < d.n && v.jacobi_ok; ++alpha)
    for (std::size_t beta = 0; beta < d.n && v.jacobi_ok; ++beta)
      for (std::size_t gamma = 0; gamma < d.n && v.jacobi_ok; ++gamma)
        for (std::size_t nu = 0; nu < d.n; ++nu) {
          Q acc(0);
          const std::size_t cyc[3][3] = {{alpha, beta, gamma},
                                         {beta, gamma, alpha},
                                         {gamma, alpha, beta}};
          for (const auto& abc : cyc) {
            for (std::size_t i = 0; i < d.m; ++i)
              acc += d.rho(i, abc[0]) * d.dcval(i, nu, abc[1], abc[2]);
            for (std::size_t mu = 0; mu < d.n; ++mu)
              acc += d.cval(nu, abc[0], mu) * d.cval(mu, abc[1], abc[2]);
          }
          if (sgn(acc) != 0) {
            v.jacobi_ok = false;
            v.alpha = alpha;
            v.beta = beta;
            v.gamma = gamma;
            v.index = nu;
            v.lhs = acc;
            v.rhs = Q(0);
            break;
          }
        }
  return v;
}

Mat<Q> linear_poisson_sharp(const AlgebroidPointData& d, const std::vector<Q>& p) {
  validate(d);
  const Mat<Q> nmat = structure_matrix(d, p);
  Mat<Q> sharp(d.m + d.n, d.m + d.n);
  for (std::size_t i = 0; i < d.m; ++i)
    for (std::size_t beta = 0; beta < d.n; ++beta) {
      sharp(i, d.m + beta) = -d.rho(i, beta);
      sharp(d.m + beta, i) = d.rho(i, beta);
    }
  for (std::size_t beta = 0; beta < d.n; ++beta)
    for (std::size_t gamma = 0; gamma < d.n; ++gamma)
      sharp(d.m + beta, d.m + gamma) = -nmat(beta, gamma);
  return sharp;
}

ProjectabilityVerdict projectability_test(const AlgebroidPointData& d,
                                          const std::vector<Q>& p1, const std::vector<Q>& alpha1,
                                          const std::vector<Q>& p2, const std::vector<Q>& alpha2) {
  if (alpha1.size() != d.m + d.n || alpha2.size() != d.m + d.n)
    throw std::invalid_argument("projectability_test: covector size mismatch");
  ProjectabilityVerdict v;
  const std::vector<Q> u1 = linear_poisson_sharp(d, p1).apply(alpha1);
  const std::vector<Q> u2 = linear_poisson_sharp(d, p2).apply(alpha2);
  v.base_parts_equal = true;
  for (std::size_t i = 0; i < d.m; ++i)
    if (u1[i] != u2[i]) v.base_parts_equal = false;
  // Composite of the fibre part with the vertical lift of a base covector:
  // lambda goes to b . (rho^T lambda), so the composite is rho b.
  v.composites_equal = true;
  for (std::size_t i = 0; i < d.m; ++i) {
    Q c1(0), c2(0);
    for (std::size_t beta = 0; beta < d.n; ++beta) {
      c1 += d.rho(i, beta) * alpha1[d.m + beta];
      c2 += d.rho(i, beta) * alpha2[d.m + beta];
    }
    if (c1 != c2) v.composites_equal = false;
  }
  v.equivalent = v.base_parts_equal == v.composites_equal;
  return v;
}

// ============================================================
// Whitney sum point
// ============================================================

namespace {

struct JetField {
  std::vector<Q> value;  // m + k n components
  Mat<Q> jac;            // d(component)/d(coordinate)
};

std::vector<Q> bracket_at_point(const JetField& x, const JetField& y) {
  std::vector<Q> r = y.jac.apply(x.value);
  const std::vector<Q> s = x.jac.apply(y.value);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= s[i];
  return r;
}

JetField horizontal_generator(const AlgebroidPointData& d, std::size_t k, std::size_t i,
                              std::size_t a) {
  const std::size_t dim = d.m + k * d.n;
  JetField f{zero_vec(dim), Mat<Q>(dim, dim)};
  for (std::size_t beta = 0; beta < d.n; ++beta) {
    f.value[d.m + a * d.n + beta] = d.rho(i, beta);
    for (std::size_t j = 0; j < d.m; ++j) f.jac(d.m + a * d.n + beta, j) = d.drho[j](i, beta);
  }
  return f;
}

JetField vertical_generator(const AlgebroidPointData& d, std::size_t k, const std::vector<Q>& p,
                            std::size_t alpha) {
  const std::size_t dim = d.m + k * d.n;
  JetField f{zero_vec(dim), Mat<Q>(dim, dim)};
  for (std::size_t j = 0; j < d.m; ++j) {
    f.value[j] = d.rho(j, alpha);
    for (std::size_t i = 0; i < d.m; ++i) f.jac(j, i) = d.drho[i](j, alpha);
  }
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t beta = 0; beta < d.n; ++beta) {
      Q v(0);
      for (std::size_t gamma = 0; gamma < d.n; ++gamma)
        v += d.cval(gamma, alpha, beta) * p[b * d.n + gamma];
      f.value[d.m + b * d.n + beta] = v;
      for (std::size_t i = 0; i < d.m; ++i) {
        Q w(0);
        for (std::size_t gamma = 0; gamma < d.n; ++gamma)
          w += d.dcval(i, gamma, alpha, beta) * p[b * d.n + gamma];
        f.jac(d.m + b * d.n + beta, i) = w;
      }
      for (std::size_t gamma = 0; gamma < d.n; ++gamma)
        f.jac(d.m + b * d.n + beta, d.m + b * d.n + gamma) = d.cval(gamma, alpha, beta);
    }
  return f;
}

}  // namespace

WhitneyPoint whitney_point(const AlgebroidPointData& d, std::size_t k, const std::vector<Q>& p) {
  validate(d);
  if (k == 0) throw std::invalid_argument("whitney_point: k must be positive");
  if (p.size() != k * d.n) throw std::invalid_argument("whitney_point: fibre value size mismatch");
  const std::size_t dim = d.m + k * d.n;

  WhitneyPoint wp;
  wp.pp.m = dim;
  wp.pp.k = k;

  // Tuples with components (a^A; b delta^{AB}) over parameters (a^1..a^k, b).
  Mat<Q> param(k * dim, k * d.m + d.n);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t i = 0; i < d.m; ++i) param(a * dim + i, a * d.m + i) = 1;
    for (std::size_t beta = 0; beta < d.n; ++beta)
      param(a * dim + d.m + a * d.n + beta, k * d.m + beta) = 1;
  }
  wp.pp.S = Subspace<Q>::span(param.transpose(), 0.0);
  if (wp.pp.S.dim() != k * d.m + d.n)
    throw std::runtime_error("whitney_point: unexpected S dimension");

  std::vector<Mat<Q>> nmats;
  for (std::size_t a = 0; a < k; ++a)
    nmats.push_back(structure_matrix(d, std::vector<Q>(p.begin() + a * d.n,
                                                       p.begin() + (a + 1) * d.n)));
  wp.pp.sharp = Mat<Q>(dim, wp.pp.S.dim());
  for (std::size_t col = 0; col < wp.pp.S.dim(); ++col) {
    const std::vector<Q> t = wp.pp.S.basis().row(col);
    std::vector<Q> b(d.n);
    for (std::size_t beta = 0; beta < d.n; ++beta) b[beta] = t[d.m + beta];
    std::vector<Q> out(dim, Q(0));
    for (std::size_t i = 0; i < d.m; ++i) {
      Q u(0);
      for (std::size_t beta = 0; beta < d.n; ++beta) u += d.rho(i, beta) * b[beta];
      out[i] = -u;
    }
    for (std::size_t a = 0; a < k; ++a) {
      std::vector<Q> w(d.n, Q(0));
      for (std::size_t beta = 0; beta < d.n; ++beta) {
        Q acc(0);
        for (std::size_t i = 0; i < d.m; ++i) acc += d.rho(i, beta) * t[a * dim + i];
        for (std::size_t gamma = 0; gamma < d.n; ++gamma) acc -= nmats[a](beta, gamma) * b[gamma];
        w[beta] = acc;
      }
      for (std::size_t beta = 0; beta < d.n; ++beta) out[d.m + a * d.n + beta] = w[beta];
    }
    wp.pp.sharp.set_col(col, out);
  }
  wp.pp.integrability = IntegrabilityStatus::Structural;
  if (!check_axioms(wp.pp, 0.0).ok()) throw std::runtime_error("whitney_point: axiom check failed");

  // Generator fields and the three commutator identities at the point.
  std::vector<std::vector<JetField>> h(d.m, std::vector<JetField>(k));
  std::vector<JetField> v(d.n);
  for (std::size_t i = 0; i < d.m; ++i)
    for (std::size_t a = 0; a < k; ++a) {
      h[i][a] = horizontal_generator(d, k, i, a);
      wp.horizontal.push_back(h[i][a].value);
    }
  for (std::size_t alpha = 0; alpha < d.n; ++alpha) {
    v[alpha] = vertical_generator(d, k, p, alpha);
    wp.vertical.push_back(v[alpha].value);
  }

  for (std::size_t i = 0; i < d.m && wp.horizontal_pairs.ok; ++i)
    for (std::size_t a = 0; a < k && wp.horizontal_pairs.ok; ++a)
      for (std::size_t j = 0; j < d.m && wp.horizontal_pairs.ok; ++j)
        for (std::size_t b = 0; b < k; ++b) {
          const std::vector<Q> br = bracket_at_point(h[i][a], h[j][b]);
          for (std::size_t cmp = 0; cmp < dim; ++cmp)
            if (sgn(br[cmp]) != 0) {
              wp.horizontal_pairs = CommutatorVerdict{false, i, a, j, b, cmp};
              break;
            }
          if (!wp.horizontal_pairs.ok) break;
        }

  for (std::size_t i = 0; i < d.m && wp.mixed_pairs.ok; ++i)
    for (std::size_t a = 0; a < k && wp.mixed_pairs.ok; ++a)
      for (std::size_t beta = 0; beta < d.n; ++beta) {
        const std::vector<Q> br = bracket_at_point(h[i][a], v[beta]);
        std::vector<Q> rhs(dim, Q(0));
        for (std::size_t gamma = 0; gamma < d.n; ++gamma) {
          Q acc(0);
          for (std::size_t j = 0; j < d.m; ++j) acc += d.drho[j](i, beta) * d.rho(j, gamma);
          rhs[d.m + a * d.n + gamma] = -acc;
        }
        bool match = true;
        std::size_t bad = 0;
        for (std::size_t cmp = 0; cmp < dim; ++cmp)
          if (br[cmp] != rhs[cmp]) {
            match = false;
            bad = cmp;
            break;
          }
        if (!match) {
          wp.mixed_pairs = CommutatorVerdict{false, i, a, beta, 0, bad};
          break;
        }
      }

  for (std::size_t alpha = 0; alpha < d.n && wp.vertical_pairs.ok; ++alpha)
    for (std::size_t mu = 0; mu < d.n; ++mu) {
      const std::vector<Q> br = bracket_at_point(v[alpha], v[mu]);
      std::vector<Q> rhs(dim, Q(0));
      for (std::size_t nu = 0; nu < d.n; ++nu) {
        const Q& cf = d.cval(nu, alpha, mu);
        if (sgn(cf) == 0) continue;
        for (std::size_t j = 0; j < d.m; ++j) rhs[j] += cf * d.rho(j, nu);
        for (std::size_t b = 0; b < k; ++b)
          for (std::size_t beta = 0; beta < d.n; ++beta) {
            Q acc(0);
            for (std::size_t theta = 0; theta < d.n; ++theta)
              acc += d.cval(theta, beta, nu) * p[b * d.n + theta];
            rhs[d.m + b * d.n + beta] -= cf * acc;
          }
      }
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t beta = 0; beta < d.n; ++beta) {
          Q acc(0);
          for (std::size_t theta = 0; theta < d.n; ++theta)
            for (std::size_t i = 0; i < d.m; ++i)
              acc += p[b * d.n + theta] * d.dcval(i, theta, alpha, mu) * d.rho(i, beta);
          rhs[d.m + b * d.n + beta] -= acc;
        }
      bool match = true;
      std::size_t bad = 0;
      for (std::size_t cmp = 0; cmp < dim; ++cmp)
        if (br[cmp] != rhs[cmp]) {
          match = false;
          bad = cmp;
          break;
        }
      if (!match) {
        wp.vertical_pairs = CommutatorVerdict{false, alpha, 0, mu, 0, bad};
        break;
      }
    }

  return wp;
}

// ============================================================
// k copies of a Lie algebra dual
// ============================================================

PolyPoissonPoint<Q> gstar_k(const LieAlgebra& g, std::size_t k,
                            const std::vector<std::vector<Q>>& mu) {
  if (k == 0) throw std::invalid_argument("gstar_k: k must be positive");
  if (mu.size() != k) throw std::invalid_argument("gstar_k: mu arity mismatch");
  const std::size_t n = g.dim();
  PolyPoissonPoint<Q> pp;
  pp.m = k * n;
  pp.k = k;
  Mat<Q> rows(n, k * k * n);
  for (std::size_t alpha = 0; alpha < n; ++alpha)
    for (std::size_t a = 0; a < k; ++a) rows(alpha, a * k * n + a * n + alpha) = 1;
  pp.S = Subspace<Q>::span(rows, 0.0);
  pp.sharp = Mat<Q>(k * n, n);
  for (std::size_t a = 0; a < k; ++a) {
    const Mat<Q> nmat = coadjoint_matrix(g, mu[a]);
    for (std::size_t beta = 0; beta < n; ++beta)
      for (std::size_t alpha = 0; alpha < n; ++alpha)
        pp.sharp(a * n + beta, alpha) = nmat(beta, alpha);
  }
  pp.integrability = IntegrabilityStatus::Structural;
  if (!check_axioms(pp, 0.0).ok()) throw std::runtime_error("gstar_k: axiom check failed");
  return pp;
}

IntegrabilityVerdict gstar_k_integrability(const LieAlgebra& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("gstar_k_integrability: k must be positive");
  const std::size_t n = g.dim();
  const std::size_t nv = k * n;  // coordinates on the k-fold dual
  IntegrabilityVerdict verdict;

  // Diagonal generator fields X_alpha and their constant covector tuples.
  std::vector<PolyVec> x(n, PolyVec(nv));
  for (std::size_t alpha = 0; alpha < n; ++alpha)
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t beta = 0; beta < n; ++beta) {
        Poly acc(nv);
        for (std::size_t gamma = 0; gamma < n; ++gamma) {
          const Q& cf = g.c(gamma, alpha, beta);
          if (sgn(cf) != 0)
            acc = acc + Poly::variable(nv, a * n + gamma).scaled(cf);
        }
        x[alpha][a * n + beta] = acc;
      }

  PolyPoissonPoint<Q> structure = gstar_k(g, k, std::vector<std::vector<Q>>(k, zero_vec(n)));

  const auto degree_guard = [](const PolyVec& v) {
    for (const Poly& q : v)
      if (q.degree() > 2)
        throw std::runtime_error("gstar_k_integrability: bracket left the quadratic span");
  };

  for (std::size_t alpha = 0; alpha < n; ++alpha)
    for (std::size_t beta = alpha + 1; beta < n; ++beta) {
      const PolyVec lhs = field_bracket(x[alpha], x[beta]);
      degree_guard(lhs);

      // One-form tuple argument of the closure identity; every slice is a
      // covector field on the k-fold dual.
      std::vector<PolyVec> arg(k);
      for (std::size_t a = 0; a < k; ++a) {
        PolyVec alpha_slice(nv), beta_slice(nv);
        for (std::size_t i = 0; i < nv; ++i) {
          alpha_slice[i] = Poly(nv);
          beta_slice[i] = Poly(nv);
        }
        alpha_slice[a * n + alpha] = Poly::constant(nv, Q(1));
        beta_slice[a * n + beta] = Poly::constant(nv, Q(1));
        Poly pairing(nv);
        for (std::size_t i = 0; i < nv; ++i) pairing = pairing + beta_slice[i] * x[alpha][i];
        PolyVec term = lie_derivative_covector(x[alpha], beta_slice);
        const PolyVec term2 = lie_derivative_covector(x[beta], alpha_slice);
        const PolyVec dpair = differential(pairing, nv);
        for (std::size_t i = 0; i < nv; ++i) term[i] = term[i] - term2[i] - dpair[i];
        degree_guard(term);
        arg[a] = term;
      }

      // Decompose the argument tuple into monomial coefficient tuples; each
      // must stay inside S so sharp can be applied literally.
      std::map<std::vector<unsigned>, std::vector<Q>> coeffs;
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t i = 0; i < nv; ++i)
          for (const auto& [mono, cf] : arg[a][i].terms()) {
            auto it = coeffs.find(mono);
            if (it == coeffs.end())
              it = coeffs.emplace(mono, zero_vec(k * nv)).first;
            it->second[a * nv + i] = cf;
          }

      PolyVec rhs(nv);
      for (std::size_t i = 0; i < nv; ++i) rhs[i] = Poly(nv);
      bool in_s = true;
      for (const auto& [mono, tuple] : coeffs) {
        if (!structure.S.contains(tuple, 0.0)) {
          verdict.ok = false;
          verdict.alpha = alpha;
          verdict.beta = beta;
          verdict.detail = "argument tuple left S";
          in_s = false;
          break;
        }
        std::vector<Q> xi(n);
        for (std::size_t a2 = 0; a2 < n; ++a2) xi[a2] = tuple[a2];
        Poly mono_poly = Poly::constant(nv, Q(1));
        for (std::size_t i = 0; i < nv; ++i)
          for (unsigned e = 0; e < mono[i]; ++e) mono_poly = mono_poly * Poly::variable(nv, i);
        for (std::size_t i = 0; i < nv; ++i) {
          Poly comp(nv);
          for (std::size_t a2 = 0; a2 < n; ++a2) {
            if (sgn(xi[a2]) == 0) continue;
            comp = comp + x[a2][i].scaled(xi[a2]);
          }
          rhs[i] = rhs[i] + mono_poly * comp;
        }
      }
      if (!in_s) return verdict;
      degree_guard(rhs);

      for (std::size_t i = 0; i < nv; ++i)
        if (lhs[i] != rhs[i]) {
          verdict.ok = false;
          verdict.alpha = alpha;
          verdict.beta = beta;
          verdict.detail = "component " + std::to_string(i) + ": bracket " + lhs[i].str() +
                           " vs image " + rhs[i].str();
          return verdict;
        }
    }
  return verdict;
}

LeafMatchVerdict coadjoint_leaf_match(const LieAlgebra& g, std::size_t k,
                                      const std::vector<std::vector<Q>>& mu) {
  LeafMatchVerdict v;
  const PolyPoissonPoint<Q> pp = gstar_k(g, k, mu);
  const LeafForm<Q> lf = leaf_form(pp, 0.0);
  const KCoadjointOrbit orbit = k_coadjoint_polyform(g, k, mu);
  v.leaf_ok = lf.leaf == orbit.tangent;
  v.form_ok = true;
  if (!v.leaf_ok) {
    v.form_ok = false;
    return v;
  }
  for (std::size_t a = 0; a < k && v.form_ok; ++a)
    for (std::size_t i = 0; i < lf.form.m && v.form_ok; ++i)
      for (std::size_t j = 0; j < lf.form.m; ++j)
        if (lf.form.forms[a](i, j) != orbit.form.forms[a](i, j)) {
          v.form_ok = false;
          v.component = a;
          v.i = i;
          v.j = j;
          break;
        }
  return v;
}

bool is_frame(std::size_t n, const std::vector<Q>& p) {
  if (p.size() != n * n) throw std::invalid_argument("is_frame: expected n copies of n values");
  Mat<Q> m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t alpha = 0; alpha < n; ++alpha) m(a, alpha) = p[a * n + alpha];
  return rank(m, 0.0) == n;
}

}  // namespace polyps
