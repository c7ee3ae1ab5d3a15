#include "polyps/coadjoint.hpp"

#include <stdexcept>
#include <string>

namespace polyps {

namespace {

/// Solves stacked_n xi = t for each canonical tangent basis vector and
/// evaluates -mu_A([xi_i, xi_j]) on all pairs. Shared by the k = 1 orbit
/// form and the k-tuple version.
std::vector<Mat<Q>> orbit_values(const LieAlgebra& g, const Mat<Q>& stacked_n,
                                 const std::vector<std::vector<Q>>& mu,
                                 const Subspace<Q>& tangent) {
  const std::size_t d = tangent.dim();
  std::vector<std::vector<Q>> xi(d);
  for (std::size_t i = 0; i < d; ++i)
    if (!solve(stacked_n, tangent.basis().row(i), xi[i], 0.0))
      throw std::runtime_error("orbit form: tangent vector has no generator");

  // A generator ambiguity xi -> xi + z with z in the kernel of the stacked
  // matrix must not change any value; the kernel pairs to zero against every
  // mu_A by construction, asserted here.
  Mat<Q> ker = nullspace(stacked_n, 0.0);
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (const std::vector<Q>& m : mu) {
      std::vector<Q> z = ker.row(r);
      for (std::size_t beta = 0; beta < g.dim(); ++beta) {
        std::vector<Q> eb(g.dim(), Q(0));
        eb[beta] = 1;
        std::vector<Q> br = g.bracket(z, eb);
        Q v(0);
        for (std::size_t c = 0; c < g.dim(); ++c) v += m[c] * br[c];
        if (sgn(v) != 0) throw std::runtime_error("orbit form: value not well defined");
      }
    }

  std::vector<Mat<Q>> vals(mu.size(), Mat<Q>(d, d));
  for (std::size_t a = 0; a < mu.size(); ++a)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<Q> br = g.bracket(xi[i], xi[j]);
        Q v(0);
        for (std::size_t c = 0; c < g.dim(); ++c) v += mu[a][c] * br[c];
        vals[a](i, j) = -v;
      }
  return vals;
}

}  // namespace

OrbitForm coadjoint_orbit_form(const LieAlgebra& g, const std::vector<Q>& nu) {
  const JacobiVerdict jv = jacobi_check(g);
  if (!jv.ok)
    throw std::invalid_argument("coadjoint_orbit_form: Jacobi identity fails at basis triple (" +
                                std::to_string(jv.a) + ", " + std::to_string(jv.b) + ", " +
                                std::to_string(jv.c) + ")");
  OrbitForm of;
  of.generator = coadjoint_matrix(g, nu);
  of.tangent = Subspace<Q>::span(of.generator.transpose(), 0.0);
  of.form = orbit_values(g, of.generator, {nu}, of.tangent)[0];
  if (rank(of.form, 0.0) != of.tangent.dim())
    throw std::runtime_error("coadjoint_orbit_form: orbit form degenerate");
  return of;
}

KCoadjointOrbit k_coadjoint_polyform(const LieAlgebra& g, std::size_t k,
                                     const std::vector<std::vector<Q>>& mu) {
  if (mu.size() != k) throw std::invalid_argument("k_coadjoint_polyform: mu arity mismatch");
  const JacobiVerdict jv = jacobi_check(g);
  if (!jv.ok)
    throw std::invalid_argument("k_coadjoint_polyform: Jacobi identity fails at basis triple (" +
                                std::to_string(jv.a) + ", " + std::to_string(jv.b) + ", " +
                                std::to_string(jv.c) + ")");
  const std::size_t n = g.dim();
  KCoadjointOrbit orbit;
  orbit.generator = Mat<Q>(k * n, n);
  for (std::size_t a = 0; a < k; ++a)
    orbit.generator.set_block(a * n, 0, coadjoint_matrix(g, mu[a]));
  orbit.tangent = Subspace<Q>::span(orbit.generator.transpose(), 0.0);
  orbit.form.m = orbit.tangent.dim();
  orbit.form.k = k;
  orbit.form.forms = orbit_values(g, orbit.generator, mu, orbit.tangent);
  orbit.nondegenerate = is_polysymplectic(orbit.form, 0.0);
  return orbit;
}

}  // namespace polyps
