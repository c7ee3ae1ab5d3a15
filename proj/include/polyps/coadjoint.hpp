#ifndef POLYPS_COADJOINT_HPP
#define POLYPS_COADJOINT_HPP

#include "polyps/lie_algebra.hpp"
#include "polyps/polyform.hpp"
#include "polyps/subspace.hpp"

namespace polyps {

/// Orbit two-form at nu on the coadjoint orbit tangent space
/// T = { ad*_xi nu : xi in g }, with the value convention
/// w(ad*_xi nu, ad*_eta nu) = -nu([xi, eta]). The form matrix is expressed on
/// the canonical basis of T; generator is N(nu).
struct OrbitForm {
  Subspace<Q> tangent;
  Mat<Q> form;
  Mat<Q> generator;
};

/// Requires a Jacobi-valid algebra. Well-definedness of the value on
/// generator choices and nondegeneracy on the orbit tangent are internal
/// assertions.
OrbitForm coadjoint_orbit_form(const LieAlgebra& g, const std::vector<Q>& nu);

/// k-tuple analogue at mu = (mu_1..mu_k): tangent is the column space of the
/// stacked generator [N(mu_1); ...; N(mu_k)] inside R^(k n), and component A
/// of the form takes the value -mu_A([xi, eta]) on generator pairs.
struct KCoadjointOrbit {
  Subspace<Q> tangent;
  PolyForm<Q> form;  // on the canonical tangent basis
  Mat<Q> generator;  // (k n) x n
  PolysymplecticVerdict<Q> nondegenerate;
};

KCoadjointOrbit k_coadjoint_polyform(const LieAlgebra& g, std::size_t k,
                                     const std::vector<std::vector<Q>>& mu);

}  // namespace polyps

#endif
