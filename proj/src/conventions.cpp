#include "polyps/conventions.hpp"

#include <stdexcept>

#include "polyps/algebroid.hpp"

namespace polyps {

int sign_ratio(const Mat<Q>& a, const Mat<Q>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::runtime_error("sign_ratio: shape mismatch");
  Q ratio(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const bool za = sgn(a(i, j)) == 0, zb = sgn(b(i, j)) == 0;
      if (za != zb) throw std::runtime_error("sign_ratio: support mismatch");
      if (za) continue;
      const Q r = a(i, j) / b(i, j);
      if (sgn(ratio) == 0)
        ratio = r;
      else if (ratio != r)
        throw std::runtime_error("sign_ratio: entries disagree");
    }
  if (ratio != Q(1) && ratio != Q(-1))
    throw std::runtime_error("sign_ratio: constant is not a sign");
  return ratio == Q(1) ? 1 : -1;
}

namespace {

int measure_sigma() {
  const LieAlgebra g = so3();
  const std::vector<Q> nu = {Q(0), Q(0), Q(1)};
  const WhitneyPoint wp = whitney_point(AlgebroidPointData::from_lie_algebra(g), 1, nu);
  const PolyPoissonPoint<Q> gs = gstar_k(g, 1, {nu});
  if (!(wp.pp.S == gs.S)) throw std::runtime_error("sigma oracle: S mismatch");
  return sign_ratio(wp.pp.sharp, gs.sharp);
}

}  // namespace

const ConventionLedger& conventions() {
  static const ConventionLedger ledger = [] {
    ConventionLedger l;
    l.flat = "flat(X) = w(X, .)";
    l.coadjoint = "(ad*_xi nu)(eta) = nu([xi, eta])";
    l.sigma = measure_sigma();
    return l;
  }();
  return ledger;
}

int recorded_sigma() { return conventions().sigma; }

}  // namespace polyps
