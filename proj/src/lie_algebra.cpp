#include "polyps/lie_algebra.hpp"

#include <stdexcept>
#include <string>

namespace polyps {

std::vector<Q> LieAlgebra::bracket(const std::vector<Q>& x, const std::vector<Q>& y) const {
  if (x.size() != n_ || y.size() != n_)
    throw std::invalid_argument("LieAlgebra::bracket: dimension mismatch");
  std::vector<Q> r(n_, Q(0));
  for (std::size_t alpha = 0; alpha < n_; ++alpha) {
    if (sgn(x[alpha]) == 0) continue;
    for (std::size_t beta = 0; beta < n_; ++beta) {
      if (sgn(y[beta]) == 0) continue;
      const Q f = x[alpha] * y[beta];
      for (std::size_t gamma = 0; gamma < n_; ++gamma) r[gamma] += f * c(gamma, alpha, beta);
    }
  }
  return r;
}

LieAlgebra make_lie_algebra(std::size_t n, const std::vector<BracketTriple>& triples) {
  LieAlgebra g(n);
  std::vector<bool> seen(n * n * n, false);
  for (const BracketTriple& t : triples) {
    if (t.alpha >= n || t.beta >= n || t.gamma >= n)
      throw std::invalid_argument("make_lie_algebra: index out of range in bracket triple");
    if (t.alpha == t.beta && sgn(t.value) != 0)
      throw std::invalid_argument("make_lie_algebra: nonzero diagonal bracket at alpha = beta = " +
                                  std::to_string(t.alpha));
    const std::size_t idx = (t.gamma * n + t.alpha) * n + t.beta;
    const std::size_t mirror = (t.gamma * n + t.beta) * n + t.alpha;
    if (seen[idx] && g.c(t.gamma, t.alpha, t.beta) != t.value)
      throw std::invalid_argument("make_lie_algebra: conflicting duplicate for (" +
                                  std::to_string(t.alpha) + ", " + std::to_string(t.beta) +
                                  ", " + std::to_string(t.gamma) + ")");
    if (seen[mirror] && g.c(t.gamma, t.beta, t.alpha) != -t.value)
      throw std::invalid_argument("make_lie_algebra: antisymmetry conflict for (" +
                                  std::to_string(t.alpha) + ", " + std::to_string(t.beta) +
                                  ", " + std::to_string(t.gamma) + ")");
    g.c(t.gamma, t.alpha, t.beta) = t.value;
    g.c(t.gamma, t.beta, t.alpha) = -t.value;
    seen[idx] = true;
    seen[mirror] = true;
  }
  return g;
}

JacobiVerdict jacobi_check(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  JacobiVerdict v;
  std::vector<Q> ea(n, Q(0)), eb(n, Q(0)), ec(n, Q(0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        std::fill(ea.begin(), ea.end(), Q(0));
        std::fill(eb.begin(), eb.end(), Q(0));
        std::fill(ec.begin(), ec.end(), Q(0));
        ea[a] = 1;
        eb[b] = 1;
        ec[c] = 1;
        std::vector<Q> s = g.bracket(g.bracket(ea, eb), ec);
        std::vector<Q> s2 = g.bracket(g.bracket(eb, ec), ea);
        std::vector<Q> s3 = g.bracket(g.bracket(ec, ea), eb);
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i) {
          s[i] += s2[i] + s3[i];
          if (sgn(s[i]) != 0) zero = false;
        }
        if (!zero) {
          v.ok = false;
          v.a = a;
          v.b = b;
          v.c = c;
          v.defect = s;
          return v;
        }
      }
  return v;
}

Mat<Q> coadjoint_matrix(const LieAlgebra& g, const std::vector<Q>& nu) {
  const std::size_t n = g.dim();
  if (nu.size() != n) throw std::invalid_argument("coadjoint_matrix: covector dimension mismatch");
  Mat<Q> m(n, n);
  for (std::size_t beta = 0; beta < n; ++beta)
    for (std::size_t alpha = 0; alpha < n; ++alpha) {
      Q v(0);
      for (std::size_t gamma = 0; gamma < n; ++gamma) v += g.c(gamma, alpha, beta) * nu[gamma];
      m(beta, alpha) = v;
    }
  return m;
}

LieAlgebra so3() {
  return make_lie_algebra(3, {{0, 1, 2, Q(1)}, {1, 2, 0, Q(1)}, {2, 0, 1, Q(1)}});
}

LieAlgebra heisenberg3() { return make_lie_algebra(3, {{0, 1, 2, Q(1)}}); }

LieAlgebra abelian(std::size_t n) { return make_lie_algebra(n, {}); }

LieAlgebra sl2() {
  return make_lie_algebra(3, {{0, 1, 1, Q(2)}, {0, 2, 2, Q(-2)}, {1, 2, 0, Q(1)}});
}

LieAlgebra broken_so3() {
  return make_lie_algebra(
      3, {{0, 1, 2, Q(1)}, {0, 1, 0, Q(1)}, {1, 2, 0, Q(1)}, {2, 0, 1, Q(1)}});
}

}  // namespace polyps
