#ifndef POLYPS_LIE_ALGEBRA_HPP
#define POLYPS_LIE_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "polyps/matrix.hpp"

namespace polyps {

/// One bracket entry [e_alpha, e_beta] = sum_gamma value * e_gamma; only the
/// (alpha, beta, gamma) listed are nonzero, the (beta, alpha) mirror is
/// implied.
struct BracketTriple {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t gamma = 0;
  Q value;
};

/// Finite-dimensional real Lie algebra in a fixed basis, exact structure
/// constants C(gamma, alpha, beta) with [e_alpha, e_beta] = C^gamma_{alpha
/// beta} e_gamma. Antisymmetry is enforced at construction; the Jacobi
/// identity is a separate check so that deliberately broken tables can be
/// represented.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t n) : n_(n), c_(n * n * n, Q(0)) {}

  std::size_t dim() const { return n_; }

  const Q& c(std::size_t gamma, std::size_t alpha, std::size_t beta) const {
    return c_[(gamma * n_ + alpha) * n_ + beta];
  }
  Q& c(std::size_t gamma, std::size_t alpha, std::size_t beta) {
    return c_[(gamma * n_ + alpha) * n_ + beta];
  }

  std::vector<Q> bracket(const std::vector<Q>& x, const std::vector<Q>& y) const;

 private:
  std::size_t n_ = 0;
  std::vector<Q> c_;
};

/// Builds an algebra from sparse triples, filling in antisymmetric mirrors.
/// Conflicting duplicates and diagonal entries [e_a, e_a] != 0 are rejected
/// with a descriptive exception.
LieAlgebra make_lie_algebra(std::size_t n, const std::vector<BracketTriple>& triples);

struct JacobiVerdict {
  bool ok = true;
  std::size_t a = 0, b = 0, c = 0;  // witness triple when !ok
  std::vector<Q> defect;
};

JacobiVerdict jacobi_check(const LieAlgebra& g);

/// Matrix N(nu) of the coadjoint action in the dual basis, with the pairing
/// convention (ad*_xi nu)(eta) = nu([xi, eta]): column alpha is
/// ad*_{e_alpha} nu, so N(nu) xi = ad*_xi nu.
Mat<Q> coadjoint_matrix(const LieAlgebra& g, const std::vector<Q>& nu);

// ============================================================
// Fixtures
// ============================================================

/// so(3): [e1, e2] = e3 cyclically.
LieAlgebra so3();

/// Heisenberg algebra h3: [e1, e2] = e3.
LieAlgebra heisenberg3();

LieAlgebra abelian(std::size_t n);

/// sl(2)-type table: [e1, e2] = 2 e2, [e1, e3] = -2 e3, [e2, e3] = e1.
LieAlgebra sl2();

/// so(3) with the extra entry [e1, e2] = e3 + e1, which breaks Jacobi.
LieAlgebra broken_so3();

}  // namespace polyps

#endif
