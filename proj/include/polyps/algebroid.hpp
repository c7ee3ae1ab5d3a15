#ifndef POLYPS_ALGEBROID_HPP
#define POLYPS_ALGEBROID_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "polyps/lie_algebra.hpp"
#include "polyps/polypoisson.hpp"

namespace polyps {

/// First-order jet of Lie algebroid data in a chart at one point: anchor
/// matrix rho (m x n), structure functions c (n^3, antisymmetric in the two
/// lower indices), and their first partials along the base coordinates.
/// drho[j](i, alpha) = d rho^i_alpha / d q^j and dc[j] stores the partials of
/// c along q^j in the same layout as c.
struct AlgebroidPointData {
  std::size_t m = 0;
  std::size_t n = 0;
  Mat<Q> rho;
  std::vector<Mat<Q>> drho;
  std::vector<Q> c;
  std::vector<std::vector<Q>> dc;

  const Q& cval(std::size_t gamma, std::size_t alpha, std::size_t beta) const {
    return c[(gamma * n + alpha) * n + beta];
  }
  const Q& dcval(std::size_t j, std::size_t gamma, std::size_t alpha, std::size_t beta) const {
    return dc[j][(gamma * n + alpha) * n + beta];
  }

  /// A Lie algebra is the m = 0 case.
  static AlgebroidPointData from_lie_algebra(const LieAlgebra& g);

  /// Tangent algebroid of R^m in coordinates: identity anchor, zero bracket.
  static AlgebroidPointData trivial_tangent(std::size_t m);

  /// Trivialized gauge algebroid of a trivial principal bundle over R^m_base:
  /// rank m_base + dim g, anchor projecting onto the base block, structure
  /// functions of g on the fibre block, all derivatives zero.
  static AlgebroidPointData atiyah_trivialized(const LieAlgebra& g, std::size_t m_base);
};

/// Shape and antisymmetry validation; throws on malformed data.
void validate(const AlgebroidPointData& d);

/// N(p) with N(p)(beta, alpha) = sum_gamma c(gamma, alpha, beta) p_gamma, so
/// that N(p) xi is the fibre-linear Poisson rotation of p along xi.
Mat<Q> structure_matrix(const AlgebroidPointData& d, const std::vector<Q>& p);

// ============================================================
// Structure equations at the point
// ============================================================

struct StructureEquationsVerdict {
  bool anchor_ok = true;    // anchor intertwines brackets
  bool jacobi_ok = true;    // cyclic identity on the structure functions
  std::size_t alpha = 0, beta = 0, gamma = 0, index = 0;  // first violation
  Q lhs, rhs;
  bool ok() const { return anchor_ok && jacobi_ok; }
};

/// Evaluates both compatibility identities of the jet:
/// rho^i_alpha d rho^j_beta / d q^i - rho^i_beta d rho^j_alpha / d q^i
///   = rho^j_gamma c^gamma_{alpha beta}, and the cyclic sum over
/// (alpha, beta, gamma) of rho^i_alpha d c^nu_{beta gamma} / d q^i
///   + c^nu_{alpha mu} c^mu_{beta gamma} = 0.
StructureEquationsVerdict structure_equations_check(const AlgebroidPointData& d);

// ============================================================
// Fibrewise-linear Poisson structure on the dual
// ============================================================

/// Sharp matrix at the point (q, p) of the dual bundle, on coordinates
/// (q^1..q^m, p_1..p_n): covector (a; b) maps to (-rho b; rho^T a - N(p) b).
Mat<Q> linear_poisson_sharp(const AlgebroidPointData& d, const std::vector<Q>& p);

struct ProjectabilityVerdict {
  bool base_parts_equal = false;       // anchor projections of the two images agree
  bool composites_equal = false;       // pulled-back fibre parts agree
  bool equivalent = false;             // the two tests return the same answer
};

/// Two covectors alpha1 at (q, p1) and alpha2 at (q, p2), each given as
/// (a; b) of length m + n, project to the same base vector exactly when
/// their fibre parts pull back to the same covector on the base. Both sides
/// are evaluated literally: the anchor projection of the sharp images on the
/// left, the pulled-back fibre parts on the right.
ProjectabilityVerdict projectability_test(const AlgebroidPointData& d,
                                          const std::vector<Q>& p1, const std::vector<Q>& alpha1,
                                          const std::vector<Q>& p2, const std::vector<Q>& alpha2);

// ============================================================
// Whitney sum of k dual copies
// ============================================================

struct CommutatorVerdict {
  bool ok = true;
  std::size_t i = 0, a = 0, j = 0, b = 0;  // generator labels of the first failure
  std::size_t component = 0;
};

struct WhitneyPoint {
  PolyPoissonPoint<Q> pp;          // on R^(m + k n), tuples in R^(k (m + k n))
  std::vector<std::vector<Q>> horizontal;  // generators H^{i,A}, flattened fields at the point
  std::vector<std::vector<Q>> vertical;    // generators V_alpha
  CommutatorVerdict horizontal_pairs;      // [H, H] = 0
  CommutatorVerdict mixed_pairs;           // [H, V] against the anchor-derivative field
  CommutatorVerdict vertical_pairs;        // [V, V] against the structure-function field
};

/// Structure at the point of the k-fold Whitney sum of the dual bundle with
/// fibre values p (k n entries, copy-major). S consists of tuples whose
/// components share the fibre covector, sharp applies the fibrewise-linear
/// sharp of each copy. The three generator commutator identities are
/// evaluated from the jet and reported.
WhitneyPoint whitney_point(const AlgebroidPointData& d, std::size_t k, const std::vector<Q>& p);

// ============================================================
// Dual of a Lie algebra, k copies
// ============================================================

/// Structure at mu = (mu_1..mu_k) on the k-fold dual: S is the diagonal
/// g-block of covector tuples, sharp(diag xi) = (N(mu_A) xi)_A.
PolyPoissonPoint<Q> gstar_k(const LieAlgebra& g, std::size_t k,
                            const std::vector<std::vector<Q>>& mu);

struct IntegrabilityVerdict {
  bool ok = true;
  std::size_t alpha = 0, beta = 0;  // witness generator pair
  std::string detail;
};

/// Closure of the section bracket on the diagonal sections over the whole
/// dual, computed exactly in polynomial coordinates. Fails exactly on
/// non-Jacobi tables and names the offending generator pair.
IntegrabilityVerdict gstar_k_integrability(const LieAlgebra& g, std::size_t k);

struct LeafMatchVerdict {
  bool leaf_ok = false;
  bool form_ok = false;
  std::size_t component = 0, i = 0, j = 0;  // first form mismatch
  bool ok() const { return leaf_ok && form_ok; }
};

/// The leaf of the k-fold dual structure through mu carries the same
/// subspace and form values as the k-coadjoint orbit construction.
LeafMatchVerdict coadjoint_leaf_match(const LieAlgebra& g, std::size_t k,
                                      const std::vector<std::vector<Q>>& mu);

/// Frame condition for a point of the n-fold Whitney sum of a rank-n dual:
/// the n x n matrix of fibre values is invertible.
bool is_frame(std::size_t n, const std::vector<Q>& p);

}  // namespace polyps

#endif
