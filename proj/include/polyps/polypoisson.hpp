#ifndef POLYPS_POLYPOISSON_HPP
#define POLYPS_POLYPOISSON_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyps/polyform.hpp"
#include "polyps/subspace.hpp"

namespace polyps {

/// What is actually known about integrability of the characteristic
/// distribution for a pointwise structure: verified by an exact bracket
/// computation, guaranteed by the construction class, or simply unknown from
/// a single jet.
enum class IntegrabilityStatus { VerifiedExact, Structural, Unverified };

inline const char* to_string(IntegrabilityStatus s) {
  switch (s) {
    case IntegrabilityStatus::VerifiedExact: return "verified-exact";
    case IntegrabilityStatus::Structural: return "structural";
    default: return "unverified";
  }
}

/// Pointwise k-poly-Poisson structure on R^m: a subspace S of covector
/// k-tuples (R^(k m)) together with the anchor map sharp expressed on the
/// canonical basis of S; column j of sharp is the image of basis row j.
template <class T>
struct PolyPoissonPoint {
  std::size_t m = 0;
  std::size_t k = 0;
  Subspace<T> S;
  Mat<T> sharp;  // m x dim S
  IntegrabilityStatus integrability = IntegrabilityStatus::Unverified;
};

/// Component-A slice of an ambient covector tuple.
template <class T>
std::vector<T> tuple_slice(const std::vector<T>& tuple, std::size_t m, std::size_t a) {
  return std::vector<T>(tuple.begin() + a * m, tuple.begin() + (a + 1) * m);
}

/// Coordinates of an ambient tuple in the canonical basis of S; throws when
/// the tuple is not a member.
template <class T>
std::vector<T> s_coordinates(const PolyPoissonPoint<T>& pp, const std::vector<T>& tuple,
                             double eps) {
  std::vector<T> c;
  if (!solve(pp.S.basis().transpose(), tuple, c, eps))
    throw std::invalid_argument("s_coordinates: tuple not in S");
  return c;
}

template <class T>
std::vector<T> sharp_of(const PolyPoissonPoint<T>& pp, const std::vector<T>& tuple, double eps) {
  return pp.sharp.apply(s_coordinates(pp, tuple, eps));
}

/// Pairing matrices P^A on the canonical basis of S:
/// P^A(i, j) = (component A of basis row i) evaluated on sharp(basis row j).
template <class T>
std::vector<Mat<T>> pairing_matrices(const PolyPoissonPoint<T>& pp) {
  const std::size_t s = pp.S.dim();
  std::vector<Mat<T>> out(pp.k, Mat<T>(s, s));
  for (std::size_t a = 0; a < pp.k; ++a)
    for (std::size_t i = 0; i < s; ++i) {
      const std::vector<T> slice = tuple_slice(pp.S.basis().row(i), pp.m, a);
      for (std::size_t j = 0; j < s; ++j) {
        T v(0);
        for (std::size_t c = 0; c < pp.m; ++c) v += slice[c] * pp.sharp(c, j);
        out[a](i, j) = v;
      }
    }
  return out;
}

template <class T>
struct AxiomVerdict {
  bool diagonal_ok = true;
  bool antisymmetry_ok = true;
  bool kernel_ok = true;
  std::size_t component = 0, i = 0, j = 0;  // first pairing violation
  std::vector<T> kernel_witness;            // ambient tuple with zero pairing, nonzero sharp
  bool ok() const { return diagonal_ok && antisymmetry_ok && kernel_ok; }
};

/// Defining conditions on (S, sharp): every alpha in S pairs to zero against
/// its own image (componentwise, hence the pairing matrices are skew), and a
/// tuple pairing to zero against the whole image of sharp is itself sent to
/// zero. The second condition is the kernel inclusion
/// Ker(stacked pairing) <= Ker(sharp) in basis coordinates.
template <class T>
AxiomVerdict<T> check_axioms(const PolyPoissonPoint<T>& pp, double eps) {
  AxiomVerdict<T> v;
  const std::vector<Mat<T>> pair = pairing_matrices(pp);
  const std::size_t s = pp.S.dim();
  for (std::size_t a = 0; a < pp.k && v.diagonal_ok; ++a)
    for (std::size_t i = 0; i < s && v.diagonal_ok; ++i)
      if (!scalar_traits<T>::is_zero(pair[a](i, i), eps)) {
        v.diagonal_ok = false;
        v.component = a;
        v.i = v.j = i;
      }
  for (std::size_t a = 0; a < pp.k && v.antisymmetry_ok; ++a)
    for (std::size_t i = 0; i < s && v.antisymmetry_ok; ++i)
      for (std::size_t j = 0; j < s; ++j)
        if (!scalar_traits<T>::is_zero(pair[a](i, j) + pair[a](j, i), eps)) {
          v.antisymmetry_ok = false;
          v.component = a;
          v.i = i;
          v.j = j;
          break;
        }
  Mat<T> stacked(pp.k * s, s);
  for (std::size_t a = 0; a < pp.k; ++a) stacked.set_block(a * s, 0, pair[a].transpose());
  const Mat<T> ker = nullspace(stacked, eps);
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    const std::vector<T> img = pp.sharp.apply(ker.row(r));
    if (!is_zero_vector(img, eps)) {
      v.kernel_ok = false;
      v.kernel_witness = pp.S.basis().transpose().apply(ker.row(r));
      break;
    }
  }
  return v;
}

/// Image of sharp inside R^m.
template <class T>
Subspace<T> characteristic_distribution(const PolyPoissonPoint<T>& pp, double eps) {
  return Subspace<T>::span(pp.sharp.transpose(), eps);
}

/// Kernel of sharp as a subspace of ambient covector tuples.
template <class T>
Subspace<T> sharp_kernel(const PolyPoissonPoint<T>& pp, double eps) {
  const Mat<T> ker = nullspace(pp.sharp, eps);
  return Subspace<T>::span((pp.S.basis().transpose() * ker.transpose()).transpose(), eps);
}

// ============================================================
// Construction from a polysymplectic family
// ============================================================

/// S = image of the joint flat map, sharp = its inverse. Input must be
/// jointly nondegenerate; the axioms hold by construction and are asserted.
template <class T>
PolyPoissonPoint<T> from_polysymplectic(const PolyForm<T>& pf, double eps) {
  const PolysymplecticVerdict<T> nd = is_polysymplectic(pf, eps);
  if (!nd.ok)
    throw std::invalid_argument("from_polysymplectic: family has a joint kernel vector");
  PolyPoissonPoint<T> pp;
  pp.m = pf.m;
  pp.k = pf.k;
  const Mat<T> flat = flat_matrix(pf);
  pp.S = Subspace<T>::span(flat.transpose(), eps);
  if (pp.S.dim() != pf.m) throw std::runtime_error("from_polysymplectic: flat image rank defect");
  pp.sharp = Mat<T>(pf.m, pp.S.dim());
  for (std::size_t j = 0; j < pp.S.dim(); ++j) {
    std::vector<T> x;
    if (!solve(flat, pp.S.basis().row(j), x, eps))
      throw std::runtime_error("from_polysymplectic: basis tuple not in flat image");
    pp.sharp.set_col(j, x);
  }
  pp.integrability = pf.closedness == PolyForm<T>::Closedness::ConstantAuto
                         ? IntegrabilityStatus::Structural
                         : IntegrabilityStatus::Unverified;
  const AxiomVerdict<T> av = check_axioms(pp, eps);
  if (!av.ok()) throw std::runtime_error("from_polysymplectic: axiom check failed");
  return pp;
}

// ============================================================
// Leaf form
// ============================================================

template <class T>
struct LeafForm {
  Subspace<T> leaf;  // characteristic distribution, canonical basis
  PolyForm<T> form;  // values on that basis
};

/// Family on the characteristic distribution defined by
/// w^A(sharp(alpha), sharp(beta)) = (component A of alpha)(sharp(beta)).
/// Independence of the preimage choice and joint nondegeneracy are internal
/// assertions.
template <class T>
LeafForm<T> leaf_form(const PolyPoissonPoint<T>& pp, double eps) {
  LeafForm<T> lf;
  lf.leaf = characteristic_distribution(pp, eps);
  const std::size_t d = lf.leaf.dim();
  Mat<T> pre(pp.S.dim(), d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<T> c;
    if (!solve(pp.sharp, lf.leaf.basis().row(j), c, eps))
      throw std::runtime_error("leaf_form: leaf vector outside the image of sharp");
    pre.set_col(j, c);
  }
  // Shifting a preimage by anything in the kernel of sharp must not move the
  // value, so every kernel tuple has to pair to zero with the whole leaf.
  const Mat<T> ker = nullspace(pp.sharp, eps);
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    const std::vector<T> tuple = pp.S.basis().transpose().apply(ker.row(r));
    for (std::size_t a = 0; a < pp.k; ++a) {
      const std::vector<T> kslice = tuple_slice(tuple, pp.m, a);
      for (std::size_t j = 0; j < d; ++j) {
        T w(0);
        for (std::size_t c = 0; c < pp.m; ++c) w += kslice[c] * lf.leaf.basis()(j, c);
        if (!scalar_traits<T>::is_zero(w, eps))
          throw std::runtime_error("leaf_form: value depends on the preimage choice");
      }
    }
  }
  lf.form.m = d;
  lf.form.k = pp.k;
  lf.form.forms.assign(pp.k, Mat<T>(d, d));
  for (std::size_t i = 0; i < d; ++i) {
    const std::vector<T> alpha = pp.S.basis().transpose().apply(pre.col(i));
    for (std::size_t a = 0; a < pp.k; ++a) {
      const std::vector<T> slice = tuple_slice(alpha, pp.m, a);
      for (std::size_t j = 0; j < d; ++j) {
        T v(0);
        for (std::size_t c = 0; c < pp.m; ++c) v += slice[c] * lf.leaf.basis()(j, c);
        lf.form.forms[a](i, j) = v;
      }
    }
  }
  validate_skew(lf.form, eps);
  const PolysymplecticVerdict<T> nd = is_polysymplectic(lf.form, eps);
  if (!nd.ok) throw std::runtime_error("leaf_form: family degenerate on the leaf");
  return lf;
}

// ============================================================
// Dirac-type construction along a subspace
// ============================================================

template <class T>
struct DiracResult {
  bool accepted = false;
  std::vector<T> witness;  // nonzero vector of D cap D-perp when rejected
  PolyPoissonPoint<T> pp;
};

/// Poly-orthogonal complement: vectors sent into the annihilator of D by
/// every component flat.
template <class T>
Subspace<T> poly_orthogonal(const PolyForm<T>& pf, const Subspace<T>& d, double eps) {
  const Subspace<T> d0 = annihilator(d, eps);
  Subspace<T> perp = Subspace<T>::full(pf.m);
  for (std::size_t a = 0; a < pf.k; ++a)
    perp = intersect(perp, preimage(pf.forms[a].transpose(), d0, eps), eps);
  return perp;
}

/// Induced structure on a subspace D with D cap D-perp = 0: S consists of
/// the tuples whose restriction to D agrees with the restriction of some
/// flat(v), v in D, and sharp picks that v.
template <class T>
DiracResult<T> dirac_type(const PolyForm<T>& pf, const Subspace<T>& d, double eps) {
  const PolysymplecticVerdict<T> nd = is_polysymplectic(pf, eps);
  if (!nd.ok) throw std::invalid_argument("dirac_type: family has a joint kernel vector");
  if (d.ambient() != pf.m) throw std::invalid_argument("dirac_type: ambient mismatch");
  DiracResult<T> res;
  const Subspace<T> perp = poly_orthogonal(pf, d, eps);
  const Subspace<T> overlap = intersect(d, perp, eps);
  if (overlap.dim() != 0) {
    res.accepted = false;
    res.witness = overlap.basis().row(0);
    return res;
  }
  const std::size_t r = d.dim();
  const Mat<T> bd = d.basis();                       // r x m
  const Mat<T> rst = block_diag(bd, pf.k);           // (k r) x (k m)
  const Mat<T> flat = flat_matrix(pf);               // (k m) x m
  const Mat<T> flat_d = flat * bd.transpose();       // flat of D basis vectors
  const Subspace<T> restricted = Subspace<T>::span((rst * flat_d).transpose(), eps);
  res.pp.m = pf.m;
  res.pp.k = pf.k;
  res.pp.S = preimage(rst, restricted, eps);
  if (res.pp.S.dim() != r + (pf.m - r) * pf.k)
    throw std::runtime_error("dirac_type: unexpected S dimension");
  const Mat<T> f = rst * flat_d;  // (k r) x r, injective when the overlap is zero
  if (rank(f, eps) != r) throw std::runtime_error("dirac_type: restricted flat not injective");
  res.pp.sharp = Mat<T>(pf.m, res.pp.S.dim());
  for (std::size_t j = 0; j < res.pp.S.dim(); ++j) {
    std::vector<T> c;
    if (!solve(f, rst.apply(res.pp.S.basis().row(j)), c, eps))
      throw std::runtime_error("dirac_type: no representative in D");
    res.pp.sharp.set_col(j, bd.transpose().apply(c));
  }
  res.pp.integrability = IntegrabilityStatus::Unverified;
  const AxiomVerdict<T> av = check_axioms(res.pp, eps);
  if (!av.ok()) throw std::runtime_error("dirac_type: axiom check failed");
  if (!(characteristic_distribution(res.pp, eps) == d) &&
      !characteristic_distribution(res.pp, eps).equals(d, eps))
    throw std::runtime_error("dirac_type: characteristic distribution differs from D");
  res.accepted = true;
  return res;
}

// ============================================================
// Foliated construction from leafwise data
// ============================================================

template <class T>
struct FoliatedResult {
  bool accepted = false;
  int failed_condition = 0;  // 1: projected leaf vs sharp image, 2: joint kernel
  std::size_t component = 0;
  std::vector<T> witness;
  PolyPoissonPoint<T> pp;
};

/// Assembles the structure induced by k surjective submersion differentials
/// tpi[A]: R^m -> R^(m_A) carrying Poisson sharps lambda[A] on the targets,
/// along a leaf tangent f. Compatibility requires tpi[A](f) = Im(lambda[A])
/// and the joint kernel of the tpi[A] to meet f trivially.
template <class T>
FoliatedResult<T> foliated_construction(const std::vector<Mat<T>>& tpi,
                                        const std::vector<Mat<T>>& lambda, const Subspace<T>& f,
                                        double eps) {
  const std::size_t k = tpi.size();
  if (lambda.size() != k || k == 0)
    throw std::invalid_argument("foliated_construction: arity mismatch");
  const std::size_t m = f.ambient();
  FoliatedResult<T> res;
  for (std::size_t a = 0; a < k; ++a) {
    if (tpi[a].cols() != m) throw std::invalid_argument("foliated_construction: domain mismatch");
    if (lambda[a].rows() != tpi[a].rows() || lambda[a].cols() != tpi[a].rows())
      throw std::invalid_argument("foliated_construction: sharp shape mismatch");
    const Subspace<T> proj_f = image(tpi[a], f, eps);
    const Subspace<T> im_lambda = Subspace<T>::span(lambda[a].transpose(), eps);
    if (!(proj_f == im_lambda) && !proj_f.equals(im_lambda, eps)) {
      res.failed_condition = 1;
      res.component = a;
      for (std::size_t i = 0; i < proj_f.dim(); ++i)
        if (!im_lambda.contains(proj_f.basis().row(i), eps)) res.witness = proj_f.basis().row(i);
      if (res.witness.empty())
        for (std::size_t i = 0; i < im_lambda.dim(); ++i)
          if (!proj_f.contains(im_lambda.basis().row(i), eps)) res.witness = im_lambda.basis().row(i);
      return res;
    }
  }
  std::size_t total = 0;
  for (std::size_t a = 0; a < k; ++a) total += tpi[a].rows();
  Mat<T> stacked_tpi(total, m);
  {
    std::size_t off = 0;
    for (std::size_t a = 0; a < k; ++a) {
      stacked_tpi.set_block(off, 0, tpi[a]);
      off += tpi[a].rows();
    }
  }
  const Subspace<T> joint_kernel =
      intersect(Subspace<T>::span(nullspace(stacked_tpi, eps), eps), f, eps);
  if (joint_kernel.dim() != 0) {
    res.failed_condition = 2;
    res.witness = joint_kernel.basis().row(0);
    return res;
  }

  // Pairs (v in f, alpha tuple) with tpi[A] v = lambda[A] alpha_A for all A,
  // encoded as the kernel of [tpi * f_basis | -diag(lambda)].
  const Mat<T> fb = f.basis();
  Mat<T> sys(total, f.dim() + total);
  {
    std::size_t off = 0;
    for (std::size_t a = 0; a < k; ++a) {
      sys.set_block(off, 0, tpi[a] * fb.transpose());
      for (std::size_t i = 0; i < tpi[a].rows(); ++i)
        for (std::size_t j = 0; j < tpi[a].rows(); ++j)
          sys(off + i, f.dim() + off + j) = -lambda[a](i, j);
      off += tpi[a].rows();
    }
  }
  const Mat<T> kbasis = nullspace(sys, eps);

  // Transport to ambient covector tuples through the pullbacks.
  Mat<T> phi(k * m, f.dim() + total);
  {
    std::size_t off = 0;
    for (std::size_t a = 0; a < k; ++a) {
      phi.set_block(a * m, f.dim() + off, tpi[a].transpose());
      off += tpi[a].rows();
    }
  }
  res.pp.m = m;
  res.pp.k = k;
  const Mat<T> reachable = phi * kbasis.transpose();  // columns span S
  res.pp.S = Subspace<T>::span(reachable.transpose(), eps);
  res.pp.sharp = Mat<T>(m, res.pp.S.dim());
  for (std::size_t j = 0; j < res.pp.S.dim(); ++j) {
    std::vector<T> y;
    if (!solve(reachable, res.pp.S.basis().row(j), y, eps))
      throw std::runtime_error("foliated_construction: basis tuple left the reachable span");
    const std::vector<T> param = kbasis.transpose().apply(y);
    std::vector<T> u(m, T(0));
    for (std::size_t l = 0; l < f.dim(); ++l)
      for (std::size_t c = 0; c < m; ++c) u[c] += param[l] * fb(l, c);
    res.pp.sharp.set_col(j, u);
  }

  // The base vector must not depend on which kernel combination realises the
  // tuple; the joint-kernel condition makes it unique.
  {
    const Mat<T> mker = nullspace(reachable, eps);
    for (std::size_t r = 0; r < mker.rows(); ++r) {
      const std::vector<T> param = kbasis.transpose().apply(mker.row(r));
      std::vector<T> u(m, T(0));
      for (std::size_t l = 0; l < f.dim(); ++l)
        for (std::size_t c = 0; c < m; ++c) u[c] += param[l] * fb(l, c);
      if (!is_zero_vector(u, eps))
        throw std::runtime_error("foliated_construction: sharp value not well defined");
    }
  }
  res.pp.integrability = IntegrabilityStatus::Structural;
  const AxiomVerdict<T> av = check_axioms(res.pp, eps);
  if (!av.ok()) throw std::runtime_error("foliated_construction: axiom check failed");
  {
    const Subspace<T> image_sharp = characteristic_distribution(res.pp, eps);
    if (!(image_sharp == f) && !image_sharp.equals(f, eps))
      throw std::runtime_error("foliated_construction: characteristic distribution is not f");
  }
  res.accepted = true;
  return res;
}

}  // namespace polyps

#endif
