#ifndef POLYPS_POLYFORM_HPP
#define POLYPS_POLYFORM_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyps/subspace.hpp"

namespace polyps {

/// A k-tuple of constant-coefficient 2-forms on R^m, each stored as the skew
/// matrix of values on the standard basis: forms[A](i, j) = w^A(e_i, e_j).
///
/// Closedness bookkeeping: constant-coefficient data is closed automatically;
/// pointwise data from a single jet carries Deferred and no closedness claim
/// is ever made for it.
template <class T>
struct PolyForm {
  enum class Closedness { ConstantAuto, Deferred };

  std::size_t m = 0;
  std::size_t k = 0;
  std::vector<Mat<T>> forms;
  Closedness closedness = Closedness::ConstantAuto;
};

/// Throws when some forms[A] is not skew-symmetric; the message carries the
/// offending (A, i, j).
template <class T>
void validate_skew(const PolyForm<T>& pf, double eps) {
  if (pf.forms.size() != pf.k) throw std::invalid_argument("PolyForm: forms.size() != k");
  for (std::size_t a = 0; a < pf.k; ++a) {
    if (pf.forms[a].rows() != pf.m || pf.forms[a].cols() != pf.m)
      throw std::invalid_argument("PolyForm: component " + std::to_string(a) + " is not m x m");
    for (std::size_t i = 0; i < pf.m; ++i)
      for (std::size_t j = 0; j < pf.m; ++j)
        if (!scalar_traits<T>::is_zero(pf.forms[a](i, j) + pf.forms[a](j, i), eps))
          throw std::invalid_argument("PolyForm: component " + std::to_string(a) +
                                      " not skew at (" + std::to_string(i) + ", " +
                                      std::to_string(j) + ")");
  }
}

/// Matrix of the joint flat map X -> (w^1(X, .), ..., w^k(X, .)) as a
/// (k m) x m matrix: block A is forms[A] transposed, so block A applied to X
/// is the coefficient vector of w^A(X, .) in the dual basis.
template <class T>
Mat<T> flat_matrix(const PolyForm<T>& pf) {
  Mat<T> f(pf.k * pf.m, pf.m);
  for (std::size_t a = 0; a < pf.k; ++a) f.set_block(a * pf.m, 0, pf.forms[a].transpose());
  return f;
}

template <class T>
std::vector<T> flat_apply(const PolyForm<T>& pf, const std::vector<T>& x) {
  return flat_matrix(pf).apply(x);
}

template <class T>
struct PolysymplecticVerdict {
  bool ok = false;
  std::vector<T> witness;  // nonzero X with all w^A(X, .) = 0 when !ok
};

/// Joint nondegeneracy: the intersection of the kernels of the k forms is
/// zero, equivalently the stacked flat matrix is injective.
template <class T>
PolysymplecticVerdict<T> is_polysymplectic(const PolyForm<T>& pf, double eps) {
  validate_skew(pf, eps);
  PolysymplecticVerdict<T> v;
  Mat<T> ker = nullspace(flat_matrix(pf), eps);
  if (ker.rows() == 0) {
    v.ok = true;
  } else {
    v.ok = false;
    v.witness = ker.row(0);
  }
  return v;
}

/// Canonical model on R^(m + km) with coordinates
/// (q^1..q^m, p^1_1..p^1_m, ..., p^k_1..p^k_m): w^A = dq^i wedge dp^A_i.
template <class T>
PolyForm<T> canonical_covelocity(std::size_t m, std::size_t k) {
  PolyForm<T> pf;
  pf.m = m * (1 + k);
  pf.k = k;
  pf.forms.assign(k, Mat<T>(pf.m, pf.m));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t p = m + a * m + i;
      pf.forms[a](i, p) = T(1);
      pf.forms[a](p, i) = T(-1);
    }
  return pf;
}

/// Product of k symplectic factors: component A of the result is the factor
/// form on its own block and zero elsewhere. Each factor must be
/// nondegenerate.
template <class T>
PolyForm<T> product_of_symplectic(const std::vector<Mat<T>>& factors, double eps) {
  PolyForm<T> pf;
  pf.k = factors.size();
  std::vector<std::size_t> offset(factors.size() + 1, 0);
  for (std::size_t a = 0; a < factors.size(); ++a) {
    if (factors[a].rows() != factors[a].cols())
      throw std::invalid_argument("product_of_symplectic: factor not square");
    offset[a + 1] = offset[a] + factors[a].rows();
  }
  pf.m = offset.back();
  pf.forms.assign(pf.k, Mat<T>(pf.m, pf.m));
  for (std::size_t a = 0; a < factors.size(); ++a) {
    if (rank(factors[a], eps) != factors[a].rows())
      throw std::invalid_argument("product_of_symplectic: factor " + std::to_string(a) +
                                  " is degenerate");
    pf.forms[a].set_block(offset[a], offset[a], factors[a]);
  }
  validate_skew(pf, eps);
  return pf;
}

/// Componentwise direct sum of two k-tuples: component A is the block
/// diagonal of the two component-A forms.
template <class T>
PolyForm<T> product_polyform(const PolyForm<T>& a, const PolyForm<T>& b) {
  if (a.k != b.k) throw std::invalid_argument("product_polyform: k mismatch");
  PolyForm<T> pf;
  pf.k = a.k;
  pf.m = a.m + b.m;
  pf.forms.assign(pf.k, Mat<T>(pf.m, pf.m));
  for (std::size_t c = 0; c < pf.k; ++c) {
    pf.forms[c].set_block(0, 0, a.forms[c]);
    pf.forms[c].set_block(a.m, a.m, b.forms[c]);
  }
  if (a.closedness == PolyForm<T>::Closedness::Deferred ||
      b.closedness == PolyForm<T>::Closedness::Deferred)
    pf.closedness = PolyForm<T>::Closedness::Deferred;
  return pf;
}

template <class T>
struct PullbackResult {
  bool accepted = false;
  std::vector<T> witness;  // joint kernel vector when rejected
  PolyForm<T> form;
};

/// Family (pr_A^* w_A)_A for surjective projections pr_A: R^m -> R^(m_A):
/// component A is pr_A^T w_A pr_A. Accepted exactly when the family is
/// jointly nondegenerate.
template <class T>
PullbackResult<T> pullback_family(const std::vector<Mat<T>>& projections,
                                  const std::vector<Mat<T>>& forms, double eps) {
  if (projections.size() != forms.size())
    throw std::invalid_argument("pullback_family: arity mismatch");
  if (projections.empty()) throw std::invalid_argument("pullback_family: empty family");
  const std::size_t m = projections[0].cols();
  PullbackResult<T> r;
  r.form.m = m;
  r.form.k = projections.size();
  for (std::size_t a = 0; a < projections.size(); ++a) {
    if (projections[a].cols() != m)
      throw std::invalid_argument("pullback_family: domain mismatch");
    if (forms[a].rows() != projections[a].rows() || forms[a].cols() != projections[a].rows())
      throw std::invalid_argument("pullback_family: form/projection shape mismatch");
    if (rank(projections[a], eps) != projections[a].rows())
      throw std::invalid_argument("pullback_family: projection " + std::to_string(a) +
                                  " not surjective");
    r.form.forms.push_back(projections[a].transpose() * forms[a] * projections[a]);
  }
  validate_skew(r.form, eps);
  PolysymplecticVerdict<T> v = is_polysymplectic(r.form, eps);
  r.accepted = v.ok;
  r.witness = v.witness;
  return r;
}

}  // namespace polyps

#endif
