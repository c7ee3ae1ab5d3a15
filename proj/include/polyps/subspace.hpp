#ifndef POLYPS_SUBSPACE_HPP
#define POLYPS_SUBSPACE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "polyps/matrix.hpp"

namespace polyps {

/// Linear subspace of R^ambient held by its canonical basis: the reduced row
/// echelon form of any spanning set. Two subspaces are equal exactly when
/// their basis matrices are equal, so equality tests are matrix comparisons.
template <class T>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  /// Canonicalizes a spanning family given as matrix rows.
  static Subspace span(const Mat<T>& rows, double eps) {
    Subspace s(rows.cols());
    Mat<T> r = rows;
    const std::size_t n = rref(r, eps).size();
    s.basis_ = r.block(0, 0, n, rows.cols());
    return s;
  }

  static Subspace full(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Mat<T>::identity(ambient);
    return s;
  }

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat<T>& basis() const { return basis_; }

  /// Residual of v after eliminating against the canonical basis; zero iff v
  /// lies in the subspace.
  std::vector<T> reduce(std::vector<T> v, double eps) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: ambient mismatch");
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
      std::size_t p = 0;
      while (p < ambient_ && scalar_traits<T>::is_zero(basis_(i, p), 0.0)) ++p;
      if (p == ambient_) continue;
      const T f = v[p];
      if (scalar_traits<T>::is_zero(f, 0.0)) continue;
      for (std::size_t j = 0; j < ambient_; ++j) v[j] = v[j] - f * basis_(i, j);
    }
    if constexpr (!scalar_traits<T>::exact) {
      for (T& x : v)
        if (scalar_traits<T>::is_zero(x, eps)) x = T(0);
    }
    return v;
  }

  bool contains(const std::vector<T>& v, double eps) const {
    return is_zero_vector(reduce(v, eps), eps);
  }

  bool contains(const Subspace& other, double eps) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i), eps)) return false;
    return true;
  }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Entrywise comparison of canonical bases with tolerance, for float mode.
  bool equals(const Subspace& o, double eps) const {
    if (ambient_ != o.ambient_ || dim() != o.dim()) return false;
    for (std::size_t i = 0; i < basis_.rows(); ++i)
      for (std::size_t j = 0; j < basis_.cols(); ++j)
        if (!scalar_traits<T>::is_zero(basis_(i, j) - o.basis_(i, j), eps)) return false;
    return true;
  }

 private:
  std::size_t ambient_ = 0;
  Mat<T> basis_;
};

template <class T>
Subspace<T> canonicalize(const Mat<T>& rows, double eps) {
  return Subspace<T>::span(rows, eps);
}

template <class T>
Subspace<T> sum(const Subspace<T>& a, const Subspace<T>& b, double eps) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("sum: ambient mismatch");
  return Subspace<T>::span(vstack(a.basis(), b.basis()), eps);
}

/// Annihilator of W inside the dual, identified with R^ambient through the
/// standard pairing: the nullspace of the basis matrix.
template <class T>
Subspace<T> annihilator(const Subspace<T>& w, double eps) {
  return Subspace<T>::span(nullspace(w.basis(), eps), eps);
}

/// Intersection computed through annihilators: (A0 + B0)0.
template <class T>
Subspace<T> intersect(const Subspace<T>& a, const Subspace<T>& b, double eps) {
  if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
  return annihilator(sum(annihilator(a, eps), annihilator(b, eps), eps), eps);
}

/// Preimage of the subspace t under the linear map given by matrix l
/// (codomain dimension l.rows(), domain dimension l.cols()): the kernel of
/// the composite of l with the annihilator pairing of t.
template <class T>
Subspace<T> preimage(const Mat<T>& l, const Subspace<T>& t, double eps) {
  if (t.ambient() != l.rows()) throw std::invalid_argument("preimage: codomain mismatch");
  const Subspace<T> t0 = annihilator(t, eps);
  return Subspace<T>::span(nullspace(t0.basis() * l, eps), eps);
}

/// Image of the subspace s under the linear map given by matrix l.
template <class T>
Subspace<T> image(const Mat<T>& l, const Subspace<T>& s, double eps) {
  if (s.ambient() != l.cols()) throw std::invalid_argument("image: domain mismatch");
  return Subspace<T>::span((l * s.basis().transpose()).transpose(), eps);
}

/// Quotient of R^ambient by W presented in coordinates: the complement is
/// spanned by the standard basis vectors at the non-pivot columns of W's
/// canonical basis, taken in increasing column order. projection * lift is
/// the identity on the quotient and projection annihilates exactly W.
template <class T>
struct Quotient {
  std::size_t ambient = 0;
  std::size_t dim = 0;
  Mat<T> projection;                      // dim x ambient
  Mat<T> lift;                            // ambient x dim
  std::vector<std::size_t> complement;    // ambient indices kept
};

template <class T>
Quotient<T> quotient(std::size_t ambient, const Subspace<T>& w, double /*eps*/) {
  if (w.ambient() != ambient) throw std::invalid_argument("quotient: ambient mismatch");
  const Mat<T>& r = w.basis();
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t c = 0;
    while (c < ambient && scalar_traits<T>::is_zero(r(i, c), 0.0)) ++c;
    if (c == ambient) throw std::invalid_argument("quotient: basis has a zero row");
    piv.push_back(c);
  }
  std::vector<bool> is_piv(ambient, false);
  for (std::size_t c : piv) is_piv[c] = true;
  Quotient<T> q;
  q.ambient = ambient;
  q.dim = ambient - piv.size();
  q.projection = Mat<T>(q.dim, ambient);
  q.lift = Mat<T>(ambient, q.dim);
  std::size_t row = 0;
  for (std::size_t c = 0; c < ambient; ++c) {
    if (is_piv[c]) continue;
    q.complement.push_back(c);
    q.projection(row, c) = T(1);
    for (std::size_t i = 0; i < piv.size(); ++i) q.projection(row, piv[i]) = -r(i, c);
    q.lift(c, row) = T(1);
    ++row;
  }
  return q;
}

}  // namespace polyps

#endif
