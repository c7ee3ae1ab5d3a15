#ifndef POLYPS_MATRIX_HPP
#define POLYPS_MATRIX_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyps/scalar.hpp"

namespace polyps {

/// Dense row-major matrix over double or Q. Dimensions may be zero; every
/// operation tolerates empty blocks.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: inner dimension mismatch");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t l = 0; l < cols_; ++l) {
        const T& x = (*this)(i, l);
        if (scalar_traits<T>::is_zero(x, 0.0)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(l, j);
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Mat::operator+: shape mismatch");
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Mat::operator-: shape mismatch");
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  Mat operator-() const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
  }

  Mat scaled(const T& c) const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Mat::apply: vector length mismatch");
    std::vector<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  std::vector<T> row(std::size_t i) const {
    std::vector<T> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
    return r;
  }

  void set_row(std::size_t i, const std::vector<T>& v) {
    if (v.size() != cols_) throw std::invalid_argument("Mat::set_row: length mismatch");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }

  void set_col(std::size_t j, const std::vector<T>& v) {
    if (v.size() != rows_) throw std::invalid_argument("Mat::set_col: length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Mat block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
    if (i0 + r > rows_ || j0 + c > cols_) throw std::invalid_argument("Mat::block: out of range");
    Mat b(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) b(i, j) = (*this)(i0 + i, j0 + j);
    return b;
  }

  void set_block(std::size_t i0, std::size_t j0, const Mat& b) {
    if (i0 + b.rows() > rows_ || j0 + b.cols() > cols_)
      throw std::invalid_argument("Mat::set_block: out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

template <class T>
Mat<T> vstack(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.cols() && a.rows() != 0 && b.rows() != 0)
    throw std::invalid_argument("vstack: column mismatch");
  const std::size_t c = a.rows() != 0 ? a.cols() : b.cols();
  Mat<T> r(a.rows() + b.rows(), c);
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

template <class T>
Mat<T> hstack(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() && a.cols() != 0 && b.cols() != 0)
    throw std::invalid_argument("hstack: row mismatch");
  const std::size_t r = a.cols() != 0 ? a.rows() : b.rows();
  Mat<T> m(r, a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

/// Block-diagonal k-fold copy of a single block.
template <class T>
Mat<T> block_diag(const Mat<T>& b, std::size_t k) {
  Mat<T> m(k * b.rows(), k * b.cols());
  for (std::size_t a = 0; a < k; ++a) m.set_block(a * b.rows(), a * b.cols(), b);
  return m;
}

template <class T>
Mat<T> from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
  Mat<T> m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

// ============================================================
// Row reduction
// ============================================================

/// In-place reduced row echelon form; returns the pivot column indices.
/// Float mode selects the largest remaining entry in each column (partial
/// pivoting) and treats entries below eps as zero; exact mode takes the first
/// nonzero row. The reduced form itself is unique either way.
template <class T>
std::vector<std::size_t> rref(Mat<T>& a, double eps) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = a.rows();
    if constexpr (scalar_traits<T>::exact) {
      for (std::size_t i = r; i < a.rows(); ++i)
        if (!scalar_traits<T>::is_zero(a(i, c), eps)) {
          p = i;
          break;
        }
    } else {
      T best(0);
      for (std::size_t i = r; i < a.rows(); ++i) {
        T m = scalar_traits<T>::magnitude(a(i, c));
        if (m > best) {
          best = m;
          p = i;
        }
      }
      if (p != a.rows() && scalar_traits<T>::is_zero(best, eps)) p = a.rows();
    }
    if (p == a.rows()) {
      for (std::size_t i = r; i < a.rows(); ++i) a(i, c) = T(0);
      continue;
    }
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const T inv_piv = T(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv_piv;
    a(r, c) = T(1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const T f = a(i, c);
      if (scalar_traits<T>::is_zero(f, 0.0)) continue;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(r, j);
      a(i, c) = T(0);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = T(0);
  return pivots;
}

template <class T>
std::size_t rank(Mat<T> a, double eps) {
  return rref(a, eps).size();
}

/// Basis of the solution space of A x = 0, one row per free column of the
/// reduced form.
template <class T>
Mat<T> nullspace(const Mat<T>& a, double eps) {
  Mat<T> r = a;
  const std::vector<std::size_t> piv = rref(r, eps);
  std::vector<bool> is_piv(a.cols(), false);
  for (std::size_t c : piv) is_piv[c] = true;
  Mat<T> basis(a.cols() - piv.size(), a.cols());
  std::size_t row = 0;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_piv[f]) continue;
    basis(row, f) = T(1);
    for (std::size_t i = 0; i < piv.size(); ++i) basis(row, piv[i]) = -r(i, f);
    ++row;
  }
  return basis;
}

/// Solves A x = b. Returns false when inconsistent; free variables are set to
/// zero, so the particular solution is deterministic.
template <class T>
bool solve(const Mat<T>& a, const std::vector<T>& b, std::vector<T>& x, double eps) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  Mat<T> aug(a.rows(), a.cols() + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < a.rows(); ++i) aug(i, a.cols()) = b[i];
  const std::vector<std::size_t> piv = rref(aug, eps);
  if (!piv.empty() && piv.back() == a.cols()) return false;
  x.assign(a.cols(), T(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, a.cols());
  return true;
}

/// Solves A X = B columnwise. Returns false when any column is inconsistent.
template <class T>
bool solve_matrix(const Mat<T>& a, const Mat<T>& b, Mat<T>& x, double eps) {
  if (b.rows() != a.rows()) throw std::invalid_argument("solve_matrix: shape mismatch");
  x = Mat<T>(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::vector<T> xc;
    if (!solve(a, b.col(j), xc, eps)) return false;
    x.set_col(j, xc);
  }
  return true;
}

template <class T>
bool invert(const Mat<T>& a, Mat<T>& inv, double eps) {
  if (a.rows() != a.cols()) throw std::invalid_argument("invert: matrix not square");
  Mat<T> aug = hstack(a, Mat<T>::identity(a.rows()));
  const std::vector<std::size_t> piv = rref(aug, eps);
  if (piv.size() != a.rows()) return false;
  inv = aug.block(0, a.cols(), a.rows(), a.cols());
  return true;
}

template <class T>
bool is_zero_vector(const std::vector<T>& v, double eps) {
  for (const T& x : v)
    if (!scalar_traits<T>::is_zero(x, eps)) return false;
  return true;
}

template <class T>
bool is_zero_matrix(const Mat<T>& m, double eps) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!scalar_traits<T>::is_zero(m(i, j), eps)) return false;
  return true;
}

}  // namespace polyps

#endif
