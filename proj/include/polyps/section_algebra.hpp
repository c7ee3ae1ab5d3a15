#ifndef POLYPS_SECTION_ALGEBRA_HPP
#define POLYPS_SECTION_ALGEBRA_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "polyps/scalar.hpp"

namespace polyps {

/// Sparse polynomial over Q in a fixed number of variables; monomials are
/// exponent vectors. Everything the bracket computations produce here stays
/// in degree <= 2, which callers assert through degree().
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Q& c);
  static Poly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t degree() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Q& c) const;
  Poly derivative(std::size_t i) const;

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  const std::map<std::vector<unsigned>, Q>& terms() const { return terms_; }

  /// Human-readable rendering with variables named x0, x1, ...
  std::string str() const;

 private:
  void insert(const std::vector<unsigned>& mono, const Q& c);

  std::size_t nvars_ = 0;
  std::map<std::vector<unsigned>, Q> terms_;
};

using PolyVec = std::vector<Poly>;

/// Componentwise field bracket [x, y]_j = x_i d(y_j)/dx_i - y_i d(x_j)/dx_i.
PolyVec field_bracket(const PolyVec& x, const PolyVec& y);

/// Lie derivative of a covector field along a vector field:
/// (L_x b)_j = x_i d(b_j)/dx_i + b_i d(x_i)/dx_j.
PolyVec lie_derivative_covector(const PolyVec& x, const PolyVec& b);

/// Gradient covector of a function.
PolyVec differential(const Poly& f, std::size_t nvars);

}  // namespace polyps

#endif
