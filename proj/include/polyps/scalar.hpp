#ifndef POLYPS_SCALAR_HPP
#define POLYPS_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace polyps {

/// Exact rational scalar. All structure-constant identity checks run over Q.
using Q = mpq_class;

enum class ScalarMode { Float64, ExactRational };

/// Scalar configuration: float64 carries a rank-decision tolerance, exact
/// rationals perform no rounding and ignore it.
struct Scalar {
  ScalarMode mode = ScalarMode::Float64;
  double epsilon = 1e-9;

  static Scalar float64(double eps = 1e-9) {
    if (!(eps > 0.0)) throw std::invalid_argument("Scalar: epsilon must be > 0 in float mode");
    return Scalar{ScalarMode::Float64, eps};
  }
  static Scalar exact() { return Scalar{ScalarMode::ExactRational, 0.0}; }
};

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static bool is_zero(double x, double eps) { return std::fabs(x) <= eps; }
  static double magnitude(double x) { return std::fabs(x); }
  static const char* name() { return "float64"; }
};

template <>
struct scalar_traits<Q> {
  static constexpr bool exact = true;
  static bool is_zero(const Q& x, double) { return sgn(x) == 0; }
  static Q magnitude(const Q& x) { return abs(x); }
  static const char* name() { return "exact-rational"; }
};

/// Parses "p/q" or a plain integer string into a canonical rational.
inline Q parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  Q q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

/// Renders a rational as "p" or "p/q" with positive denominator.
inline std::string to_string(const Q& q) { return q.get_str(); }

}  // namespace polyps

#endif
