#include "polyps/section_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polyps {

void Poly::insert(const std::vector<unsigned>& mono, const Q& c) {
  if (sgn(c) == 0) return;
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
  } else {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Poly Poly::constant(std::size_t nvars, const Q& c) {
  Poly p(nvars);
  p.insert(std::vector<unsigned>(nvars, 0), c);
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::invalid_argument("Poly::variable: index out of range");
  Poly p(nvars);
  std::vector<unsigned> mono(nvars, 0);
  mono[i] = 1;
  p.insert(mono, Q(1));
  return p;
}

std::size_t Poly::degree() const {
  std::size_t d = 0;
  for (const auto& [mono, c] : terms_)
    d = std::max(d, static_cast<std::size_t>(std::accumulate(mono.begin(), mono.end(), 0u)));
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  Poly r = *this;
  for (const auto& [mono, c] : o.terms_) r.insert(mono, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  Poly r = *this;
  for (const auto& [mono, c] : o.terms_) r.insert(mono, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  Poly r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      std::vector<unsigned> mono(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) mono[i] = ma[i] + mb[i];
      r.insert(mono, ca * cb);
    }
  return r;
}

Poly Poly::scaled(const Q& c) const {
  Poly r(nvars_);
  for (const auto& [mono, coeff] : terms_) r.insert(mono, coeff * c);
  return r;
}

Poly Poly::derivative(std::size_t i) const {
  if (i >= nvars_) throw std::invalid_argument("Poly::derivative: index out of range");
  Poly r(nvars_);
  for (const auto& [mono, c] : terms_) {
    if (mono[i] == 0) continue;
    std::vector<unsigned> m = mono;
    m[i] -= 1;
    r.insert(m, c * Q(static_cast<long>(mono[i])));
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mono, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.get_str();
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < mono[i]; ++e) out += "*x" + std::to_string(i);
  }
  return out;
}

PolyVec field_bracket(const PolyVec& x, const PolyVec& y) {
  if (x.size() != y.size()) throw std::invalid_argument("field_bracket: dimension mismatch");
  const std::size_t n = x.size();
  PolyVec r(n);
  for (std::size_t j = 0; j < n; ++j) {
    Poly acc(n == 0 ? 0 : x[0].nvars());
    for (std::size_t i = 0; i < n; ++i)
      acc = acc + x[i] * y[j].derivative(i) - y[i] * x[j].derivative(i);
    r[j] = acc;
  }
  return r;
}

PolyVec lie_derivative_covector(const PolyVec& x, const PolyVec& b) {
  if (x.size() != b.size())
    throw std::invalid_argument("lie_derivative_covector: dimension mismatch");
  const std::size_t n = x.size();
  PolyVec r(n);
  for (std::size_t j = 0; j < n; ++j) {
    Poly acc(n == 0 ? 0 : x[0].nvars());
    for (std::size_t i = 0; i < n; ++i)
      acc = acc + x[i] * b[j].derivative(i) + b[i] * x[i].derivative(j);
    r[j] = acc;
  }
  return r;
}

PolyVec differential(const Poly& f, std::size_t nvars) {
  PolyVec r(nvars);
  for (std::size_t j = 0; j < nvars; ++j) r[j] = f.derivative(j);
  return r;
}

}  // namespace polyps
