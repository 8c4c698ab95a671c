#ifndef CARTAN_POLY_HPP
#define CARTAN_POLY_HPP

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cartan/errors.hpp"
#include "cartan/gaussian.hpp"

namespace cartan {

/// Sparse polynomial in two variables over the Gaussian rationals.  The same
/// type serves two roles: homogeneous curve parameters (variables u0, u1) and
/// trigonometric expressions (variables c = cos, s = sin, reduced modulo
/// c^2 + s^2 - 1).
class Poly {
 public:
  using Monomial = std::pair<int, int>;  // exponents of (x, y)

  Poly() = default;
  Poly(const Gaussian& constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) terms_[{0, 0}] = constant;
  }
  Poly(int constant) : Poly(Gaussian(constant)) {}  // NOLINT

  static Poly monomial(int dx, int dy, Gaussian coeff = Gaussian(1)) {
    Poly p;
    if (dx < 0 || dy < 0) throw parameter_error("Poly: negative exponent");
    if (!coeff.is_zero()) p.terms_[{dx, dy}] = std::move(coeff);
    return p;
  }
  static Poly x() { return monomial(1, 0); }
  static Poly y() { return monomial(0, 1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
  }

  const std::map<Monomial, Gaussian>& terms() const { return terms_; }

  Gaussian coeff(int dx, int dy) const {
    auto it = terms_.find({dx, dy});
    return it == terms_.end() ? Gaussian(0) : it->second;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
    return d;  // -1 for the zero polynomial
  }

  /// Degree in which every monomial agrees, or -1 if inhomogeneous / zero.
  int homogeneous_degree() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.first + terms_.begin()->first.second;
    for (const auto& [m, c] : terms_)
      if (m.first + m.second != d) return -1;
    return d;
  }
  bool is_homogeneous() const { return terms_.empty() || homogeneous_degree() >= 0; }

  Poly operator-() const {
    Poly p;
    for (const auto& [m, c] : terms_) p.terms_[m] = -c;
    return p;
  }
  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        p.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
    return p;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Substitute x -> px, y -> py.
  Poly substitute(const Poly& px, const Poly& py) const {
    Poly out;
    for (const auto& [m, c] : terms_) {
      Poly t(c);
      for (int k = 0; k < m.first; ++k) t *= px;
      for (int k = 0; k < m.second; ++k) t *= py;
      out += t;
    }
    return out;
  }

  Gaussian evaluate(const Gaussian& vx, const Gaussian& vy) const {
    Gaussian out(0);
    for (const auto& [m, c] : terms_) {
      Gaussian t = c;
      for (int k = 0; k < m.first; ++k) t *= vx;
      for (int k = 0; k < m.second; ++k) t *= vy;
      out += t;
    }
    return out;
  }

  /// Leading coefficient in the deterministic monomial order (lex on
  /// exponents); used for monic normalization.
  Gaussian leading_coeff() const {
    if (terms_.empty()) return Gaussian(0);
    return terms_.rbegin()->second;
  }

  std::string str(const char* vx = "x", const char* vy = "y") const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      if (!s.empty()) s += " + ";
      std::string mono;
      if (m.first > 0) mono += std::string(vx) + (m.first > 1 ? "^" + std::to_string(m.first) : "");
      if (m.second > 0) {
        if (!mono.empty()) mono += "*";
        mono += std::string(vy) + (m.second > 1 ? "^" + std::to_string(m.second) : "");
      }
      if (mono.empty())
        s += "(" + c.str() + ")";
      else if (c == Gaussian(1))
        s += mono;
      else
        s += "(" + c.str() + ")*" + mono;
    }
    return s;
  }
  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void add_term(const Monomial& m, const Gaussian& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(m, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<Monomial, Gaussian> terms_;
};

// ── univariate helpers (coefficient vectors) ────────────────────────────────

namespace detail {

inline void trim(std::vector<Gaussian>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

inline std::vector<Gaussian> univariate_rem(std::vector<Gaussian> a,
                                            const std::vector<Gaussian>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Gaussian f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

/// Monic gcd by the Euclidean algorithm over the field Q(i).
inline std::vector<Gaussian> univariate_gcd(std::vector<Gaussian> a, std::vector<Gaussian> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = univariate_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Gaussian lead = a.back();
    for (auto& c : a) c = c / lead;
  }
  return a;
}

}  // namespace detail

/// gcd of two homogeneous polynomials in (x, y); result is homogeneous and
/// monic in the lex ordering.  Computed by dehomogenizing at y = 1 (whose gcd
/// captures all common factors except pure powers of y) and restoring the
/// common y-power separately.
inline Poly homogeneous_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int da = a.homogeneous_degree(), db = b.homogeneous_degree();
  if (da < 0 || db < 0) throw parameter_error("homogeneous_gcd: inhomogeneous input");
  std::vector<Gaussian> ca(da + 1), cb(db + 1);
  for (const auto& [m, c] : a.terms()) ca[m.first] = c;
  for (const auto& [m, c] : b.terms()) cb[m.first] = c;
  detail::trim(ca);
  detail::trim(cb);
  auto g = detail::univariate_gcd(ca, cb);
  // y-power common to both: deg deficit of the dehomogenizations.
  int ypow = std::min(da - (static_cast<int>(ca.size()) - 1),
                      db - (static_cast<int>(cb.size()) - 1));
  int gdeg = static_cast<int>(g.size()) - 1;
  Poly out;
  for (int k = 0; k <= gdeg; ++k)
    if (!g[k].is_zero()) out += Poly::monomial(k, gdeg - k + ypow, g[k]);
  return out;
}

/// Replace s^2 by 1 - c^2 until the s-degree is at most 1 (variables
/// x = cos, y = sin); the canonical representative modulo c^2 + s^2 - 1.
inline Poly trig_normal_form(const Poly& p) {
  Poly out;
  Poly one_minus_c2 = Poly(1) - Poly::x() * Poly::x();
  for (const auto& [m, coeff] : p.terms()) {
    Poly t = Poly::monomial(m.first, m.second % 2, coeff);
    for (int k = 0; k < m.second / 2; ++k) t *= one_minus_c2;
    out += t;
  }
  return out;
}

/// Tangent half-angle homogenization: an expression in (c, s) of total degree
/// <= target_degree becomes a homogeneous polynomial of degree
/// 2*target_degree in (u0, u1) under c -> u0^2-u1^2, s -> 2 u0 u1,
/// 1 -> u0^2+u1^2.
inline Poly weierstrass_homogenize(const Poly& p, int target_degree) {
  if (p.total_degree() > target_degree)
    throw parameter_error("weierstrass_homogenize: degree exceeds target");
  Poly c_sub = Poly::monomial(2, 0) - Poly::monomial(0, 2);
  Poly s_sub = Poly::monomial(1, 1, Gaussian(2));
  Poly w_sub = Poly::monomial(2, 0) + Poly::monomial(0, 2);
  Poly out;
  for (const auto& [m, coeff] : p.terms()) {
    Poly t(coeff);
    for (int k = 0; k < m.first; ++k) t *= c_sub;
    for (int k = 0; k < m.second; ++k) t *= s_sub;
    for (int k = 0; k < target_degree - m.first - m.second; ++k) t *= w_sub;
    out += t;
  }
  return out;
}

}  // namespace cartan

#endif
