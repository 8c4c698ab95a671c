#ifndef CARTAN_GAUSSIAN_HPP
#define CARTAN_GAUSSIAN_HPP

#include <ostream>
#include <string>

#include "cartan/errors.hpp"
#include "cartan/rational.hpp"

namespace cartan {

/// Gaussian rational a + b*i with exact rational a, b.  The scalar field for
/// every matrix and polynomial computation in this library; no floating point
/// anywhere.
struct Gaussian {
  Rational re, im;

  Gaussian() : re(0), im(0) {}
  Gaussian(int v) : re(v), im(0) {}               // NOLINT(google-explicit-constructor)
  Gaussian(const Rational& r) : re(r), im(0) {}   // NOLINT
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Gaussian conj() const { return Gaussian(re, -im); }

  /// re^2 + im^2, a nonnegative rational; zero iff the value is zero.
  Rational norm() const { return re * re + im * im; }

  Gaussian operator-() const { return Gaussian(-re, -im); }

  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o) {
    if (o.is_zero()) throw parameter_error("Gaussian: division by zero");
    Rational n = o.norm();
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

  /// Total order used only for deterministic normalization (map keys, pivot
  /// scaling); not a field order.
  friend bool operator<(const Gaussian& a, const Gaussian& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  std::string str() const {
    if (im == 0) return re.get_str();
    std::string s = (re == 0) ? "" : re.get_str();
    std::string it = im.get_str();
    if (im > 0 && !s.empty()) s += "+";
    if (it == "1")
      s += "i";
    else if (it == "-1")
      s += "-i";
    else
      s += it + "i";
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.str(); }
};

}  // namespace cartan

#endif
