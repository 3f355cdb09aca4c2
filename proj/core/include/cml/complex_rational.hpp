#pragma once

#include <string>

#include "cml/rational.hpp"

namespace cml {

/// Exact complex scalar with rational real and imaginary parts.
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
  ComplexRational(long long r) : re(r) {}  // NOLINT: implicit by design

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  ComplexRational conjugate() const { return {re, -im}; }

  /// |z|^2, always an exact rational.
  Rational norm_sq() const { return re * re + im * im; }

  std::string str() const {
    if (im.is_zero()) return re.str();
    return re.str() + (im < 0 ? "-" : "+") + im.abs().str() + "i";
  }

  ComplexRational& operator+=(const ComplexRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }

  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const ComplexRational& a, const ComplexRational& b) { return !(a == b); }
};

}  // namespace cml
