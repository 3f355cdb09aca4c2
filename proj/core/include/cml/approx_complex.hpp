#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "cml/complex_rational.hpp"

namespace cml {

/// Complex double with a tracked absolute error bound: the represented value
/// z satisfies |z - (re + i*im)| <= err. Every operation propagates the bound
/// and adds a 4-ulp rounding slack.
struct ApproxComplex {
  double re = 0.0;
  double im = 0.0;
  double err = 0.0;

  ApproxComplex() = default;
  ApproxComplex(double r, double i, double e = 0.0) : re(r), im(i), err(e) {}

  static constexpr double kEps = std::numeric_limits<double>::epsilon();

  static double slack(double r, double i) { return 4.0 * kEps * (std::fabs(r) + std::fabs(i)); }

  /// Conversion error of an exact complex rational is zero when both parts
  /// are dyadic, otherwise bounded by one ulp per component.
  static ApproxComplex from_exact(const ComplexRational& z) {
    double r = z.re.to_double();
    double i = z.im.to_double();
    bool dyadic = Rational::from_double(r) == z.re && Rational::from_double(i) == z.im;
    double e = dyadic ? 0.0 : kEps * (std::fabs(r) + std::fabs(i));
    return {r, i, e};
  }

  double modulus() const { return std::hypot(re, im); }
  double modulus_upper() const { return modulus() * (1.0 + 2.0 * kEps) + err; }
  double modulus_lower() const { return std::max(0.0, modulus() * (1.0 - 2.0 * kEps) - err); }

  ApproxComplex conjugate() const { return {re, -im, err}; }

  friend ApproxComplex operator-(const ApproxComplex& a) { return {-a.re, -a.im, a.err}; }

  friend ApproxComplex operator+(const ApproxComplex& a, const ApproxComplex& b) {
    double r = a.re + b.re, i = a.im + b.im;
    return {r, i, a.err + b.err + slack(r, i)};
  }
  friend ApproxComplex operator-(const ApproxComplex& a, const ApproxComplex& b) {
    double r = a.re - b.re, i = a.im - b.im;
    return {r, i, a.err + b.err + slack(r, i)};
  }
  friend ApproxComplex operator*(const ApproxComplex& a, const ApproxComplex& b) {
    double r = a.re * b.re - a.im * b.im;
    double i = a.re * b.im + a.im * b.re;
    double ma = std::hypot(a.re, a.im) * (1.0 + 2.0 * kEps);
    double mb = std::hypot(b.re, b.im) * (1.0 + 2.0 * kEps);
    double e = ma * b.err + mb * a.err + a.err * b.err + 4.0 * slack(r, i);
    return {r, i, e};
  }

  /// Distance upper bound |a - b| + errors; usable as a certified bound on
  /// the distance between the represented values.
  friend double distance_upper(const ApproxComplex& a, const ApproxComplex& b) {
    return std::hypot(a.re - b.re, a.im - b.im) * (1.0 + 2.0 * kEps) + a.err + b.err;
  }
  friend double distance_lower(const ApproxComplex& a, const ApproxComplex& b) {
    double d = std::hypot(a.re - b.re, a.im - b.im) * (1.0 - 2.0 * kEps) - a.err - b.err;
    return std::max(0.0, d);
  }
};

/// |z|^2 with propagated error bound, as (value, err) on the real line.
struct ApproxReal {
  double value = 0.0;
  double err = 0.0;
};

inline ApproxReal norm_sq(const ApproxComplex& z) {
  double v = z.re * z.re + z.im * z.im;
  double m = z.modulus();
  double e = 2.0 * m * z.err + z.err * z.err + 8.0 * ApproxComplex::kEps * v;
  return {v, e};
}

}  // namespace cml
