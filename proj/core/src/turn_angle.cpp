#include "cml/turn_angle.hpp"

#include <cmath>

#include "cml/errors.hpp"

namespace cml {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// exp(-2*pi*i*m/q) for 0 <= m < q, evaluated in double. The phase is below
// 2*pi, so the absolute error stays under a few ulp of 2*pi; 1e-14 is a
// comfortable certified bound.
constexpr double kRootErr = 1e-14;

}  // namespace

double TurnAngle::radians() const { return kTwoPi * fraction_double(); }

TurnAngle reduce_angle(const BigInt& p, const BigInt& q) {
  if (q == 0) throw invalid_input_error("angle denominator must be positive");
  BigInt qq = q < 0 ? -q : q;
  BigInt pp = q < 0 ? -p : p;
  pp %= qq;
  if (pp < 0) pp += qq;
  BigInt g = boost::multiprecision::gcd(pp, qq);
  if (g > 1) {
    pp /= g;
    qq /= g;
  }
  TurnAngle a;
  a.p = pp;
  a.q = qq;
  return a;
}

TurnAngle reduce_angle(long long p, long long q) { return reduce_angle(BigInt(p), BigInt(q)); }

TurnAngle angle_add(const TurnAngle& a, const TurnAngle& b) {
  return reduce_angle(a.p * b.q + b.p * a.q, a.q * b.q);
}

TurnAngle angle_negate(const TurnAngle& a) { return reduce_angle(-a.p, a.q); }

std::optional<ComplexRational> quarter_turn_unit(const TurnAngle& a, const BigInt& n) {
  BigInt m = (n * a.p) % a.q;
  if (m < 0) m += a.q;
  if ((4 * m) % a.q != 0) return std::nullopt;
  // m/q in {0, 1/4, 1/2, 3/4}; negative exponent convention.
  long long idx = BigInt((4 * m) / a.q).convert_to<long long>();
  switch (idx) {
    case 0: return ComplexRational(1);
    case 1: return ComplexRational(Rational(0), Rational(-1));
    case 2: return ComplexRational(-1);
    default: return ComplexRational(Rational(0), Rational(1));
  }
}

ApproxComplex root_of_unity(const TurnAngle& a, const BigInt& n) {
  if (auto exact = quarter_turn_unit(a, n)) {
    return {exact->re.to_double(), exact->im.to_double(), 0.0};
  }
  BigInt m = (n * a.p) % a.q;
  if (m < 0) m += a.q;
  double frac = Rational(m, a.q).to_double();
  double theta = kTwoPi * frac;
  return {std::cos(theta), -std::sin(theta), kRootErr};
}

ApproxComplex root_of_unity(const TurnAngle& a, long long n) { return root_of_unity(a, BigInt(n)); }

ApproxComplex unit_phase(double theta) {
  double reduced = std::remainder(theta, kTwoPi);
  // Reduction inherits the relative rounding of theta itself.
  double err = 4.0 * ApproxComplex::kEps * (std::fabs(theta) + 1.0) + kRootErr;
  return {std::cos(reduced), std::sin(reduced), err};
}

}  // namespace cml
