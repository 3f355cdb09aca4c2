#pragma once

#include <optional>

#include "cml/approx_complex.hpp"
#include "cml/complex_rational.hpp"
#include "cml/rational.hpp"

namespace cml {

/// Rational fraction of a full turn: the circle point t = 2*pi*(p/q),
/// stored reduced with 0 <= p < q.
struct TurnAngle {
  BigInt p;
  BigInt q;

  TurnAngle() : p(0), q(1) {}

  Rational fraction() const { return Rational(p, q); }
  double fraction_double() const { return fraction().to_double(); }
  double radians() const;

  bool is_zero() const { return p == 0; }

  friend bool operator==(const TurnAngle& a, const TurnAngle& b) { return a.p == b.p && a.q == b.q; }
  friend bool operator!=(const TurnAngle& a, const TurnAngle& b) { return !(a == b); }
  friend bool operator<(const TurnAngle& a, const TurnAngle& b) { return a.p * b.q < b.p * a.q; }
};

/// Reduced representative of (p mod q)/q. q = 0 is rejected.
TurnAngle reduce_angle(const BigInt& p, const BigInt& q);
TurnAngle reduce_angle(long long p, long long q);

TurnAngle angle_add(const TurnAngle& a, const TurnAngle& b);
TurnAngle angle_negate(const TurnAngle& a);

/// exp(-2*pi*i*n*p/q) when n*p/q lands on a quarter turn; the four exact
/// values are the only ones representable in ComplexRational.
std::optional<ComplexRational> quarter_turn_unit(const TurnAngle& a, const BigInt& n);

/// exp(-2*pi*i*n*p/q) with a certified error bound (0 on the quarter-turn
/// path, otherwise well under 1e-12).
ApproxComplex root_of_unity(const TurnAngle& a, const BigInt& n);
ApproxComplex root_of_unity(const TurnAngle& a, long long n);

/// exp(i*theta) for a raw phase, with an error bound that grows with the
/// argument reduction |theta|.
ApproxComplex unit_phase(double theta);

}  // namespace cml
