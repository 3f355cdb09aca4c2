#pragma once

#include <cstdlib>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cml/complex_value.hpp"
#include "cml/turn_angle.hpp"

namespace cml {

/// Atom position: exact rational fraction of a turn, or a raw float angle in
/// radians. Float positions are kept out of every exact-equality path.
using Position = std::variant<TurnAngle, double>;

Position position_from_radians(double theta);
double position_radians(const Position& p);
double position_fraction(const Position& p);
bool position_equal(const Position& a, const Position& b);
bool position_less(const Position& a, const Position& b);
Position position_add(const Position& a, const Position& b);
Position position_negate(const Position& a);

/// Cap on atom counts produced by convolution and power iterations.
/// Overridable through the CML_MAX_ATOMS environment variable.
long long max_atoms();

/// Finite atomic measure on the circle, canonical form: atoms ordered by
/// position, positions pairwise distinct, no exactly-zero masses.
class DiscreteMeasure {
public:
  struct Atom {
    Position position;
    ComplexValue mass;
  };

  DiscreteMeasure() = default;  // zero measure

  static DiscreteMeasure from_atoms(std::vector<Atom> atoms);
  static DiscreteMeasure delta(const Position& at, const ComplexValue& mass = cv_int(1));

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool is_zero() const { return atoms_.empty(); }
  std::size_t atom_count() const { return atoms_.size(); }

  /// True when every position is a TurnAngle and every mass is exact.
  bool exact() const;

  DiscreteMeasure scaled(const ComplexValue& c) const;

  friend DiscreteMeasure operator+(const DiscreteMeasure& a, const DiscreteMeasure& b);

private:
  std::vector<Atom> atoms_;
};

/// Finitely supported coefficient map n -> mu_hat(n); the computable model
/// of an absolutely continuous measure. No stored coefficient is zero.
class TrigPolynomial {
public:
  TrigPolynomial() = default;  // zero polynomial

  static TrigPolynomial from_coefficients(std::map<long long, ComplexValue> coeffs);

  const std::map<long long, ComplexValue>& coefficients() const { return coeffs_; }
  ComplexValue coefficient(long long n) const;
  std::vector<long long> support() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool exact() const;

  /// Density value sum c_n e^{int} at angle t (radians).
  ApproxComplex evaluate(double t) const;

private:
  std::map<long long, ComplexValue> coeffs_;
};

ComplexValue fourier_coefficient(const DiscreteMeasure& m, long long n);
ComplexValue fourier_coefficient(const TrigPolynomial& p, long long n);

DiscreteMeasure convolve(const DiscreteMeasure& a, const DiscreteMeasure& b);
TrigPolynomial convolve(const TrigPolynomial& a, const TrigPolynomial& b);
TrigPolynomial convolve(const DiscreteMeasure& a, const TrigPolynomial& b);
TrigPolynomial convolve(const TrigPolynomial& a, const DiscreteMeasure& b);

DiscreteMeasure involution(const DiscreteMeasure& m);
TrigPolynomial involution(const TrigPolynomial& p);

/// Exact equality of canonical forms; throws not_decidable_error unless both
/// operands are exact.
bool exact_equal(const DiscreteMeasure& a, const DiscreteMeasure& b);

/// Enclosure of the total variation norm sum |c_j|. Width <= 1e-12 per atom.
struct TotalVariation {
  Rational lower;
  Rational upper;
  double lower_double() const { return lower.to_double(); }
  double upper_double() const { return upper.to_double(); }
};

TotalVariation total_variation(const DiscreteMeasure& m);

/// Enclosure of sqrt(v) for v >= 0 with width <= 1e-12 (exact when v is the
/// square of a rational).
std::pair<Rational, Rational> rational_sqrt_enclosure(const Rational& v);

}  // namespace cml
