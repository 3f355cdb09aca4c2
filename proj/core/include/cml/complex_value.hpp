#pragma once

#include <optional>
#include <string>
#include <variant>

#include "cml/approx_complex.hpp"
#include "cml/complex_rational.hpp"
#include "cml/cyclotomic.hpp"

namespace cml {

/// A complex scalar on one of three tiers: exact Gaussian rational, exact
/// cyclotomic (coset-idempotent masses), or double with tracked error.
/// Arithmetic promotes upward: rational op cyclotomic stays exact, anything
/// touching an approximate value becomes approximate.
using ComplexValue = std::variant<ComplexRational, Cyclotomic, ApproxComplex>;

inline ComplexValue cv_rational(const Rational& re, const Rational& im = Rational(0)) {
  return ComplexRational(re, im);
}
inline ComplexValue cv_int(long long n) { return ComplexRational(Rational(n)); }

bool is_exact(const ComplexValue& v);

/// True only when the value is exactly zero: decides for exact tiers, and
/// for the approximate tier only the degenerate (0, 0, err 0) case.
bool exact_zero(const ComplexValue& v);

ComplexValue cv_add(const ComplexValue& a, const ComplexValue& b);
ComplexValue cv_sub(const ComplexValue& a, const ComplexValue& b);
ComplexValue cv_mul(const ComplexValue& a, const ComplexValue& b);
ComplexValue cv_neg(const ComplexValue& v);
ComplexValue cv_conj(const ComplexValue& v);

/// Exact equality of two exact values; throws not_decidable_error if either
/// side is approximate.
bool cv_exact_equal(const ComplexValue& a, const ComplexValue& b);

ApproxComplex cv_approx(const ComplexValue& v);

/// The Gaussian-rational form, when the value has one.
std::optional<ComplexRational> cv_as_complex_rational(const ComplexValue& v);

/// Exact |z|^2 as a rational, when representable on the value's tier.
std::optional<Rational> cv_norm_sq_rational(const ComplexValue& v);

std::string cv_str(const ComplexValue& v);

}  // namespace cml
