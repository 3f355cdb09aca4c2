#pragma once

#include <optional>
#include <vector>

#include "cml/approx_complex.hpp"
#include "cml/complex_rational.hpp"

namespace cml {

/// Element of the group ring Q(i)[Z/q] evaluated at the primitive root
/// zeta_q = exp(2*pi*i/q): the value sum_t c[t] * zeta_q^t. This is ring
/// arithmetic only (add, multiply, conjugate, zero test); zero testing
/// reduces against the cyclotomic polynomial Phi_q. It exists to give coset
/// idempotent measures exact masses; it is not a general number field.
class Cyclotomic {
public:
  static constexpr int kMaxOrder = 64;

  Cyclotomic() : order_(1), c_(1) {}

  static Cyclotomic from_complex_rational(const ComplexRational& z, int order = 1);
  /// zeta_order^expo (expo may be negative).
  static Cyclotomic root(int order, long long expo);

  int order() const { return order_; }
  const std::vector<ComplexRational>& coefficients() const { return c_; }

  /// Re-expresses the element at an order that `order_` divides.
  Cyclotomic embedded(int order2) const;

  Cyclotomic conjugate() const;
  bool is_zero() const;

  /// Canonical collapse to a Gaussian rational when the value lies in Q(i).
  std::optional<ComplexRational> as_complex_rational() const;

  ApproxComplex to_approx() const;

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a);

private:
  int order_;
  std::vector<ComplexRational> c_;  // size order_
};

/// Coefficients of Phi_q, lowest degree first. Cached; q <= Cyclotomic::kMaxOrder.
const std::vector<Rational>& cyclotomic_polynomial(int q);

}  // namespace cml
