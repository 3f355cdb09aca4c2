#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cml/lacunary.hpp"
#include "cml/measure.hpp"
#include "cml/rational.hpp"

namespace cml {

/// Coefficient rules a_k for a Riesz product. Constant, geometric and
/// infinite indicator rules stand for infinite families; list and finite
/// indicator rules are finite by construction.
struct ConstantRule {
  Rational value;
};
struct ListRule {
  std::vector<Rational> values;  // a_k = values[k-1], 0 past the end
};
struct IndicatorRule {
  IndexSet set;  // a_k = 1 for k in the set
};
struct GeometricRule {
  Rational first;
  Rational ratio;  // a_k = first * ratio^(k-1)
};
using CoefficientRule = std::variant<ConstantRule, ListRule, IndicatorRule, GeometricRule>;

Rational rule_value(const CoefficientRule& rule, int k);
bool rule_symbolically_finite(const CoefficientRule& rule);
std::string rule_str(const CoefficientRule& rule);

/// Finite truncation of R(a_k, n_k) = prod (1 + a_k cos(n_k t)). The
/// coefficients must satisfy -1 < a_k <= 1 for k = 1..truncation.
struct RieszProductSpec {
  LacunarySequence seq;
  CoefficientRule rule;
  int truncation = 0;

  static RieszProductSpec make(LacunarySequence seq, CoefficientRule rule, int truncation);

  /// Indices k <= truncation with a_k != 0.
  IndexSet active_indices() const;
};

/// Exact transform value: the product of a_k/2 over the digits of the
/// unique representation of n, or 0 when no representation stays inside the
/// active index set.
Rational riesz_coefficient(const RieszProductSpec& spec, long long n);

inline constexpr int kDefaultTruncationLimit = 20;
inline constexpr long long kDefaultTermLimit = 2000000;

/// Full expansion of the truncated product as a trig polynomial (support
/// size 3^K guarded by the term limit).
TrigPolynomial riesz_truncation_to_trigpoly(const RieszProductSpec& spec,
                                            int truncation_limit = kDefaultTruncationLimit,
                                            long long term_limit = kDefaultTermLimit);

struct RieszConvolutionReport {
  std::vector<int> common_active_indices;
  long long support_size_in_window = 0;
  bool full_support_finite = true;
  long long full_support_size = 0;  // meaningful when finite
  std::string finiteness_basis;
};

/// Coefficientwise product of two Riesz transforms over a shared base
/// sequence, restricted to |n| <= window, plus the digit-support reasoning
/// about the untruncated common support.
std::pair<TrigPolynomial, RieszConvolutionReport> convolve_riesz(const RieszProductSpec& a,
                                                                 const RieszProductSpec& b,
                                                                 long long window);

/// Brown-Moran divergence test sum |a_k|^n = infinity for all n, decided
/// symbolically from the rule shape.
struct BrownMoranResult {
  enum class Kind { Diverges, ConvergesForPower, Converges, Unknown } kind;
  int power = 0;  // witness power for ConvergesForPower
  std::string explanation;
};

BrownMoranResult brown_moran_check(const CoefficientRule& rule);

}  // namespace cml
