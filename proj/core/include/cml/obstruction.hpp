#pragma once

#include <string>
#include <vector>

namespace cml {

/// Witness that delta_alpha admits no bounded logarithm consistent with an
/// almost periodic transform: a near-return m with drift = |m*alpha - 2*pi*s|
/// small but positive, and the growth index k after which any branch of the
/// logarithm must exceed the target bound B in modulus.
struct ObstructionWitness {
  double alpha = 0.0;
  long long m = 0;
  long long s = 0;
  double drift = 0.0;
  double target_bound = 0.0;
  long long growth_index = 0;  // k with k * drift >= B
  std::vector<std::string> trace;
};

/// Searches m <= M through the convergents of 2*pi/alpha. Rejects alpha with
/// alpha/pi rational (bounded continued-fraction detection) via
/// not_applicable_error.
ObstructionWitness exp_obstruction(double alpha, double B, long long M);

/// The rationality detector used for the precondition, exposed for tests:
/// true when some convergent p/q of x has q <= 10^6 and q*|x - p/q| < 1e-12.
bool detect_rational(double x);

}  // namespace cml
