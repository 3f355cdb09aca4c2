#include "cml/obstruction.hpp"

#include <cmath>
#include <cstdio>

#include "cml/continued_fraction.hpp"
#include "cml/errors.hpp"

namespace cml {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

double drift_at(double alpha, long long m, long long s) {
  return std::fabs(static_cast<double>(m) * alpha - kTwoPi * static_cast<double>(s));
}

}  // namespace

bool detect_rational(double x) {
  if (!std::isfinite(x) || x <= 0.0) return false;
  for (const Convergent& c : convergents(x, 40)) {
    if (c.q > 1000000) break;
    double residual = std::fabs(static_cast<double>(c.q) * x - static_cast<double>(c.p));
    if (residual < 1e-12) return true;
  }
  return false;
}

ObstructionWitness exp_obstruction(double alpha, double B, long long M) {
  if (!std::isfinite(alpha)) throw invalid_input_error("alpha must be finite");
  if (!(B > 0.0)) throw invalid_input_error("target bound B must be positive");
  if (M < 1) throw invalid_input_error("search bound M must be positive");

  double a = std::fmod(alpha, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a == 0.0 || detect_rational(a / kPi)) {
    throw not_applicable_error("alpha lies in pi*Q: delta_alpha is a root-of-unity case");
  }

  // Candidates m from the convergents p/q of 2*pi/alpha: |p*alpha - 2*pi*q|
  // is minimal among all m <= p by best-approximation theory.
  ObstructionWitness best;
  bool found = false;
  for (const Convergent& c : convergents(kTwoPi / a, 40)) {
    if (c.p < 1 || c.p > M) continue;
    long long s_opt = std::llround(static_cast<double>(c.p) * a / kTwoPi);
    double d = drift_at(a, c.p, s_opt);
    if (!found || d < best.drift) {
      best.m = c.p;
      best.s = s_opt;
      best.drift = d;
      found = true;
    }
  }
  if (!found) {
    // alpha so small that even the first convergent numerator exceeds M:
    // fall back to the raw scan.
    for (long long m = 1; m <= M; ++m) {
      long long s_opt = std::llround(static_cast<double>(m) * a / kTwoPi);
      double d = drift_at(a, m, s_opt);
      if (!found || d < best.drift) {
        best.m = m;
        best.s = s_opt;
        best.drift = d;
        found = true;
      }
    }
  }

  best.alpha = alpha;
  best.target_bound = B;
  long long k = static_cast<long long>(std::ceil(B / best.drift));
  while (static_cast<double>(k) * best.drift < B) ++k;
  best.growth_index = k;

  char buf[200];
  std::snprintf(buf, sizeof(buf),
                "if delta_alpha = exp(mu) then mu_hat(n) = -i n alpha - 2 pi i l_n for integers l_n");
  best.trace.emplace_back(buf);
  std::snprintf(buf, sizeof(buf),
                "near-period m = %lld gives |m alpha - 2 pi s| = %.12g at s = %lld, forcing "
                "l_{n+m} - l_n = s for all n",
                best.m, best.drift, best.s);
  best.trace.emplace_back(buf);
  std::snprintf(buf, sizeof(buf),
                "along n0 + m k the branch drifts by %.12g per step: after k = %lld steps "
                "|mu_hat| exceeds B = %.12g",
                best.drift, best.growth_index, B);
  best.trace.emplace_back(buf);
  return best;
}

}  // namespace cml
