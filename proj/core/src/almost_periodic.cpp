#include "cml/almost_periodic.hpp"

#include <cmath>

#include "cml/errors.hpp"

namespace cml {

namespace {

// Certified sup over the overlap of |a_{n+m} - a_n|; upper = true gives an
// upper bound (for verification), false a lower bound (for refutation).
double shifted_sup(const SequenceWindow& s, long long m, bool upper) {
  double sup = 0.0;
  for (long long n = s.lo; n + m <= s.hi; ++n) {
    double d = upper ? distance_upper(s.at(n + m), s.at(n)) : distance_lower(s.at(n + m), s.at(n));
    if (d > sup) sup = d;
  }
  return sup;
}

}  // namespace

EpsilonPeriodScan find_epsilon_periods(const SequenceWindow& s, double eps, long long p) {
  if (eps <= 0.0) throw invalid_input_error("eps must be positive");
  if (p < 1) throw invalid_input_error("interval length p must be positive");
  long long span = s.hi - s.lo;
  if (p > span) throw insufficient_data_error("window too short to test one interval of shifts");

  EpsilonPeriodScan scan;
  scan.eps = eps;
  scan.p = p;
  scan.all_verified = true;
  for (long long k = 0; (k + 1) * p <= span; ++k) {
    IntervalScan iv;
    iv.interval_lo = k * p + 1;
    iv.interval_hi = (k + 1) * p;
    double best = -1.0;
    for (long long m = iv.interval_lo; m <= iv.interval_hi; ++m) {
      double sup = shifted_sup(s, m, /*upper=*/true);
      if (best < 0.0 || sup < best) best = sup;
      if (sup < eps) {
        iv.period = m;
        iv.best_sup = sup;
        break;
      }
    }
    if (!iv.period) {
      iv.best_sup = best;
      scan.all_verified = false;
    }
    scan.intervals.push_back(iv);
  }
  return scan;
}

StepFalsification ap_falsify_step(long long p, double eps, const SequenceWindow& window) {
  if (p < 1) throw invalid_input_error("p must be positive");
  if (!(eps > 0.0 && eps < 1.0)) {
    throw invalid_input_error("no falsification claimed unless eps lies in (0,1)");
  }
  if (!window.contains(-p - 1) || !window.contains(p + 1)) {
    throw insufficient_data_error("window must contain [-p-1, p+1]");
  }
  StepFalsification out;
  out.p = p;
  out.eps = eps;
  out.falsified = true;
  for (long long m = 1; m <= p; ++m) {
    // Scan upward; the first maximizer of the certified jump. The reported
    // jump is the measured distance; certification subtracts the errors.
    long long best_n = window.lo;
    double best_cert = -1.0, best_raw = 0.0;
    for (long long n = window.lo; n + m <= window.hi; ++n) {
      const ApproxComplex& a = window.at(n + m);
      const ApproxComplex& b = window.at(n);
      double raw = std::hypot(a.re - b.re, a.im - b.im);
      double cert = distance_lower(a, b);
      if (cert > best_cert) {
        best_cert = cert;
        best_raw = raw;
        best_n = n;
      }
    }
    out.witnesses.push_back({m, best_n, best_raw});
    if (best_cert < eps) out.falsified = false;
  }
  return out;
}

SequenceWindow bounded_log(const SequenceWindow& s, double separation) {
  if (!(separation > 0.0)) throw invalid_input_error("separation must be positive");
  SequenceWindow out;
  out.lo = s.lo;
  out.hi = s.hi;
  out.source = "log(" + s.source + ")";
  out.values.reserve(s.values.size());
  for (long long n = s.lo; n <= s.hi; ++n) {
    const ApproxComplex& a = s.at(n);
    double r = a.modulus();
    if (r < separation) {
      throw not_invertible_error("window value below the separation at n = " + std::to_string(n));
    }
    constexpr double kPi = 3.141592653589793238462643383279502884;
    double re = std::log(r);
    double im = std::atan2(a.im, a.re);
    if (im == -kPi) im = kPi;  // principal branch is (-pi, pi]
    double err = 0.0;
    if (a.err > 0.0 && a.err < r) {
      err = a.err / (r - a.err) * (1.0 + 4.0 * ApproxComplex::kEps);
    } else if (a.err >= r) {
      throw not_invertible_error("error bound swallows the modulus at n = " + std::to_string(n));
    }
    err += 8.0 * ApproxComplex::kEps * (std::fabs(re) + 4.0);
    out.values.push_back({re, im, err});
  }
  return out;
}

}  // namespace cml
