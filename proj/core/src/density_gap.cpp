#include "cml/density_gap.hpp"

#include <cmath>
#include <cstdio>

#include "cml/errors.hpp"

namespace cml {

namespace {

// Prefers the attaining index closest to the origin; negative wins ties so
// the step target reports its jump side.
bool closer_to_origin(long long a, long long b) {
  long long am = a < 0 ? -a : a, bm = b < 0 ? -b : b;
  if (am != bm) return am < bm;
  return a < b;
}

}  // namespace

GapReport density_gap_report(const MeasureSum& candidate, const SequenceWindow& target, double eps,
                             double delta, long long p) {
  if (!(eps > 0.0) || !(delta > 0.0)) throw invalid_input_error("eps and delta must be positive");
  if (p < 1) throw invalid_input_error("interval length p must be positive");
  if (target.length() < 3) throw invalid_input_error("malformed target window");

  GapReport r;
  r.candidate = candidate.describe();
  r.eps = eps;
  r.delta = delta;
  r.p = p;

  const long long lo = target.lo, hi = target.hi;
  std::vector<ApproxComplex> total(static_cast<size_t>(target.length()));
  std::vector<ApproxComplex> discrete(static_cast<size_t>(target.length()));
  std::vector<ApproxComplex> continuous(static_cast<size_t>(target.length()));
  for (long long n = lo; n <= hi; ++n) {
    size_t i = static_cast<size_t>(n - lo);
    discrete[i] = cv_approx(fourier_coefficient(candidate.discrete, n));
    continuous[i] = cv_approx(continuous_coefficient(candidate, n));
    total[i] = discrete[i] + continuous[i];
  }

  bool have_sup = false;
  for (long long n = lo; n <= hi; ++n) {
    size_t i = static_cast<size_t>(n - lo);
    double d = distance_upper(total[i], target.at(n));
    if (!have_sup || d > r.sup_distance ||
        (d == r.sup_distance && closer_to_origin(n, r.sup_at_n))) {
      r.sup_distance = d;
      r.sup_at_n = n;
      have_sup = true;
    }
  }

  if (r.sup_distance >= delta) return r;  // not delta-close; nothing to refute
  r.pipeline_ran = true;

  // Step 1: the discrete part must miss the target somewhere (Eq. (1) core).
  bool have_gap = false;
  for (long long n = lo; n <= hi; ++n) {
    size_t i = static_cast<size_t>(n - lo);
    double d = distance_upper(discrete[i], target.at(n));
    if (!have_gap || d > r.observed_gap || (d == r.observed_gap && closer_to_origin(n, r.n0))) {
      r.observed_gap = d;
      r.n0 = n;
      have_gap = true;
    }
  }
  r.lower_bound_quantity = r.observed_gap - eps - delta;

  // Step 2: near-periods of the discrete transform, one per length-p
  // interval of shifts, and the continuous-part lower bound at n0 + m.
  long long span = hi - lo;
  for (long long k = 0; (k + 1) * p <= span; ++k) {
    long long best_m = 0;
    double best_sup = -1.0;
    for (long long m = k * p + 1; m <= (k + 1) * p; ++m) {
      double sup = 0.0;
      for (long long n = lo; n + m <= hi; ++n) {
        size_t i = static_cast<size_t>(n - lo);
        size_t j = static_cast<size_t>(n + m - lo);
        double d = distance_upper(discrete[j], discrete[i]);
        if (d > sup) sup = d;
      }
      if (best_sup < 0.0 || sup < best_sup) {
        best_sup = sup;
        best_m = m;
      }
    }
    GapReport::NearPeriod np;
    np.m = best_m;
    np.discrete_shift_sup = best_sup;
    np.accepted = best_sup < eps;
    long long target_n = r.n0 + best_m;
    if (target_n >= lo && target_n <= hi) {
      np.continuous_modulus = continuous[static_cast<size_t>(target_n - lo)].modulus();
    } else {
      np.continuous_modulus = cv_approx(continuous_coefficient(candidate, target_n)).modulus();
    }
    np.bound_respected = !np.accepted || np.continuous_modulus >= r.lower_bound_quantity;
    r.accepted_periods += np.accepted ? 1 : 0;
    r.bound_violations += np.bound_respected ? 0 : 1;
    r.near_periods.push_back(np);
  }

  // Step 3: the Wiener trace on the continuous part, over windows centered
  // at n0, against the floor the near-periods would force.
  long long n0m = r.n0 < 0 ? -r.n0 : r.n0;
  double floor_base = r.lower_bound_quantity > 0.0 ? r.lower_bound_quantity : 0.0;
  for (long long k = 1; k * p + n0m <= hi && -(k * p) - n0m >= lo && k <= 16; ++k) {
    double sum = 0.0;
    for (long long n = r.n0 - k * p; n <= r.n0 + k * p; ++n) {
      double m = (n >= lo && n <= hi)
                     ? continuous[static_cast<size_t>(n - lo)].modulus()
                     : cv_approx(continuous_coefficient(candidate, n)).modulus();
      sum += m * m;
    }
    GapReport::WienerTraceRow row;
    row.k = k;
    row.average = sum / static_cast<double>(2 * k * p + 1);
    row.proof_floor =
        static_cast<double>(k) * floor_base * floor_base / static_cast<double>(2 * k * p + 2 * n0m + 1);
    r.wiener_trace.push_back(row);
  }
  return r;
}

std::string gap_report_csv(const GapReport& r) {
  std::string out = "quantity,value\n";
  char buf[160];
  auto add = [&](const char* name, double v) {
    std::snprintf(buf, sizeof(buf), "%s,%.17g\n", name, v);
    out += buf;
  };
  add("sup_distance", r.sup_distance);
  add("sup_at_n", static_cast<double>(r.sup_at_n));
  add("eps", r.eps);
  add("delta", r.delta);
  add("p", static_cast<double>(r.p));
  add("pipeline_ran", r.pipeline_ran ? 1.0 : 0.0);
  if (r.pipeline_ran) {
    add("n0", static_cast<double>(r.n0));
    add("observed_gap", r.observed_gap);
    add("lower_bound_quantity", r.lower_bound_quantity);
    add("accepted_periods", static_cast<double>(r.accepted_periods));
    add("bound_violations", static_cast<double>(r.bound_violations));
    for (const auto& row : r.wiener_trace) {
      std::snprintf(buf, sizeof(buf), "wiener_trace_k%lld,%.17g\n", row.k, row.average);
      out += buf;
    }
  }
  return out;
}

}  // namespace cml
