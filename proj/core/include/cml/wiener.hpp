#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cml/measure_sum.hpp"

namespace cml {

/// A nonnegative quantity that is either an exact rational or a double with
/// a certified absolute error bound.
struct WienerValue {
  std::optional<Rational> exact;
  double value = 0.0;  // double view in both cases
  double err = 0.0;

  static WienerValue from_exact(const Rational& r) { return {r, r.to_double(), 0.0}; }
  static WienerValue from_approx(double v, double e) { return {std::nullopt, v, e}; }
};

/// (1/(2N+1)) * sum_{|n|<=N} |mu_hat(n)|^2. Exact whenever every coefficient
/// in the window is exact (Riesz specs always are).
WienerValue wiener_average(const DiscreteMeasure& m, long long N);
WienerValue wiener_average(const TrigPolynomial& p, long long N);
WienerValue wiener_average(const MeasureSum& m, long long N);
WienerValue wiener_average(const RieszProductSpec& spec, long long N);

/// sum_j |c_j|^2 over the atoms. Exact for rational masses; an enclosure is
/// attached for the rest.
struct MassSum {
  std::optional<Rational> exact;
  double lo = 0.0;
  double hi = 0.0;
};

MassSum atom_mass_sum(const DiscreteMeasure& m);

struct WienerReport {
  std::vector<long long> Ns;
  std::vector<WienerValue> averages;
  Rational limit_claim;
  bool claim_exact = true;
  std::vector<double> abs_errors;     // |average - claim| per N
  std::vector<bool> non_increasing;   // first entry is trivially true
  bool converging = false;            // final error <= first error
  std::string source;
};

WienerReport wiener_report(const DiscreteMeasure& m, const std::vector<long long>& Ns);
WienerReport wiener_report(const MeasureSum& m, const std::vector<long long>& Ns);
WienerReport wiener_report(const RieszProductSpec& spec, const std::vector<long long>& Ns);
WienerReport wiener_report(const TrigPolynomial& p, const std::vector<long long>& Ns);

/// CSV with the interface columns N, average, claim, abs_error.
std::string wiener_report_csv(const WienerReport& report);

}  // namespace cml
