#pragma once

#include <string>
#include <vector>

#include "cml/sequence_window.hpp"

namespace cml {

/// Report of one candidate's attempt to approximate a target sequence in the
/// sup norm, with the proof-pipeline quantities when the candidate is
/// delta-close: the discrete-part gap at n0, near-periods of the discrete
/// transform, the continuous-part lower bound, and the Wiener-average trace
/// that exhibits the contradiction.
struct GapReport {
  std::string candidate;
  double eps = 0.0;
  double delta = 0.0;
  long long p = 0;

  double sup_distance = 0.0;
  long long sup_at_n = 0;

  bool pipeline_ran = false;
  long long n0 = 0;
  double observed_gap = 0.0;  // max_n |mu_d_hat(n) - a_n|, the c/2 stand-in

  struct NearPeriod {
    long long m;
    double discrete_shift_sup;   // sup_n |mu_d_hat(n+m) - mu_d_hat(n)|
    bool accepted;               // below eps
    double continuous_modulus;   // |mu_c_hat(n0 + m)|
    bool bound_respected;        // continuous_modulus >= observed_gap - eps - delta
  };
  std::vector<NearPeriod> near_periods;
  double lower_bound_quantity = 0.0;  // observed_gap - eps - delta
  long long accepted_periods = 0;
  long long bound_violations = 0;

  struct WienerTraceRow {
    long long k;
    double average;      // (1/(2kp+1)) sum |mu_c_hat(n)|^2 over [n0-kp, n0+kp]
    double proof_floor;  // k*(lower bound)^2 / (2kp + 2|n0| + 1)
  };
  std::vector<WienerTraceRow> wiener_trace;
};

/// Runs the sup-distance measurement of `candidate` against `target` over
/// the target's window, then the proof pipeline when sup < delta.
GapReport density_gap_report(const MeasureSum& candidate, const SequenceWindow& target, double eps,
                             double delta, long long p);

/// CSV rows quantity,value.
std::string gap_report_csv(const GapReport& report);

}  // namespace cml
