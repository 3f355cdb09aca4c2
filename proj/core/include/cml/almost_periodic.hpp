#pragma once

#include <optional>
#include <vector>

#include "cml/sequence_window.hpp"

namespace cml {

/// One tested interval of candidate shifts: either a verified eps-period m
/// (sup_n |a_{n+m} - a_n| < eps over the window) or the interval itself as a
/// failure witness.
struct IntervalScan {
  long long interval_lo = 0;
  long long interval_hi = 0;
  std::optional<long long> period;
  double best_sup = 0.0;  // sup at the verified period, or the best failing sup
};

struct EpsilonPeriodScan {
  double eps = 0.0;
  long long p = 0;
  std::vector<IntervalScan> intervals;
  bool all_verified = false;
};

/// Tests each length-p interval [kp+1, (k+1)p] of shifts that fits inside
/// the window span for an eps-period of the windowed sequence.
EpsilonPeriodScan find_epsilon_periods(const SequenceWindow& s, double eps, long long p);

/// The step-sequence falsification: for every shift m in [1, p] the jump
/// |a_0 - a_{-m}| = 1 defeats any eps < 1.
struct StepFalsification {
  long long p = 0;
  double eps = 0.0;
  struct Witness {
    long long m;
    long long n;       // the witnessing index (n = -m)
    double jump;       // |a_{n+m} - a_n|, certified lower bound
  };
  std::vector<Witness> witnesses;
  bool falsified = false;  // every m in [1, p] defeated
};

StepFalsification ap_falsify_step(long long p, double eps, const SequenceWindow& window);

/// Principal-branch logarithms of an invertible window: exp(b_n) = a_n with
/// Im b_n in (-pi, pi]. Fails with not_invertible_error when any modulus
/// drops below `separation`.
SequenceWindow bounded_log(const SequenceWindow& s, double separation);

}  // namespace cml
