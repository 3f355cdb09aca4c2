#pragma once

#include <string>
#include <vector>

#include "cml/approx_complex.hpp"
#include "cml/measure_sum.hpp"

namespace cml {

/// A finite window of a two-sided sequence, values indexed n = lo..hi.
struct SequenceWindow {
  long long lo = 0;
  long long hi = -1;
  std::vector<ApproxComplex> values;
  std::string source;

  long long length() const { return hi - lo + 1; }
  bool contains(long long n) const { return n >= lo && n <= hi; }
  const ApproxComplex& at(long long n) const { return values[static_cast<size_t>(n - lo)]; }
};

SequenceWindow make_window(long long lo, long long hi, std::vector<ApproxComplex> values,
                           std::string source);

/// The step sequence of the density-gap experiment: 1 for n >= 0, 0 for n < 0.
SequenceWindow step_window(long long lo, long long hi);

SequenceWindow constant_window(long long lo, long long hi, ApproxComplex value);

/// Transform windows n -> mu_hat(n).
SequenceWindow transform_window(const DiscreteMeasure& m, long long lo, long long hi);
SequenceWindow transform_window(const TrigPolynomial& p, long long lo, long long hi);
SequenceWindow transform_window(const MeasureSum& m, long long lo, long long hi);
SequenceWindow transform_window(const RieszProductSpec& spec, long long lo, long long hi);

}  // namespace cml
