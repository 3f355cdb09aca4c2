#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cml/measure_sum.hpp"

namespace cml {

/// An explicit infinite index subset of Z, the computable stand-in for an
/// ultrafilter: frequencies of a lacunary sequence at an index family, an
/// explicit list, or all integers up to the horizon.
struct IndexSubset {
  enum class Kind { Explicit, AllIntegers, LacunaryFrequencies };
  Kind kind = Kind::AllIntegers;
  std::vector<long long> values;  // Explicit
  LacunarySequence seq;           // LacunaryFrequencies
  IndexSet at;                    // LacunaryFrequencies

  static IndexSubset explicit_list(std::vector<long long> v);
  static IndexSubset all_integers();
  static IndexSubset lacunary_frequencies(LacunarySequence seq, IndexSet at);

  /// Members with |n| <= horizon, ascending.
  std::vector<long long> enumerate(long long horizon) const;
};

/// Value source evaluated along the subset: a measure transform or a named
/// builtin sequence.
struct SequenceSource {
  std::function<ComplexValue(long long)> at;
  std::string name;

  static SequenceSource from_measure(MeasureSum m);
  static SequenceSource from_riesz(RieszProductSpec spec);
  static SequenceSource alternating();  // (-1)^n
};

struct FilterLimitResult {
  bool converged = false;
  std::optional<ComplexValue> limit;  // exact when the tail is exactly constant
  double oscillation = 0.0;           // certified tail diameter
  double liminf_re = 0.0, limsup_re = 0.0;
  double liminf_im = 0.0, limsup_im = 0.0;
  long long evaluations = 0;
};

/// Evaluates the source along the subset up to the horizon; returns the
/// limit when the tail oscillation drops below the tolerance, otherwise a
/// divergence report with liminf/limsup estimates.
FilterLimitResult filter_limit(const SequenceSource& source, const IndexSubset& along,
                               double tolerance, long long horizon);

}  // namespace cml
