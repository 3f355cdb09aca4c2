#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cml/measure_sum.hpp"

namespace cml {

/// Spectrum diagnostics output. kind = finite-set carries the point list
/// (Zafran trig polynomials); kind = disk carries a radius enclosure;
/// kind = gap-report certifies that the sampled transform range misses part
/// of the claimed spectrum, with a witness point and its distance.
struct SpectrumReport {
  enum class Kind { FiniteSet, Disk, GapReport };
  Kind kind = Kind::FiniteSet;

  std::vector<ApproxComplex> points;  // finite-set points or sampled range
  double radius_lo = 0.0;
  double radius_hi = 0.0;
  std::optional<ApproxComplex> witness;
  double gap = 0.0;  // distance from the witness to the sampled range's line

  bool precondition_failed = false;
  std::string note;
};

/// Zafran's formula for trig polynomials: sigma = coefficient values + {0}.
SpectrumReport trigpoly_spectrum(const TrigPolynomial& p);

/// Power-norm spectral radius bounds u_m = TV(mu^(*m))^(1/m), m = 1..M, each
/// an enclosure, plus the running minimum of the upper ends.
struct RadiusBounds {
  struct Enclosure {
    double lo;
    double hi;
  };
  std::vector<Enclosure> u;
  std::vector<double> running_min_upper;
};

RadiusBounds spectral_radius_upper(const DiscreteMeasure& m, int M);

/// Natural-spectrum gap report for a Brown-Moran Riesz product: claimed
/// spectrum is the unit disk, sampled transform values are real, witness i
/// sits at distance 1 from the real line.
SpectrumReport natural_spectrum_gap(const RieszProductSpec& spec, long long window);

}  // namespace cml
