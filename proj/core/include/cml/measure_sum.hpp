#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cml/measure.hpp"
#include "cml/riesz.hpp"

namespace cml {

/// A measure given by construction as discrete part plus a list of
/// continuous parts (trig polynomials and truncated Riesz products). The
/// decomposition is representational: the fields are mu_d and mu_c.
struct MeasureSum {
  using ContinuousPart = std::variant<TrigPolynomial, RieszProductSpec>;

  DiscreteMeasure discrete;
  std::vector<ContinuousPart> continuous;

  bool exact() const;
  std::string describe() const;
};

ComplexValue fourier_coefficient(const MeasureSum::ContinuousPart& part, long long n);
ComplexValue fourier_coefficient(const MeasureSum& m, long long n);

/// Transform of the continuous parts alone.
ComplexValue continuous_coefficient(const MeasureSum& m, long long n);

/// The stored components, unchanged.
std::pair<const DiscreteMeasure&, const std::vector<MeasureSum::ContinuousPart>&> decompose(
    const MeasureSum& m);

}  // namespace cml
