#include "cml/measure_sum.hpp"

namespace cml {

bool MeasureSum::exact() const {
  if (!discrete.exact()) return false;
  for (const auto& part : continuous) {
    if (const auto* tp = std::get_if<TrigPolynomial>(&part); tp && !tp->exact()) return false;
  }
  return true;
}

std::string MeasureSum::describe() const {
  std::string s = std::to_string(discrete.atom_count()) + " atom(s)";
  int polys = 0, riesz = 0;
  for (const auto& part : continuous) {
    (std::holds_alternative<TrigPolynomial>(part) ? polys : riesz) += 1;
  }
  if (polys > 0) s += " + " + std::to_string(polys) + " trig poly";
  if (riesz > 0) s += " + " + std::to_string(riesz) + " riesz spec";
  return s;
}

ComplexValue fourier_coefficient(const MeasureSum::ContinuousPart& part, long long n) {
  if (const auto* tp = std::get_if<TrigPolynomial>(&part)) return fourier_coefficient(*tp, n);
  return cv_rational(riesz_coefficient(std::get<RieszProductSpec>(part), n));
}

ComplexValue fourier_coefficient(const MeasureSum& m, long long n) {
  ComplexValue acc = fourier_coefficient(m.discrete, n);
  for (const auto& part : m.continuous) acc = cv_add(acc, fourier_coefficient(part, n));
  return acc;
}

ComplexValue continuous_coefficient(const MeasureSum& m, long long n) {
  ComplexValue acc = cv_int(0);
  for (const auto& part : m.continuous) acc = cv_add(acc, fourier_coefficient(part, n));
  return acc;
}

std::pair<const DiscreteMeasure&, const std::vector<MeasureSum::ContinuousPart>&> decompose(
    const MeasureSum& m) {
  return {m.discrete, m.continuous};
}

}  // namespace cml
