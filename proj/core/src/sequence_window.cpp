#include "cml/sequence_window.hpp"

#include "cml/errors.hpp"

namespace cml {

namespace {

void check_bounds(long long lo, long long hi) {
  if (hi < lo) throw invalid_input_error("window with hi < lo");
}

template <typename F>
SequenceWindow build(long long lo, long long hi, std::string source, F value_at) {
  check_bounds(lo, hi);
  SequenceWindow w;
  w.lo = lo;
  w.hi = hi;
  w.source = std::move(source);
  w.values.reserve(static_cast<size_t>(hi - lo + 1));
  for (long long n = lo; n <= hi; ++n) w.values.push_back(value_at(n));
  return w;
}

}  // namespace

SequenceWindow make_window(long long lo, long long hi, std::vector<ApproxComplex> values,
                           std::string source) {
  check_bounds(lo, hi);
  if (static_cast<long long>(values.size()) != hi - lo + 1) {
    throw invalid_input_error("window length does not match bounds");
  }
  return {lo, hi, std::move(values), std::move(source)};
}

SequenceWindow step_window(long long lo, long long hi) {
  return build(lo, hi, "step", [](long long n) { return ApproxComplex(n >= 0 ? 1.0 : 0.0, 0.0); });
}

SequenceWindow constant_window(long long lo, long long hi, ApproxComplex value) {
  return build(lo, hi, "constant", [&](long long) { return value; });
}

SequenceWindow transform_window(const DiscreteMeasure& m, long long lo, long long hi) {
  return build(lo, hi, "measure-transform",
               [&](long long n) { return cv_approx(fourier_coefficient(m, n)); });
}

SequenceWindow transform_window(const TrigPolynomial& p, long long lo, long long hi) {
  return build(lo, hi, "trigpoly-transform",
               [&](long long n) { return cv_approx(fourier_coefficient(p, n)); });
}

SequenceWindow transform_window(const MeasureSum& m, long long lo, long long hi) {
  return build(lo, hi, "measure-transform",
               [&](long long n) { return cv_approx(fourier_coefficient(m, n)); });
}

SequenceWindow transform_window(const RieszProductSpec& spec, long long lo, long long hi) {
  return build(lo, hi, "riesz-transform", [&](long long n) {
    return ApproxComplex(riesz_coefficient(spec, n).to_double(), 0.0);
  });
}

}  // namespace cml
