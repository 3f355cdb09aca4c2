#include "cml/wiener.hpp"

#include <cmath>
#include <cstdio>

#include "cml/errors.hpp"

namespace cml {

namespace {

// Accumulates |value|^2 terms, staying exact as long as every term is.
struct SquareAccumulator {
  Rational exact_part = 0;
  double approx_part = 0.0;
  double err = 0.0;
  bool all_exact = true;

  void add(const ComplexValue& v) {
    if (auto nsq = cv_norm_sq_rational(v)) {
      exact_part += *nsq;
      return;
    }
    all_exact = false;
    ApproxReal sq = norm_sq(cv_approx(v));
    approx_part += sq.value;
    err += sq.err + 4.0 * ApproxComplex::kEps * sq.value;
  }

  WienerValue divided_by(long long denom) const {
    if (all_exact) {
      return WienerValue::from_exact(exact_part / Rational(denom));
    }
    double total = (exact_part.to_double() + approx_part) / static_cast<double>(denom);
    return WienerValue::from_approx(total, err / static_cast<double>(denom) +
                                               8.0 * ApproxComplex::kEps * std::fabs(total));
  }
};

template <typename CoefficientAt>
WienerValue average_over_window(long long N, CoefficientAt at) {
  if (N < 1) throw invalid_input_error("wiener average needs N >= 1");
  SquareAccumulator acc;
  for (long long n = -N; n <= N; ++n) acc.add(at(n));
  return acc.divided_by(2 * N + 1);
}

}  // namespace

WienerValue wiener_average(const DiscreteMeasure& m, long long N) {
  return average_over_window(N, [&](long long n) { return fourier_coefficient(m, n); });
}

WienerValue wiener_average(const TrigPolynomial& p, long long N) {
  if (N < 1) throw invalid_input_error("wiener average needs N >= 1");
  // Finite support: only stored coefficients contribute.
  SquareAccumulator acc;
  for (const auto& [n, c] : p.coefficients()) {
    if (n >= -N && n <= N) acc.add(c);
  }
  return acc.divided_by(2 * N + 1);
}

WienerValue wiener_average(const MeasureSum& m, long long N) {
  return average_over_window(N, [&](long long n) { return fourier_coefficient(m, n); });
}

WienerValue wiener_average(const RieszProductSpec& spec, long long N) {
  if (N < 1) throw invalid_input_error("wiener average needs N >= 1");
  // The transform is supported on the tilde set of the active indices;
  // enumerating it beats scanning the window for sparse sequences.
  Rational sum = 0;
  for (long long n : tilde_set(spec.active_indices(), spec.seq, N)) {
    Rational c = riesz_coefficient(spec, n);
    sum += c * c;
  }
  return WienerValue::from_exact(sum / Rational(2 * N + 1));
}

MassSum atom_mass_sum(const DiscreteMeasure& m) {
  Rational exact = 0;
  double lo = 0.0, hi = 0.0;
  bool all_exact = true;
  for (const auto& a : m.atoms()) {
    if (auto nsq = cv_norm_sq_rational(a.mass)) {
      exact += *nsq;
      continue;
    }
    all_exact = false;
    ApproxComplex z = cv_approx(a.mass);
    double u = z.modulus_upper(), l = z.modulus_lower();
    lo += l * l;
    hi += u * u * (1.0 + 4.0 * ApproxComplex::kEps);
  }
  MassSum out;
  out.lo = exact.to_double() + lo;
  out.hi = exact.to_double() + hi;
  if (all_exact) out.exact = exact;
  return out;
}

namespace {

template <typename M>
WienerReport report_impl(const M& m, const std::vector<long long>& Ns, MassSum claim,
                         std::string source) {
  if (Ns.empty()) throw invalid_input_error("wiener report needs at least one N");
  for (size_t i = 1; i < Ns.size(); ++i) {
    if (Ns[i] <= Ns[i - 1]) throw invalid_input_error("wiener N list must increase");
  }
  WienerReport r;
  r.Ns = Ns;
  r.source = std::move(source);
  r.claim_exact = claim.exact.has_value();
  r.limit_claim = claim.exact ? *claim.exact : Rational::from_double((claim.lo + claim.hi) / 2);
  double claim_d = r.limit_claim.to_double();
  for (long long N : Ns) {
    WienerValue v = wiener_average(m, N);
    r.abs_errors.push_back(std::fabs(v.value - claim_d));
    r.averages.push_back(std::move(v));
  }
  for (size_t i = 0; i < r.abs_errors.size(); ++i) {
    r.non_increasing.push_back(i == 0 || r.abs_errors[i] <= r.abs_errors[i - 1]);
  }
  r.converging = r.abs_errors.back() <= r.abs_errors.front();
  return r;
}

}  // namespace

WienerReport wiener_report(const DiscreteMeasure& m, const std::vector<long long>& Ns) {
  return report_impl(m, Ns, atom_mass_sum(m), "discrete measure");
}

WienerReport wiener_report(const MeasureSum& m, const std::vector<long long>& Ns) {
  // Continuous parts contribute nothing to the Wiener limit.
  return report_impl(m, Ns, atom_mass_sum(m.discrete), m.describe());
}

WienerReport wiener_report(const RieszProductSpec& spec, const std::vector<long long>& Ns) {
  MassSum zero;
  zero.exact = Rational(0);
  return report_impl(spec, Ns, zero, "riesz truncation");
}

WienerReport wiener_report(const TrigPolynomial& p, const std::vector<long long>& Ns) {
  MassSum zero;
  zero.exact = Rational(0);
  return report_impl(p, Ns, zero, "trig polynomial");
}

std::string wiener_report_csv(const WienerReport& report) {
  std::string out = "N,average,claim,abs_error\n";
  char buf[128];
  for (size_t i = 0; i < report.Ns.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%lld,%.17g,%.17g,%.17g\n", report.Ns[i],
                  report.averages[i].value, report.limit_claim.to_double(), report.abs_errors[i]);
    out += buf;
  }
  return out;
}

}  // namespace cml
