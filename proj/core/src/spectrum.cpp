#include "cml/spectrum.hpp"

#include <algorithm>
#include <cmath>

#include "cml/errors.hpp"

namespace cml {

namespace {

void sort_points(std::vector<ApproxComplex>& pts) {
  std::sort(pts.begin(), pts.end(), [](const ApproxComplex& a, const ApproxComplex& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  });
}

}  // namespace

SpectrumReport trigpoly_spectrum(const TrigPolynomial& p) {
  SpectrumReport r;
  r.kind = SpectrumReport::Kind::FiniteSet;

  std::vector<ComplexValue> distinct;
  distinct.push_back(cv_int(0));  // 0 always belongs
  for (const auto& [n, c] : p.coefficients()) {
    bool seen = false;
    for (const auto& d : distinct) {
      if (is_exact(c) && is_exact(d)) {
        seen = cv_exact_equal(c, d);
      } else {
        ApproxComplex x = cv_approx(c), y = cv_approx(d);
        seen = x.re == y.re && x.im == y.im;
      }
      if (seen) break;
    }
    if (!seen) distinct.push_back(c);
  }
  for (const auto& d : distinct) r.points.push_back(cv_approx(d));
  sort_points(r.points);
  r.note = "zafran finite-set formula for trig polynomials";
  return r;
}

RadiusBounds spectral_radius_upper(const DiscreteMeasure& m, int M) {
  if (!m.exact()) throw not_decidable_error("power-norm bounds need an exact measure");
  if (M < 1) throw invalid_input_error("M must be positive");
  if (M > 12) throw resource_limit_error("power-norm bounds guarded at M <= 12");

  RadiusBounds out;
  DiscreteMeasure power = m;
  double running = 0.0;
  for (int k = 1; k <= M; ++k) {
    if (k > 1) power = convolve(power, m);  // throws past the atom cap
    TotalVariation tv = total_variation(power);
    double inv = 1.0 / static_cast<double>(k);
    double lo = std::pow(tv.lower_double(), inv) * (1.0 - 4.0 * ApproxComplex::kEps);
    double hi = std::pow(tv.upper_double(), inv) * (1.0 + 4.0 * ApproxComplex::kEps);
    out.u.push_back({lo, hi});
    running = k == 1 ? hi : std::min(running, hi);
    out.running_min_upper.push_back(running);
  }
  return out;
}

SpectrumReport natural_spectrum_gap(const RieszProductSpec& spec, long long window) {
  SpectrumReport r;
  r.kind = SpectrumReport::Kind::GapReport;

  BrownMoranResult bm = brown_moran_check(spec.rule);
  if (bm.kind != BrownMoranResult::Kind::Diverges) {
    r.precondition_failed = true;
    r.note = "brown-moran divergence not established: " + bm.explanation;
    return r;
  }

  // Probability measure: coefficient at 0 is 1 and the truncated density is
  // nonnegative, which pins r(mu) = 1 from both sides.
  if (!(riesz_coefficient(spec, 0) == Rational(1))) {
    throw invalid_input_error("riesz spec does not normalize to a probability measure");
  }
  r.radius_lo = 1.0;
  r.radius_hi = 1.0;

  // Sampled transform range: all rational, hence real.
  std::vector<long long> support = tilde_set(spec.active_indices(), spec.seq, window);
  std::vector<double> values;
  for (long long n : support) values.push_back(riesz_coefficient(spec, n).to_double());
  if (static_cast<long long>(support.size()) < 2 * window + 1) values.push_back(0.0);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (double v : values) r.points.push_back({v, 0.0, 0.0});

  r.witness = ApproxComplex(0.0, 1.0, 0.0);
  r.gap = 1.0;  // distance from i to the real line containing every sample
  r.note = "sampled transform range is real; claimed spectrum is the unit disk";
  return r;
}

}  // namespace cml
