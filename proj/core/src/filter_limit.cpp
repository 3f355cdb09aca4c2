#include "cml/filter_limit.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "cml/errors.hpp"

namespace cml {

IndexSubset IndexSubset::explicit_list(std::vector<long long> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  IndexSubset s;
  s.kind = Kind::Explicit;
  s.values = std::move(v);
  return s;
}

IndexSubset IndexSubset::all_integers() {
  IndexSubset s;
  s.kind = Kind::AllIntegers;
  return s;
}

IndexSubset IndexSubset::lacunary_frequencies(LacunarySequence seq, IndexSet at) {
  IndexSubset s;
  s.kind = Kind::LacunaryFrequencies;
  s.seq = std::move(seq);
  s.at = std::move(at);
  return s;
}

std::vector<long long> IndexSubset::enumerate(long long horizon) const {
  if (horizon < 0) throw invalid_input_error("horizon must be nonnegative");
  std::vector<long long> out;
  switch (kind) {
    case Kind::Explicit:
      for (long long v : values) {
        if (v >= -horizon && v <= horizon) out.push_back(v);
      }
      break;
    case Kind::AllIntegers:
      for (long long n = -horizon; n <= horizon; ++n) out.push_back(n);
      break;
    case Kind::LacunaryFrequencies: {
      LacunarySequence s = seq;
      if (!at.indices.empty()) {
        int needed = at.indices.back();
        s = s.extended(needed);
        for (int k : at.indices) {
          long long f = s.term(k);
          if (f <= horizon) out.push_back(f);
        }
      }
      break;
    }
  }
  return out;
}

SequenceSource SequenceSource::from_measure(MeasureSum m) {
  auto holder = std::make_shared<MeasureSum>(std::move(m));
  return {[holder](long long n) { return fourier_coefficient(*holder, n); },
          holder->describe() + " transform"};
}

SequenceSource SequenceSource::from_riesz(RieszProductSpec spec) {
  auto holder = std::make_shared<RieszProductSpec>(std::move(spec));
  return {[holder](long long n) { return cv_rational(riesz_coefficient(*holder, n)); },
          "riesz transform"};
}

SequenceSource SequenceSource::alternating() {
  return {[](long long n) { return cv_int((n % 2 + 2) % 2 == 0 ? 1 : -1); }, "(-1)^n"};
}

FilterLimitResult filter_limit(const SequenceSource& source, const IndexSubset& along,
                               double tolerance, long long horizon) {
  if (!(tolerance > 0.0)) throw invalid_input_error("tolerance must be positive");
  std::vector<long long> points = along.enumerate(horizon);
  if (points.empty()) throw insufficient_data_error("index subset empty within the horizon");

  std::vector<ComplexValue> values;
  values.reserve(points.size());
  for (long long n : points) values.push_back(source.at(n));

  FilterLimitResult r;
  r.evaluations = static_cast<long long>(points.size());

  size_t tail_start = points.size() / 2;
  bool tail_exact_constant = is_exact(values[tail_start]);
  for (size_t i = tail_start + 1; i < values.size() && tail_exact_constant; ++i) {
    tail_exact_constant = is_exact(values[i]) && cv_exact_equal(values[i], values[tail_start]);
  }

  double re_min = 0, re_max = 0, im_min = 0, im_max = 0, max_err = 0;
  for (size_t i = tail_start; i < values.size(); ++i) {
    ApproxComplex a = cv_approx(values[i]);
    if (i == tail_start) {
      re_min = re_max = a.re;
      im_min = im_max = a.im;
    } else {
      re_min = std::min(re_min, a.re);
      re_max = std::max(re_max, a.re);
      im_min = std::min(im_min, a.im);
      im_max = std::max(im_max, a.im);
    }
    max_err = std::max(max_err, a.err);
  }
  // Bounding-box bound on the tail diameter, valid for every pair.
  double osc = std::hypot(re_max - re_min, im_max - im_min) + 2.0 * max_err;
  r.oscillation = tail_exact_constant ? 0.0 : osc;
  r.liminf_re = re_min;
  r.limsup_re = re_max;
  r.liminf_im = im_min;
  r.limsup_im = im_max;

  if (r.oscillation < tolerance) {
    r.converged = true;
    r.limit = tail_exact_constant ? values[tail_start] : values.back();
  }
  return r;
}

}  // namespace cml
