#include "cml/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>

#include "cml/almost_periodic.hpp"
#include "cml/density_gap.hpp"
#include "cml/errors.hpp"
#include "cml/filter_limit.hpp"
#include "cml/idempotent.hpp"
#include "cml/json_io.hpp"
#include "cml/obstruction.hpp"
#include "cml/sequence_window.hpp"
#include "cml/spectrum.hpp"
#include "cml/wiener.hpp"
#include "json_internal.hpp"

namespace cml {

using detail::OrderedJson;

namespace {

constexpr long long kWindowCap = 1000000;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

nlohmann::json parse_config(const ExperimentConfig& config) {
  try {
    return nlohmann::json::parse(config.config_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input_error(std::string("config parse error: ") + e.what());
  }
}

long long effective_window(const ExperimentConfig& config, const nlohmann::json& j,
                           long long fallback) {
  long long w = config.window_override.value_or(j.value("window", fallback));
  if (w < 0) throw invalid_input_error("window must be nonnegative");
  if (w > kWindowCap) throw resource_limit_error("window beyond the configured cap");
  return w;
}

double effective_eps(const ExperimentConfig& config, const nlohmann::json& j, double fallback) {
  double e = config.eps_override.value_or(j.value("eps", fallback));
  if (!(e > 0.0)) throw invalid_input_error("eps must be positive");
  return e;
}

double effective_delta(const ExperimentConfig& config, const nlohmann::json& j, double fallback) {
  double d = config.delta_override.value_or(j.value("delta", fallback));
  if (!(d > 0.0)) throw invalid_input_error("delta must be positive");
  return d;
}

RieszProductSpec spec_from_config(const ExperimentConfig& config, const nlohmann::json& j) {
  if (!j.contains("spec")) throw invalid_input_error("config needs a riesz spec");
  nlohmann::json spec_json = j["spec"];
  if (config.trunc_override) spec_json["K"] = *config.trunc_override;
  return detail::riesz_spec_from_json(spec_json);
}

void add_verdict(ExperimentReport& report, OrderedJson& jv, const std::string& check, bool pass,
                 const std::string& detail) {
  report.verdicts.push_back({check, pass ? "pass" : "fail", detail});
  OrderedJson v;
  v["check"] = check;
  v["status"] = pass ? "pass" : "fail";
  v["detail"] = detail;
  jv.push_back(std::move(v));
}

void add_inconclusive(ExperimentReport& report, OrderedJson& jv, const std::string& check,
                      const std::string& detail) {
  report.verdicts.push_back({check, "inconclusive", detail});
  OrderedJson v;
  v["check"] = check;
  v["status"] = "inconclusive";
  v["detail"] = detail;
  jv.push_back(std::move(v));
}

void finalize(ExperimentReport& report, const std::string& name, OrderedJson inputs,
              OrderedJson derived, OrderedJson verdicts, const Timer& timer) {
  OrderedJson doc;
  doc["experiment"] = name;
  doc["inputs"] = std::move(inputs);
  doc["derived"] = std::move(derived);
  doc["verdicts"] = std::move(verdicts);
  report.experiment = name;
  report.json_text = detail::dump_deterministic(doc);
  report.wall_ms = timer.ms();
}

std::string quantity_csv(const std::vector<std::pair<std::string, double>>& rows) {
  std::string out = "quantity,value\n";
  char buf[160];
  for (const auto& [k, v] : rows) {
    std::snprintf(buf, sizeof(buf), "%s,%.17g\n", k.c_str(), v);
    out += buf;
  }
  return out;
}

OrderedJson rational_fields(const Rational& r) { return detail::rational_to_json(r); }

}  // namespace

bool ExperimentReport::any_fail() const {
  for (const auto& v : verdicts) {
    if (v.status == "fail") return true;
  }
  return false;
}

int exit_code_for(const ExperimentReport& report) { return report.any_fail() ? 1 : 0; }

// --- riesz -----------------------------------------------------------------

ExperimentReport run_riesz(const ExperimentConfig& config) {
  Timer timer;
  nlohmann::json j = parse_config(config);
  RieszProductSpec spec = spec_from_config(config, j);
  long long window = effective_window(config, j, 64);

  ExperimentReport report;
  OrderedJson inputs, derived, verdicts = OrderedJson::array();
  inputs["spec"] = nlohmann::ordered_json::parse(j["spec"].dump());
  inputs["window"] = window;
  inputs["truncation"] = spec.truncation;

  std::vector<long long> support = tilde_set(spec.active_indices(), spec.seq, window);
  OrderedJson table = OrderedJson::array();
  std::string csv = "n,coefficient\n";
  char buf[96];
  for (long long n : support) {
    Rational c = riesz_coefficient(spec, n);
    if (c.is_zero()) continue;
    OrderedJson row;
    row["n"] = n;
    row["coefficient"] = rational_fields(c);
    table.push_back(std::move(row));
    std::snprintf(buf, sizeof(buf), "%lld,%.17g\n", n, c.to_double());
    csv += buf;
  }
  derived["support_size"] = table.size();
  derived["coefficients"] = std::move(table);

  add_verdict(report, verdicts, "normalization", riesz_coefficient(spec, 0) == Rational(1),
              "coefficient at 0 equals 1");

  if (spec.truncation <= 8) {
    TrigPolynomial expansion = riesz_truncation_to_trigpoly(spec);
    bool match = true;
    for (const auto& [n, c] : expansion.coefficients()) {
      auto cr = cv_as_complex_rational(c);
      if (!cr || !cr->is_real() || cr->re != riesz_coefficient(spec, n)) {
        match = false;
        break;
      }
    }
    for (long long n : support) {
      if (!riesz_coefficient(spec, n).is_zero() &&
          exact_zero(expansion.coefficient(n))) {
        match = false;
        break;
      }
    }
    add_verdict(report, verdicts, "expansion-oracle", match,
                "digit-path coefficients match the full product expansion");
  } else {
    add_inconclusive(report, verdicts, "expansion-oracle",
                     "truncation beyond the K <= 8 oracle range");
  }

  report.csv_text = csv;
  finalize(report, "riesz", std::move(inputs), std::move(derived), std::move(verdicts), timer);
  return report;
}

// --- nonsep ------------------------------------------------------------------

ExperimentReport run_nonsep(const ExperimentConfig& config) {
  Timer timer;
  nlohmann::json j = parse_config(config);
  if (!j.contains("branch1") || !j.contains("branch2")) {
    throw invalid_input_error("nonsep needs branch1 and branch2");
  }
  std::string b1 = j["branch1"].get<std::string>();
  std::string b2 = j["branch2"].get<std::string>();
  if (b1 == b2) throw invalid_input_error("identical branches give the same Riesz product");
  long long base = j.value("base", 4LL);
  int count1 = j.value("count", static_cast<long long>(b1.size()));
  int count2 = j.value("count", static_cast<long long>(b2.size()));
  long long window = effective_window(config, j, 1000000);

  IndexSet A1 = sierpinski_member(b1, count1);
  IndexSet A2 = sierpinski_member(b2, count2);
  if (A1.indices == A2.indices) {
    throw invalid_input_error("branches agree within the materialized prefix");
  }
  int needed = std::max(A1.indices.back(), A2.indices.back());
  LacunarySequence seq = LacunarySequence::power(base, needed);

  RieszProductSpec mu1 = RieszProductSpec::make(seq, IndicatorRule{A1}, needed);
  RieszProductSpec mu2 = RieszProductSpec::make(seq, IndicatorRule{A2}, needed);

  ExperimentReport report;
  OrderedJson inputs, derived, verdicts = OrderedJson::array();
  inputs["branch1"] = b1;
  inputs["branch2"] = b2;
  inputs["base"] = base;
  inputs["window"] = window;

  IndexSet shared = intersect(A1, A2);
  derived["indices1"] = A1.indices;
  derived["indices2"] = A2.indices;
  derived["shared_indices"] = shared.indices;

  std::vector<long long> S1 = tilde_set(A1, seq, window);
  std::vector<long long> S2 = tilde_set(A2, seq, window);
  std::vector<long long> S_shared = tilde_set(shared, seq, window);
  std::vector<long long> S_meet;
  std::set_intersection(S1.begin(), S1.end(), S2.begin(), S2.end(), std::back_inserter(S_meet));
  derived["support1_size"] = static_cast<long long>(S1.size());
  derived["support2_size"] = static_cast<long long>(S2.size());
  derived["support_intersection_size"] = static_cast<long long>(S_meet.size());
  add_verdict(report, verdicts, "lemma15-intersection", S_meet == S_shared,
              "S(mu1) n S(mu2) equals the tilde set of the shared indices on the window");

  auto [poly, conv_report] = convolve_riesz(mu1, mu2, window);
  derived["convolution_support_size"] = conv_report.support_size_in_window;
  derived["full_support_finite"] = conv_report.full_support_finite;
  derived["full_support_size"] = conv_report.full_support_size;
  derived["finiteness_basis"] = conv_report.finiteness_basis;
  OrderedJson conv_coeffs = OrderedJson::array();
  for (const auto& [n, c] : poly.coefficients()) {
    OrderedJson row;
    row["n"] = n;
    auto cr = cv_as_complex_rational(c);
    row["coefficient"] = cr ? rational_fields(cr->re) : rational_fields(Rational(0));
    conv_coeffs.push_back(std::move(row));
  }
  derived["convolution"] = std::move(conv_coeffs);
  add_verdict(report, verdicts, "convolution-support",
              poly.support() == S_shared,
              "support of mu1 * mu2 equals the tilde set of the shared indices");

  int factor_idx = 0;
  for (const auto& mu : {mu1, mu2}) {
    ++factor_idx;
    SpectrumReport gap = natural_spectrum_gap(mu, window);
    std::string name = "spectrum-gap-factor" + std::to_string(factor_idx);
    if (gap.precondition_failed) {
      add_inconclusive(report, verdicts, name, gap.note);
      continue;
    }
    bool ok = gap.witness && gap.witness->re == 0.0 && gap.witness->im == 1.0 && gap.gap == 1.0 &&
              gap.radius_lo == 1.0 && gap.radius_hi == 1.0;
    add_verdict(report, verdicts, name, ok,
                "witness i sits at distance 1 from the real sampled range inside the unit disk");
    if (factor_idx == 1) {
      derived["witness_re"] = gap.witness->re;
      derived["witness_im"] = gap.witness->im;
      derived["gap"] = gap.gap;
    }
  }

  report.csv_text = quantity_csv({
      {"support1_size", static_cast<double>(S1.size())},
      {"support2_size", static_cast<double>(S2.size())},
      {"support_intersection_size", static_cast<double>(S_meet.size())},
      {"convolution_support_size", static_cast<double>(conv_report.support_size_in_window)},
      {"shared_index_count", static_cast<double>(shared.indices.size())},
      {"gap", 1.0},
  });
  finalize(report, "nonsep", std::move(inputs), std::move(derived), std::move(verdicts), timer);
  return report;
}

// --- gap ---------------------------------------------------------------------

ExperimentReport run_gap(const ExperimentConfig& config) {
  Timer timer;
  nlohmann::json j = parse_config(config);

  nlohmann::json corpus_json;
  if (j.contains("corpus")) {
    corpus_json = j["corpus"];
  } else if (j.contains("corpus_file")) {
    std::ifstream in(j["corpus_file"].get<std::string>());
    if (!in) throw invalid_input_error("cannot open corpus file");
    std::stringstream ss;
    ss << in.rdbuf();
    nlohmann::json file_json = nlohmann::json::parse(ss.str(), nullptr, false);
    if (file_json.is_discarded()) throw invalid_input_error("corpus file is not valid JSON");
    corpus_json = file_json.is_array() ? file_json : file_json.value("corpus", nlohmann::json());
  }
  if (!corpus_json.is_array() || corpus_json.empty()) {
    throw invalid_input_error("gap experiment needs a nonempty candidate corpus");
  }

  long long window = effective_window(config, j, 200);
  double eps = effective_eps(config, j, 0.05);
  double delta = effective_delta(config, j, 0.39);
  long long p = j.value("p", 8LL);

  std::vector<MeasureSum> corpus;
  for (const auto& cand : corpus_json) corpus.push_back(detail::measure_from_json(cand));

  SequenceWindow target = step_window(-window, window);
  std::vector<GapReport> reports(corpus.size());
  auto evaluate = [&](size_t i) { return density_gap_report(corpus[i], target, eps, delta, p); };
  if (config.parallel) {
    std::vector<std::future<GapReport>> futures;
    futures.reserve(corpus.size());
    for (size_t i = 0; i < corpus.size(); ++i) {
      futures.push_back(std::async(std::launch::async, evaluate, i));
    }
    for (size_t i = 0; i < corpus.size(); ++i) reports[i] = futures[i].get();
  } else {
    for (size_t i = 0; i < corpus.size(); ++i) reports[i] = evaluate(i);
  }

  ExperimentReport report;
  OrderedJson inputs, derived, verdicts = OrderedJson::array();
  inputs["corpus_size"] = static_cast<long long>(corpus.size());
  inputs["window"] = window;
  inputs["eps"] = eps;
  inputs["delta"] = delta;
  inputs["p"] = p;

  double best = 0.0;
  size_t best_idx = 0;
  OrderedJson rows = OrderedJson::array();
  std::string csv = "index,candidate,sup_distance,sup_at_n,beats_best\n";
  char buf[256];
  for (size_t i = 0; i < reports.size(); ++i) {
    const GapReport& r = reports[i];
    bool beats = i == 0 || r.sup_distance < best;
    if (beats) {
      best = r.sup_distance;
      best_idx = i;
    }
    OrderedJson row;
    row["index"] = static_cast<long long>(i);
    row["candidate"] = r.candidate;
    row["sup_distance"] = r.sup_distance;
    row["sup_at_n"] = r.sup_at_n;
    row["beats_best"] = beats;
    row["pipeline_ran"] = r.pipeline_ran;
    if (r.pipeline_ran) {
      row["n0"] = r.n0;
      row["observed_gap"] = r.observed_gap;
      row["lower_bound_quantity"] = r.lower_bound_quantity;
      row["accepted_periods"] = r.accepted_periods;
      row["bound_violations"] = r.bound_violations;
      OrderedJson trace = OrderedJson::array();
      for (const auto& t : r.wiener_trace) {
        OrderedJson tr;
        tr["k"] = t.k;
        tr["average"] = t.average;
        tr["proof_floor"] = t.proof_floor;
        trace.push_back(std::move(tr));
      }
      row["wiener_trace"] = std::move(trace);
    }
    rows.push_back(std::move(row));
    std::snprintf(buf, sizeof(buf), "%zu,%s,%.17g,%lld,%d\n", i, r.candidate.c_str(),
                  r.sup_distance, r.sup_at_n, beats ? 1 : 0);
    csv += buf;
  }
  derived["candidates"] = std::move(rows);
  derived["corpus_min_sup_distance"] = best;
  derived["corpus_argmin"] = static_cast<long long>(best_idx);
  std::snprintf(buf, sizeof(buf), "corpus_min,%.17g\n", best);
  csv += buf;

  add_verdict(report, verdicts, "no-candidate-below-delta", best >= delta,
              "every candidate stays at sup distance >= delta from the step sequence");

  report.csv_text = csv;
  finalize(report, "gap", std::move(inputs), std::move(derived), std::move(verdicts), timer);
  return report;
}

// --- wiener ------------------------------------------------------------------

ExperimentReport run_wiener(const ExperimentConfig& config) {
  Timer timer;
  nlohmann::json j = parse_config(config);
  std::vector<long long> Ns;
  for (const auto& n : j.value("N", nlohmann::json::array())) Ns.push_back(n.get<long long>());
  if (Ns.empty()) throw invalid_input_error("wiener needs a nonempty increasing N list");

  WienerReport wr;
  if (j.contains("spec")) {
    wr = wiener_report(spec_from_config(config, j), Ns);
  } else if (j.contains("measure")) {
    wr = wiener_report(detail::measure_from_json(j["measure"]), Ns);
  } else {
    throw invalid_input_error("wiener needs a measure or a riesz spec");
  }

  ExperimentReport report;
  OrderedJson inputs, derived, verdicts = OrderedJson::array();
  inputs["N"] = Ns;
  inputs["source"] = wr.source;

  OrderedJson rows = OrderedJson::array();
  for (size_t i = 0; i < wr.Ns.size(); ++i) {
    OrderedJson row;
    row["N"] = wr.Ns[i];
    row["average"] = wr.averages[i].value;
    if (wr.averages[i].exact) row["average_exact"] = rational_fields(*wr.averages[i].exact);
    row["abs_error"] = wr.abs_errors[i];
    row["non_increasing"] = static_cast<bool>(wr.non_increasing[i]);
    rows.push_back(std::move(row));
  }
  derived["averages"] = std::move(rows);
  derived["limit_claim"] = rational_fields(wr.limit_claim);
  derived["claim_exact"] = wr.claim_exact;

  add_verdict(report, verdicts, "converging", wr.converging,
              "|average - claim| at the last N does not exceed the first");

  report.csv_text = wiener_report_csv(wr);
  finalize(report, "wiener", std::move(inputs), std::move(derived), std::move(verdicts), timer);
  return report;
}

// --- ap ----------------------------------------------------------------------

ExperimentReport run_ap(const ExperimentConfig& config) {
  Timer timer;
  nlohmann::json j = parse_config(config);
  std::string mode = j.value("mode", "falsify_step");
  long long p = j.value("p", 10LL);
  long long window = effective_window(config, j, std::max(4 * p, 64LL));

  ExperimentReport report;
  OrderedJson inputs, derived, verdicts = OrderedJson::array();
  inputs["mode"] = mode;
  inputs["p"] = p;
  inputs["window"] = window;

  if (mode == "falsify_step") {
    double eps = config.eps_override.value_or(j.value("eps", 0.9));
    inputs["eps"] = eps;
    SequenceWindow step = step_window(-window, window);
    StepFalsification f = ap_falsify_step(p, eps, step);  // rejects eps >= 1
    OrderedJson rows = OrderedJson::array();
    std::string csv = "m,n,jump\n";
    char buf[96];
    for (const auto& w : f.witnesses) {
      OrderedJson row;
      row["m"] = w.m;
      row["n"] = w.n;
      row["jump"] = w.jump;
      rows.push_back(std::move(row));
      std::snprintf(buf, sizeof(buf), "%lld,%lld,%.17g\n", w.m, w.n, w.jump);
      csv += buf;
    }
    derived["witnesses"] = std::move(rows);
    add_verdict(report, verdicts, "step-not-almost-periodic", f.falsified,
                "every shift in [1,p] jumps by 1 somewhere in the window");
    report.csv_text = csv;
  } else if (mode == "periods") {
    double eps = effective_eps(config, j, 1e-9);
    inputs["eps"] = eps;
    if (!j.contains("measure")) throw invalid_input_error("periods mode needs a measure");
    MeasureSum m = detail::measure_from_json(j["measure"]);
    SequenceWindow win = transform_window(m, -window, window);
    EpsilonPeriodScan scan = find_epsilon_periods(win, eps, p);
    OrderedJson rows = OrderedJson::array();
    std::string csv = "interval_lo,interval_hi,period,sup\n";
    char buf[128];
    for (const auto& iv : scan.intervals) {
      OrderedJson row;
      row["interval_lo"] = iv.interval_lo;
      row["interval_hi"] = iv.interval_hi;
      if (iv.period) {
        row["period"] = *iv.period;
      } else {
        row["period"] = nullptr;
      }
      row["sup"] = iv.best_sup;
      rows.push_back(std::move(row));
      std::snprintf(buf, sizeof(buf), "%lld,%lld,%lld,%.17g\n", iv.interval_lo, iv.interval_hi,
                    iv.period.value_or(-1), iv.best_sup);
      csv += buf;
    }
    derived["intervals"] = std::move(rows);
    add_verdict(report, verdicts, "eps-periods-in-every-interval", scan.all_verified,
                "each tested interval of shifts contains a verified eps-period");
    report.csv_text = csv;
  } else {
    throw invalid_input_error("unknown ap mode: " + mode);
  }

  finalize(report, "ap", std::move(inputs), std::move(derived), std::move(verdicts), timer);
  return report;
}

// --- idem --------------------------------------------------------------------

ExperimentReport run_idem(const ExperimentConfig& config) {
  Timer timer;
  nlohmann::json j = parse_config(config);
  int q = static_cast<int>(j.value("q", 2LL));

  ExperimentReport report;
  OrderedJson inputs, derived, verdicts = OrderedJson::array();
  inputs["q"] = q;

  bool all_idempotent = true;
  bool indicator_ok = true;
  long long checked = 0;
  for (unsigned long mask = 0; mask < (1UL << q); ++mask) {
    std::set<int> residues;
    for (int r = 0; r < q; ++r) {
      if (mask & (1UL << r)) residues.insert(r);
    }
    DiscreteMeasure m = idempotent_from_residues(q, residues);
    if (!is_idempotent(m)) all_idempotent = false;
    for (long long n = -4 * q; n <= 4 * q; ++n) {
      ComplexValue c = fourier_coefficient(m, n);
      int residue = static_cast<int>(((n % q) + q) % q);
      ComplexValue expected = cv_int(residues.count(residue) ? 1 : 0);
      if (is_exact(c)) {
        if (!cv_exact_equal(c, expected)) indicator_ok = false;
      } else if (distance_upper(cv_approx(c), cv_approx(expected)) > 1e-12) {
        indicator_ok = false;
      }
    }
    ++checked;
  }
  std::vector<DiscreteMeasure> all = enumerate_idempotents(q);

  derived["subsets_checked"] = checked;
  derived["distinct_measures"] = static_cast<long long>(all.size());
  add_verdict(report, verdicts, "all-idempotent", all_idempotent,
              "mu * mu = mu holds exactly for every residue subset");
  add_verdict(report, verdicts, "transform-indicator", indicator_ok,
              "transform equals the residue indicator on |n| <= 4q");
  add_verdict(report, verdicts, "count", static_cast<long long>(all.size()) == (1LL << q),
              "2^q distinct idempotents");

  report.csv_text = quantity_csv({
      {"q", static_cast<double>(q)},
      {"subsets_checked", static_cast<double>(checked)},
      {"distinct_measures", static_cast<double>(all.size())},
  });
  finalize(report, "idem", std::move(inputs), std::move(derived), std::move(verdicts), timer);
  return report;
}

// --- spectrum ------------------------------------------------------------------

ExperimentReport run_spectrum(const ExperimentConfig& config) {
  Timer timer;
  nlohmann::json j = parse_config(config);
  std::string mode = j.value("mode", j.contains("spec") ? "riesz_gap" : "trigpoly");

  ExperimentReport report;
  OrderedJson inputs, derived, verdicts = OrderedJson::array();
  inputs["mode"] = mode;

  if (mode == "trigpoly") {
    nlohmann::json wrapper;
    wrapper["trigpoly"] = j.value("trigpoly", nlohmann::json::array());
    MeasureSum m = detail::measure_from_json(wrapper);
    const auto* tp = m.continuous.empty()
                         ? nullptr
                         : std::get_if<TrigPolynomial>(&m.continuous.front());
    TrigPolynomial poly = tp ? *tp : TrigPolynomial();
    SpectrumReport sr = trigpoly_spectrum(poly);
    OrderedJson pts = OrderedJson::array();
    std::string csv = "point_re,point_im\n";
    char buf[96];
    for (const auto& z : sr.points) {
      OrderedJson pt;
      pt["re"] = z.re;
      pt["im"] = z.im;
      pts.push_back(std::move(pt));
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", z.re, z.im);
      csv += buf;
    }
    derived["kind"] = "finite-set";
    derived["points"] = std::move(pts);
    bool has_zero = false;
    for (const auto& z : sr.points) has_zero |= (z.re == 0.0 && z.im == 0.0);
    add_verdict(report, verdicts, "zafran-finite-set", has_zero,
                "spectrum equals the coefficient values together with 0");
    report.csv_text = csv;
  } else if (mode == "riesz_gap") {
    RieszProductSpec spec = spec_from_config(config, j);
    long long window = effective_window(config, j, 256);
    inputs["window"] = window;
    SpectrumReport sr = natural_spectrum_gap(spec, window);
    derived["kind"] = "gap-report";
    if (sr.precondition_failed) {
      derived["precondition_failed"] = true;
      derived["note"] = sr.note;
      add_inconclusive(report, verdicts, "brown-moran-precondition", sr.note);
      report.csv_text = quantity_csv({{"precondition_failed", 1.0}});
    } else {
      derived["radius_lo"] = sr.radius_lo;
      derived["radius_hi"] = sr.radius_hi;
      derived["witness_re"] = sr.witness->re;
      derived["witness_im"] = sr.witness->im;
      derived["gap"] = sr.gap;
      OrderedJson pts = OrderedJson::array();
      double range_min = 0.0, range_max = 0.0;
      for (size_t i = 0; i < sr.points.size(); ++i) {
        pts.push_back(sr.points[i].re);
        range_min = i == 0 ? sr.points[i].re : std::min(range_min, sr.points[i].re);
        range_max = i == 0 ? sr.points[i].re : std::max(range_max, sr.points[i].re);
      }
      derived["sampled_range"] = std::move(pts);
      bool real_range = true;
      for (const auto& z : sr.points) real_range &= (z.im == 0.0);
      add_verdict(report, verdicts, "range-real", real_range, "sampled transform values are real");
      add_verdict(report, verdicts, "witness-gap", sr.gap == 1.0,
                  "witness i at distance 1 from the real line inside the claimed disk");
      report.csv_text = quantity_csv({{"radius_lo", sr.radius_lo},
                                      {"radius_hi", sr.radius_hi},
                                      {"gap", sr.gap},
                                      {"range_min", range_min},
                                      {"range_max", range_max}});
    }
  } else if (mode == "radius") {
    if (!j.contains("measure")) throw invalid_input_error("radius mode needs a measure");
    MeasureSum m = detail::measure_from_json(j["measure"]);
    int M = static_cast<int>(j.value("M", 4LL));
    inputs["M"] = M;
    RadiusBounds rb = spectral_radius_upper(m.discrete, M);
    OrderedJson rows = OrderedJson::array();
    std::string csv = "m,u_lo,u_hi,running_min\n";
    char buf[160];
    bool monotone = true;
    for (size_t i = 0; i < rb.u.size(); ++i) {
      OrderedJson row;
      row["m"] = static_cast<long long>(i + 1);
      row["u_lo"] = rb.u[i].lo;
      row["u_hi"] = rb.u[i].hi;
      row["running_min"] = rb.running_min_upper[i];
      rows.push_back(std::move(row));
      if (i > 0 && rb.running_min_upper[i] > rb.running_min_upper[i - 1]) monotone = false;
      std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g\n", i + 1, rb.u[i].lo, rb.u[i].hi,
                    rb.running_min_upper[i]);
      csv += buf;
    }
    derived["kind"] = "disk";
    derived["bounds"] = std::move(rows);
    add_verdict(report, verdicts, "running-min-non-increasing", monotone,
                "the reported minimum of power-norm bounds never increases");
    report.csv_text = csv;
  } else {
    throw invalid_input_error("unknown spectrum mode: " + mode);
  }

  finalize(report, "spectrum", std::move(inputs), std::move(derived), std::move(verdicts), timer);
  return report;
}

// --- obstruct ------------------------------------------------------------------

ExperimentReport run_obstruct(const ExperimentConfig& config) {
  Timer timer;
  nlohmann::json j = parse_config(config);
  if (!j.contains("alpha")) throw invalid_input_error("obstruct needs alpha");
  double alpha = j["alpha"].get<double>();
  double B = j.value("B", 10.0);
  long long M = j.value("M", 50LL);

  ObstructionWitness w = exp_obstruction(alpha, B, M);  // throws for alpha in pi*Q

  ExperimentReport report;
  OrderedJson inputs, derived, verdicts = OrderedJson::array();
  inputs["alpha"] = alpha;
  inputs["B"] = B;
  inputs["M"] = M;
  derived["alpha"] = w.alpha;
  derived["m"] = w.m;
  derived["s"] = w.s;
  derived["drift"] = w.drift;
  derived["k"] = w.growth_index;
  OrderedJson trace = OrderedJson::array();
  for (const auto& line : w.trace) trace.push_back(line);
  derived["trace"] = std::move(trace);

  add_verdict(report, verdicts, "drift-positive", w.drift > 0.0,
              "|m*alpha - 2*pi*s| is strictly positive");
  add_verdict(report, verdicts, "growth-bound",
              static_cast<double>(w.growth_index) * w.drift >= B,
              "k * drift reaches the target bound B");

  report.csv_text = quantity_csv({{"alpha", w.alpha},
                                  {"m", static_cast<double>(w.m)},
                                  {"s", static_cast<double>(w.s)},
                                  {"drift", w.drift},
                                  {"k", static_cast<double>(w.growth_index)}});
  finalize(report, "obstruct", std::move(inputs), std::move(derived), std::move(verdicts), timer);
  return report;
}

// --- filterlimit ----------------------------------------------------------------

ExperimentReport run_filterlimit(const ExperimentConfig& config) {
  Timer timer;
  nlohmann::json j = parse_config(config);
  double tolerance = j.value("tolerance", 1e-9);
  long long horizon = j.value("horizon", 100000LL);

  SequenceSource source = [&]() {
    if (j.contains("source") && j["source"].value("kind", "") == "alternating") {
      return SequenceSource::alternating();
    }
    if (j.contains("spec")) return SequenceSource::from_riesz(spec_from_config(config, j));
    if (j.contains("measure")) {
      return SequenceSource::from_measure(detail::measure_from_json(j["measure"]));
    }
    throw invalid_input_error("filterlimit needs a spec, a measure, or a builtin source");
  }();

  IndexSubset along = [&]() {
    if (!j.contains("along")) return IndexSubset::all_integers();
    const auto& a = j["along"];
    std::string kind = a.value("kind", "all");
    if (kind == "all") return IndexSubset::all_integers();
    if (kind == "explicit") {
      std::vector<long long> v;
      for (const auto& x : a.value("values", nlohmann::json::array())) v.push_back(x.get<long long>());
      return IndexSubset::explicit_list(std::move(v));
    }
    if (kind == "frequencies") {
      if (!j.contains("spec")) throw invalid_input_error("frequency subsets need the riesz spec");
      RieszProductSpec spec = spec_from_config(config, j);
      std::vector<int> idx;
      for (const auto& x : a.value("indices", nlohmann::json::array())) idx.push_back(x.get<int>());
      return IndexSubset::lacunary_frequencies(spec.seq,
                                               IndexSet::from_indices(std::move(idx), true));
    }
    throw invalid_input_error("unknown along kind: " + kind);
  }();

  FilterLimitResult r = filter_limit(source, along, tolerance, horizon);

  ExperimentReport report;
  OrderedJson inputs, derived, verdicts = OrderedJson::array();
  inputs["source"] = source.name;
  inputs["tolerance"] = tolerance;
  inputs["horizon"] = horizon;
  derived["converged"] = r.converged;
  derived["evaluations"] = r.evaluations;
  derived["oscillation"] = r.oscillation;
  if (r.converged) {
    ApproxComplex z = cv_approx(*r.limit);
    derived["limit_re"] = z.re;
    derived["limit_im"] = z.im;
    if (auto cr = cv_as_complex_rational(*r.limit)) {
      derived["limit_exact_re"] = rational_fields(cr->re);
      derived["limit_exact_im"] = rational_fields(cr->im);
    }
  } else {
    derived["liminf_re"] = r.liminf_re;
    derived["limsup_re"] = r.limsup_re;
    derived["liminf_im"] = r.liminf_im;
    derived["limsup_im"] = r.limsup_im;
  }
  add_verdict(report, verdicts, "tail-oscillation-measured", true,
              r.converged ? "tail oscillation below tolerance: limit reported"
                          : "tail oscillates: liminf/limsup reported");

  report.csv_text = quantity_csv({{"converged", r.converged ? 1.0 : 0.0},
                                  {"oscillation", r.oscillation},
                                  {"evaluations", static_cast<double>(r.evaluations)},
                                  {"liminf_re", r.liminf_re},
                                  {"limsup_re", r.limsup_re}});
  finalize(report, "filterlimit", std::move(inputs), std::move(derived), std::move(verdicts),
           timer);
  return report;
}

// --- dispatch --------------------------------------------------------------------

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"riesz",    "nonsep",   "gap",
                                                 "wiener",   "ap",       "idem",
                                                 "spectrum", "obstruct", "filterlimit"};
  return names;
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  if (config.experiment == "riesz") return run_riesz(config);
  if (config.experiment == "nonsep") return run_nonsep(config);
  if (config.experiment == "gap") return run_gap(config);
  if (config.experiment == "wiener") return run_wiener(config);
  if (config.experiment == "ap") return run_ap(config);
  if (config.experiment == "idem") return run_idem(config);
  if (config.experiment == "spectrum") return run_spectrum(config);
  if (config.experiment == "obstruct") return run_obstruct(config);
  if (config.experiment == "filterlimit") return run_filterlimit(config);
  throw invalid_input_error("unknown experiment: " + config.experiment);
}

}  // namespace cml
