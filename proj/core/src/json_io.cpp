#include "cml/json_io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>

#include "cml/errors.hpp"
#include "json_internal.hpp"

namespace cml {
namespace detail {

namespace {

void append_escaped(std::string& out, const std::string& s) {
  out += nlohmann::json(s).dump();
}

void append_value(std::string& out, const OrderedJson& j, int indent) {
  const std::string pad(static_cast<size_t>(indent) * 2, ' ');
  const std::string pad_in(static_cast<size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case nlohmann::detail::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      size_t i = 0;
      for (auto it = j.begin(); it != j.end(); ++it, ++i) {
        out += pad_in;
        append_escaped(out, it.key());
        out += ": ";
        append_value(out, it.value(), indent + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      out += pad + "}";
      return;
    }
    case nlohmann::detail::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        out += pad_in;
        append_value(out, j[i], indent + 1);
        if (i + 1 < j.size()) out += ",";
        out += "\n";
      }
      out += pad + "]";
      return;
    }
    case nlohmann::detail::value_t::string:
      append_escaped(out, j.get<std::string>());
      return;
    case nlohmann::detail::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      return;
    case nlohmann::detail::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      return;
    case nlohmann::detail::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      return;
    case nlohmann::detail::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += "null";
      return;
  }
}

long long require_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw invalid_input_error(std::string("missing or non-integer field: ") + key);
  }
  return j[key].get<long long>();
}

}  // namespace

std::string dump_deterministic(const OrderedJson& j) {
  std::string out;
  append_value(out, j, 0);
  out += "\n";
  return out;
}

Rational rational_from_json(const nlohmann::json& j, const char* num_key, const char* den_key,
                            long long default_num, long long default_den) {
  long long num = j.contains(num_key) ? require_int(j, num_key) : default_num;
  long long den = j.contains(den_key) ? require_int(j, den_key) : default_den;
  return Rational(num, den);
}

OrderedJson rational_to_json(const Rational& r) {
  OrderedJson out;
  // 64-bit components cover every desk-scale value this artifact emits.
  out["num"] = r.numerator().convert_to<long long>();
  out["den"] = r.denominator().convert_to<long long>();
  return out;
}

MeasureSum measure_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw invalid_input_error("measure description must be a JSON object");
  MeasureSum m;
  std::vector<DiscreteMeasure::Atom> atoms;
  if (j.contains("atoms")) {
    for (const auto& a : j["atoms"]) {
      TurnAngle at = reduce_angle(require_int(a, "p"), require_int(a, "q"));
      ComplexRational mass(rational_from_json(a, "re_num", "re_den"),
                           rational_from_json(a, "im_num", "im_den"));
      atoms.push_back({at, mass});
    }
  }
  if (j.contains("float_atoms")) {
    for (const auto& a : j["float_atoms"]) {
      double angle = a.value("angle", 0.0);
      ApproxComplex mass(a.value("re", 0.0), a.value("im", 0.0), a.value("err", 0.0));
      atoms.push_back({position_from_radians(angle), mass});
    }
  }
  m.discrete = DiscreteMeasure::from_atoms(std::move(atoms));
  if (j.contains("trigpoly") && !j["trigpoly"].empty()) {
    std::map<long long, ComplexValue> coeffs;
    for (const auto& c : j["trigpoly"]) {
      ComplexRational v(rational_from_json(c, "re_num", "re_den"),
                        rational_from_json(c, "im_num", "im_den"));
      coeffs[require_int(c, "n")] = v;
    }
    m.continuous.emplace_back(TrigPolynomial::from_coefficients(std::move(coeffs)));
  }
  if (j.contains("riesz")) {
    for (const auto& spec : j["riesz"]) m.continuous.emplace_back(riesz_spec_from_json(spec));
  }
  return m;
}

RieszProductSpec riesz_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("base") || !j.contains("coeffs")) {
    throw invalid_input_error("riesz spec needs base and coeffs");
  }
  const auto& base = j["base"];
  std::string base_kind = base.value("kind", "");
  int truncation = static_cast<int>(j.value("K", -1));

  LacunarySequence seq = LacunarySequence::from_terms({});
  if (base_kind == "power") {
    long long b = require_int(base, "b");
    int capacity = base.contains("K") ? static_cast<int>(require_int(base, "K")) : truncation;
    if (capacity < 0) throw invalid_input_error("power base needs a length (base.K or K)");
    seq = LacunarySequence::power(b, capacity);
  } else if (base_kind == "list") {
    if (!base.contains("terms")) throw invalid_input_error("list base needs terms");
    std::vector<long long> terms;
    for (const auto& t : base["terms"]) terms.push_back(t.get<long long>());
    seq = LacunarySequence::from_terms(std::move(terms));
  } else {
    throw invalid_input_error("unknown base kind: " + base_kind);
  }
  if (truncation < 0) truncation = seq.size();

  const auto& coeffs = j["coeffs"];
  std::string coeff_kind = coeffs.value("kind", "");
  CoefficientRule rule = ConstantRule{Rational(1)};
  if (coeff_kind == "constant") {
    rule = ConstantRule{rational_from_json(coeffs, "num", "den", 1, 1)};
  } else if (coeff_kind == "indicator") {
    std::vector<int> idx;
    for (const auto& v : coeffs["indices"]) idx.push_back(v.get<int>());
    bool infinite = coeffs.value("infinite", false);
    rule = IndicatorRule{IndexSet::from_indices(std::move(idx), infinite)};
  } else if (coeff_kind == "list") {
    std::vector<Rational> values;
    for (const auto& v : coeffs["values"]) {
      values.push_back(rational_from_json(v, "num", "den"));
    }
    rule = ListRule{std::move(values)};
  } else if (coeff_kind == "geometric") {
    rule = GeometricRule{rational_from_json(coeffs, "first_num", "first_den", 1, 1),
                         rational_from_json(coeffs, "ratio_num", "ratio_den", 1, 2)};
  } else {
    throw invalid_input_error("unknown coeffs kind: " + coeff_kind);
  }
  return RieszProductSpec::make(std::move(seq), std::move(rule), truncation);
}

OrderedJson measure_to_json(const MeasureSum& m) {
  OrderedJson out;
  OrderedJson atoms = OrderedJson::array();
  OrderedJson float_atoms = OrderedJson::array();
  for (const auto& a : m.discrete.atoms()) {
    if (const auto* angle = std::get_if<TurnAngle>(&a.position)) {
      auto cr = cv_as_complex_rational(a.mass);
      OrderedJson ja;
      ja["p"] = angle->p.convert_to<long long>();
      ja["q"] = angle->q.convert_to<long long>();
      if (cr) {
        ja["re_num"] = cr->re.numerator().convert_to<long long>();
        ja["re_den"] = cr->re.denominator().convert_to<long long>();
        ja["im_num"] = cr->im.numerator().convert_to<long long>();
        ja["im_den"] = cr->im.denominator().convert_to<long long>();
      } else {
        ApproxComplex ap = cv_approx(a.mass);
        ja["re"] = ap.re;
        ja["im"] = ap.im;
        ja["err"] = ap.err;
        ja["mass"] = cv_str(a.mass);
      }
      atoms.push_back(std::move(ja));
    } else {
      ApproxComplex ap = cv_approx(a.mass);
      OrderedJson ja;
      ja["angle"] = std::get<double>(a.position);
      ja["re"] = ap.re;
      ja["im"] = ap.im;
      ja["err"] = ap.err;
      float_atoms.push_back(std::move(ja));
    }
  }
  out["atoms"] = std::move(atoms);
  if (!float_atoms.empty()) out["float_atoms"] = std::move(float_atoms);

  OrderedJson polys = OrderedJson::array();
  for (const auto& part : m.continuous) {
    if (const auto* tp = std::get_if<TrigPolynomial>(&part)) {
      for (const auto& [n, c] : tp->coefficients()) {
        OrderedJson jc;
        jc["n"] = n;
        if (auto cr = cv_as_complex_rational(c)) {
          jc["re_num"] = cr->re.numerator().convert_to<long long>();
          jc["re_den"] = cr->re.denominator().convert_to<long long>();
          jc["im_num"] = cr->im.numerator().convert_to<long long>();
          jc["im_den"] = cr->im.denominator().convert_to<long long>();
        } else {
          ApproxComplex ap = cv_approx(c);
          jc["re"] = ap.re;
          jc["im"] = ap.im;
          jc["err"] = ap.err;
        }
        polys.push_back(std::move(jc));
      }
    }
  }
  out["trigpoly"] = std::move(polys);
  return out;
}

}  // namespace detail

MeasureSum measure_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input_error(std::string("measure JSON parse error: ") + e.what());
  }
  return detail::measure_from_json(j);
}

RieszProductSpec riesz_spec_from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input_error(std::string("riesz spec JSON parse error: ") + e.what());
  }
  return detail::riesz_spec_from_json(j);
}

std::string measure_to_json_text(const MeasureSum& m) {
  return detail::dump_deterministic(detail::measure_to_json(m));
}

}  // namespace cml
