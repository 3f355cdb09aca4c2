#include "cml/riesz.hpp"

#include <algorithm>

#include "cml/errors.hpp"

namespace cml {

Rational rule_value(const CoefficientRule& rule, int k) {
  if (const auto* c = std::get_if<ConstantRule>(&rule)) return c->value;
  if (const auto* l = std::get_if<ListRule>(&rule)) {
    if (k < 1) throw invalid_input_error("rule index must be positive");
    return k <= static_cast<int>(l->values.size()) ? l->values[static_cast<size_t>(k - 1)]
                                                   : Rational(0);
  }
  if (const auto* ind = std::get_if<IndicatorRule>(&rule)) {
    return ind->set.contains(k) ? Rational(1) : Rational(0);
  }
  const auto& g = std::get<GeometricRule>(rule);
  return g.first * g.ratio.pow(k - 1);
}

bool rule_symbolically_finite(const CoefficientRule& rule) {
  if (const auto* c = std::get_if<ConstantRule>(&rule)) return c->value.is_zero();
  if (std::holds_alternative<ListRule>(rule)) return true;
  if (const auto* ind = std::get_if<IndicatorRule>(&rule)) return !ind->set.declared_infinite;
  return std::get<GeometricRule>(rule).first.is_zero();
}

std::string rule_str(const CoefficientRule& rule) {
  if (const auto* c = std::get_if<ConstantRule>(&rule)) return "constant " + c->value.str();
  if (const auto* l = std::get_if<ListRule>(&rule)) {
    return "list of " + std::to_string(l->values.size());
  }
  if (const auto* ind = std::get_if<IndicatorRule>(&rule)) {
    return std::string("indicator of ") + std::to_string(ind->set.indices.size()) + " indices" +
           (ind->set.declared_infinite ? " (infinite family)" : "");
  }
  const auto& g = std::get<GeometricRule>(rule);
  return "geometric " + g.first.str() + " * (" + g.ratio.str() + ")^(k-1)";
}

RieszProductSpec RieszProductSpec::make(LacunarySequence seq, CoefficientRule rule, int truncation) {
  if (truncation < 0) throw invalid_input_error("negative truncation");
  if (truncation > seq.size()) {
    seq = seq.extended(truncation);  // throws unless generator-backed
  }
  for (int k = 1; k <= truncation; ++k) {
    Rational a = rule_value(rule, k);
    if (a <= Rational(-1) || a > Rational(1)) {
      throw invalid_input_error("riesz coefficient out of (-1,1] at index " + std::to_string(k));
    }
  }
  return {std::move(seq), std::move(rule), truncation};
}

IndexSet RieszProductSpec::active_indices() const {
  std::vector<int> idx;
  for (int k = 1; k <= truncation; ++k) {
    if (!rule_value(rule, k).is_zero()) idx.push_back(k);
  }
  bool infinite = !rule_symbolically_finite(rule);
  return IndexSet::from_indices(std::move(idx), infinite);
}

Rational riesz_coefficient(const RieszProductSpec& spec, long long n) {
  // Uniqueness over the full sequence: a representation confined to the
  // truncation exists iff the (single) representation uses no later index.
  auto rep = represent(n, spec.seq);
  if (!rep) return Rational(0);
  Rational prod = 1;
  for (const auto& d : rep->digits) {
    if (d.index > spec.truncation) return Rational(0);
    Rational a = rule_value(spec.rule, d.index);
    if (a.is_zero()) return Rational(0);
    prod *= a / Rational(2);
  }
  return prod;
}

TrigPolynomial riesz_truncation_to_trigpoly(const RieszProductSpec& spec, int truncation_limit,
                                            long long term_limit) {
  if (spec.truncation > truncation_limit) {
    throw resource_limit_error("riesz truncation beyond the configured limit");
  }
  std::map<long long, ComplexValue> coeffs;
  coeffs.emplace(0, cv_int(1));
  for (int k = 1; k <= spec.truncation; ++k) {
    Rational a = rule_value(spec.rule, k);
    if (a.is_zero()) continue;
    ComplexValue half = cv_rational(a / Rational(2));
    long long nk = spec.seq.term(k);
    std::map<long long, ComplexValue> next = coeffs;
    for (const auto& [n, c] : coeffs) {
      ComplexValue side = cv_mul(c, half);
      for (long long shifted : {n + nk, n - nk}) {
        auto it = next.find(shifted);
        if (it == next.end()) {
          next.emplace(shifted, side);
        } else {
          it->second = cv_add(it->second, side);
        }
      }
    }
    if (static_cast<long long>(next.size()) > term_limit) {
      throw resource_limit_error("riesz expansion exceeds the term limit");
    }
    coeffs = std::move(next);
  }
  return TrigPolynomial::from_coefficients(std::move(coeffs));
}

std::pair<TrigPolynomial, RieszConvolutionReport> convolve_riesz(const RieszProductSpec& a,
                                                                 const RieszProductSpec& b,
                                                                 long long window) {
  int needed = std::max(a.truncation, b.truncation);
  for (int k = 1; k <= needed; ++k) {
    if (k > a.seq.size() || k > b.seq.size() || a.seq.term(k) != b.seq.term(k)) {
      throw invalid_input_error("riesz convolution requires a shared base sequence");
    }
  }

  IndexSet active_a = a.active_indices();
  IndexSet active_b = b.active_indices();
  IndexSet common = intersect(active_a, active_b);

  // Unique representations force every common-support digit into the
  // intersection of the active sets.
  std::vector<long long> support = tilde_set(common, a.seq, window);
  std::map<long long, ComplexValue> coeffs;
  for (long long n : support) {
    Rational prod = riesz_coefficient(a, n) * riesz_coefficient(b, n);
    if (!prod.is_zero()) coeffs.emplace(n, cv_rational(prod));
  }

  RieszConvolutionReport report;
  report.common_active_indices = common.indices;
  report.support_size_in_window = static_cast<long long>(coeffs.size());

  bool a_fin = rule_symbolically_finite(a.rule);
  bool b_fin = rule_symbolically_finite(b.rule);
  const auto* ind_a = std::get_if<IndicatorRule>(&a.rule);
  const auto* ind_b = std::get_if<IndicatorRule>(&b.rule);
  if (a_fin || b_fin) {
    report.full_support_finite = true;
    report.finiteness_basis = "one factor has finitely many active indices";
  } else if (ind_a && ind_b) {
    bool same_family = ind_a->set.indices == ind_b->set.indices;
    report.full_support_finite = !same_family;
    report.finiteness_basis = same_family
                                  ? "active index families coincide"
                                  : "distinct almost-disjoint families intersect in the shared prefix";
  } else {
    report.full_support_finite = false;
    report.finiteness_basis = "both coefficient families are unbounded";
  }
  if (report.full_support_finite) {
    long long size = 1;
    for (size_t i = 0; i < common.indices.size(); ++i) size *= 3;
    report.full_support_size = size;  // all 3^d signed sums are distinct
  }
  return {TrigPolynomial::from_coefficients(std::move(coeffs)), report};
}

BrownMoranResult brown_moran_check(const CoefficientRule& rule) {
  using Kind = BrownMoranResult::Kind;
  if (const auto* c = std::get_if<ConstantRule>(&rule)) {
    if (c->value.is_zero()) return {Kind::Converges, 0, "all coefficients vanish"};
    return {Kind::Diverges, 0, "constant nonzero coefficients: sum |a_k|^n diverges for every n"};
  }
  if (std::holds_alternative<ListRule>(rule)) {
    return {Kind::Converges, 0, "finite coefficient list: all power sums are finite"};
  }
  if (const auto* ind = std::get_if<IndicatorRule>(&rule)) {
    if (ind->set.declared_infinite) {
      return {Kind::Diverges, 0, "indicator of an infinite index family: infinitely many a_k = 1"};
    }
    return {Kind::Converges, 0, "indicator of a finite index set"};
  }
  const auto& g = std::get<GeometricRule>(rule);
  if (g.first.is_zero()) return {Kind::Converges, 0, "zero geometric family"};
  if (g.ratio.abs() < Rational(1)) {
    return {Kind::ConvergesForPower, 1, "geometric ratio below 1: sum |a_k| already converges"};
  }
  return {Kind::Diverges, 0, "geometric ratio at least 1: terms do not vanish"};
}

}  // namespace cml
