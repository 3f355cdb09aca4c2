#include "cml/complex_value.hpp"

#include <cstdio>

#include "cml/errors.hpp"

namespace cml {

namespace {

// Collapse a cyclotomic result back to the rational tier when possible, so
// plain measures stay plain after passing through cyclotomic arithmetic.
ComplexValue normalized(Cyclotomic c) {
  if (auto cr = c.as_complex_rational()) return *cr;
  return c;
}

template <typename OpCR, typename OpCy, typename OpAp>
ComplexValue combine(const ComplexValue& a, const ComplexValue& b, OpCR op_cr, OpCy op_cy, OpAp op_ap) {
  if (std::holds_alternative<ApproxComplex>(a) || std::holds_alternative<ApproxComplex>(b)) {
    return op_ap(cv_approx(a), cv_approx(b));
  }
  if (std::holds_alternative<Cyclotomic>(a) || std::holds_alternative<Cyclotomic>(b)) {
    auto lift = [](const ComplexValue& v) {
      if (const auto* c = std::get_if<Cyclotomic>(&v)) return *c;
      return Cyclotomic::from_complex_rational(std::get<ComplexRational>(v));
    };
    return normalized(op_cy(lift(a), lift(b)));
  }
  return op_cr(std::get<ComplexRational>(a), std::get<ComplexRational>(b));
}

}  // namespace

bool is_exact(const ComplexValue& v) { return !std::holds_alternative<ApproxComplex>(v); }

bool exact_zero(const ComplexValue& v) {
  if (const auto* cr = std::get_if<ComplexRational>(&v)) return cr->is_zero();
  if (const auto* cy = std::get_if<Cyclotomic>(&v)) return cy->is_zero();
  const auto& ap = std::get<ApproxComplex>(v);
  return ap.re == 0.0 && ap.im == 0.0 && ap.err == 0.0;
}

ComplexValue cv_add(const ComplexValue& a, const ComplexValue& b) {
  return combine(
      a, b, [](const ComplexRational& x, const ComplexRational& y) -> ComplexValue { return x + y; },
      [](const Cyclotomic& x, const Cyclotomic& y) { return x + y; },
      [](const ApproxComplex& x, const ApproxComplex& y) -> ComplexValue { return x + y; });
}

ComplexValue cv_sub(const ComplexValue& a, const ComplexValue& b) {
  return combine(
      a, b, [](const ComplexRational& x, const ComplexRational& y) -> ComplexValue { return x - y; },
      [](const Cyclotomic& x, const Cyclotomic& y) { return x - y; },
      [](const ApproxComplex& x, const ApproxComplex& y) -> ComplexValue { return x - y; });
}

ComplexValue cv_mul(const ComplexValue& a, const ComplexValue& b) {
  return combine(
      a, b, [](const ComplexRational& x, const ComplexRational& y) -> ComplexValue { return x * y; },
      [](const Cyclotomic& x, const Cyclotomic& y) { return x * y; },
      [](const ApproxComplex& x, const ApproxComplex& y) -> ComplexValue { return x * y; });
}

ComplexValue cv_neg(const ComplexValue& v) {
  if (const auto* cr = std::get_if<ComplexRational>(&v)) return -*cr;
  if (const auto* cy = std::get_if<Cyclotomic>(&v)) return -*cy;
  return -std::get<ApproxComplex>(v);
}

ComplexValue cv_conj(const ComplexValue& v) {
  if (const auto* cr = std::get_if<ComplexRational>(&v)) return cr->conjugate();
  if (const auto* cy = std::get_if<Cyclotomic>(&v)) return normalized(cy->conjugate());
  return std::get<ApproxComplex>(v).conjugate();
}

bool cv_exact_equal(const ComplexValue& a, const ComplexValue& b) {
  if (!is_exact(a) || !is_exact(b)) {
    throw not_decidable_error("exact equality requested on approximate values");
  }
  return exact_zero(cv_sub(a, b));
}

ApproxComplex cv_approx(const ComplexValue& v) {
  if (const auto* cr = std::get_if<ComplexRational>(&v)) return ApproxComplex::from_exact(*cr);
  if (const auto* cy = std::get_if<Cyclotomic>(&v)) return cy->to_approx();
  return std::get<ApproxComplex>(v);
}

std::optional<ComplexRational> cv_as_complex_rational(const ComplexValue& v) {
  if (const auto* cr = std::get_if<ComplexRational>(&v)) return *cr;
  if (const auto* cy = std::get_if<Cyclotomic>(&v)) return cy->as_complex_rational();
  return std::nullopt;
}

std::optional<Rational> cv_norm_sq_rational(const ComplexValue& v) {
  if (const auto* cr = std::get_if<ComplexRational>(&v)) return cr->norm_sq();
  if (const auto* cy = std::get_if<Cyclotomic>(&v)) {
    // |c|^2 = c * conj(c); rational exactly when the product collapses.
    if (auto cr = (*cy * cy->conjugate()).as_complex_rational(); cr && cr->is_real()) return cr->re;
    return std::nullopt;
  }
  return std::nullopt;
}

std::string cv_str(const ComplexValue& v) {
  if (const auto* cr = std::get_if<ComplexRational>(&v)) return cr->str();
  if (const auto* cy = std::get_if<Cyclotomic>(&v)) {
    if (auto cr = cy->as_complex_rational()) return cr->str();
    ApproxComplex a = cy->to_approx();
    char buf[96];
    std::snprintf(buf, sizeof(buf), "~(%.12g%+.12gi) [zeta_%d]", a.re, a.im, cy->order());
    return buf;
  }
  const auto& ap = std::get<ApproxComplex>(v);
  char buf[96];
  std::snprintf(buf, sizeof(buf), "(%.17g%+.17gi)+-%.3g", ap.re, ap.im, ap.err);
  return buf;
}

}  // namespace cml
