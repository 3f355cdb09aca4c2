#include "cml/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "cml/errors.hpp"
#include "cml/turn_angle.hpp"

namespace cml {

namespace {

using Poly = std::vector<Rational>;  // coefficients, lowest degree first

void strip(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Exact division; callers only divide when the quotient is known to be a
// polynomial (x^q - 1 by products of cyclotomic factors).
Poly divide_exact(Poly num, const Poly& den) {
  Poly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
  for (int d = static_cast<int>(num.size()) - 1; d >= static_cast<int>(den.size()) - 1; --d) {
    Rational c = num[d] / den.back();
    int shift = d - static_cast<int>(den.size()) + 1;
    quot[shift] = c;
    if (c.is_zero()) continue;
    for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  strip(num);
  if (!num.empty()) throw invalid_input_error("cyclotomic: non-exact polynomial division");
  strip(quot);
  return quot;
}

Poly remainder(Poly num, const Poly& den) {
  for (int d = static_cast<int>(num.size()) - 1; d >= static_cast<int>(den.size()) - 1; --d) {
    Rational c = num[d] / den.back();
    if (c.is_zero()) continue;
    int shift = d - static_cast<int>(den.size()) + 1;
    for (size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
  }
  strip(num);
  return num;
}

void check_order(int q) {
  if (q < 1) throw invalid_input_error("cyclotomic order must be positive");
  if (q > Cyclotomic::kMaxOrder) throw resource_limit_error("cyclotomic order beyond configured cap");
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(int q) {
  check_order(q);
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;

  // Phi_q = (x^q - 1) / prod_{d | q, d < q} Phi_d, computed bottom-up.
  for (int n = 1; n <= q; ++n) {
    if (cache.count(n) || q % n != 0) continue;
    Poly num(n + 1, Rational(0));
    num[0] = Rational(-1);
    num[n] = Rational(1);
    for (int d = 1; d < n; ++d) {
      if (n % d == 0) num = divide_exact(std::move(num), cache.at(d));
    }
    cache.emplace(n, std::move(num));
  }
  return cache.at(q);
}

Cyclotomic Cyclotomic::from_complex_rational(const ComplexRational& z, int order) {
  check_order(order);
  Cyclotomic r;
  r.order_ = order;
  r.c_.assign(order, ComplexRational());
  r.c_[0] = z;
  return r;
}

Cyclotomic Cyclotomic::root(int order, long long expo) {
  check_order(order);
  Cyclotomic r;
  r.order_ = order;
  r.c_.assign(order, ComplexRational());
  long long e = expo % order;
  if (e < 0) e += order;
  r.c_[static_cast<size_t>(e)] = ComplexRational(1);
  return r;
}

Cyclotomic Cyclotomic::embedded(int order2) const {
  check_order(order2);
  if (order2 == order_) return *this;
  if (order2 % order_ != 0) throw invalid_input_error("cyclotomic embedding needs a divisible order");
  Cyclotomic r;
  r.order_ = order2;
  r.c_.assign(order2, ComplexRational());
  int stride = order2 / order_;
  for (int t = 0; t < order_; ++t) r.c_[static_cast<size_t>(t) * stride] = c_[t];
  return r;
}

Cyclotomic Cyclotomic::conjugate() const {
  Cyclotomic r;
  r.order_ = order_;
  r.c_.assign(order_, ComplexRational());
  for (int t = 0; t < order_; ++t) r.c_[(order_ - t) % order_] = c_[t].conjugate();
  return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  int q = std::lcm(a.order_, b.order_);
  Cyclotomic x = a.embedded(q), y = b.embedded(q);
  for (int t = 0; t < q; ++t) x.c_[t] += y.c_[t];
  return x;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic r = a;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  int q = std::lcm(a.order_, b.order_);
  Cyclotomic x = a.embedded(q), y = b.embedded(q);
  Cyclotomic r;
  r.order_ = q;
  r.c_.assign(q, ComplexRational());
  for (int s = 0; s < q; ++s) {
    if (x.c_[s].is_zero()) continue;
    for (int t = 0; t < q; ++t) {
      if (y.c_[t].is_zero()) continue;
      r.c_[(s + t) % q] += x.c_[s] * y.c_[t];
    }
  }
  return r;
}

bool Cyclotomic::is_zero() const {
  Poly re(order_), im(order_);
  for (int t = 0; t < order_; ++t) {
    re[t] = c_[t].re;
    im[t] = c_[t].im;
  }
  strip(re);
  strip(im);
  const Poly& phi = cyclotomic_polynomial(order_);
  if (order_ % 4 == 0) {
    // i = zeta^(q/4): fold the imaginary polynomial in and test once.
    Poly d(order_, Rational(0));
    for (size_t t = 0; t < re.size(); ++t) d[t] += re[t];
    int shift = order_ / 4;
    for (size_t t = 0; t < im.size(); ++t) d[(t + shift) % order_] += im[t];
    strip(d);
    return remainder(std::move(d), phi).empty();
  }
  // 4 does not divide q, so i is independent of Q(zeta_q).
  return remainder(std::move(re), phi).empty() && remainder(std::move(im), phi).empty();
}

std::optional<ComplexRational> Cyclotomic::as_complex_rational() const {
  const Poly& phi = cyclotomic_polynomial(order_);
  Poly re(order_), im(order_);
  for (int t = 0; t < order_; ++t) {
    re[t] = c_[t].re;
    im[t] = c_[t].im;
  }
  strip(re);
  strip(im);
  if (order_ % 4 == 0) {
    int shift = order_ / 4;
    Poly d(order_, Rational(0));
    for (size_t t = 0; t < re.size(); ++t) d[t] += re[t];
    for (size_t t = 0; t < im.size(); ++t) d[(t + shift) % order_] += im[t];
    strip(d);
    Poly rem = remainder(std::move(d), phi);
    // Gaussian rationals reduce to span{1, x^(q/4)} in the power basis.
    if (static_cast<int>(phi.size()) - 1 <= shift) return std::nullopt;
    ComplexRational out;
    for (size_t t = 0; t < rem.size(); ++t) {
      if (rem[t].is_zero()) continue;
      if (t == 0) {
        out.re = rem[t];
      } else if (static_cast<int>(t) == shift) {
        out.im = rem[t];
      } else {
        return std::nullopt;
      }
    }
    return out;
  }
  Poly rr = remainder(std::move(re), phi);
  Poly ri = remainder(std::move(im), phi);
  if (rr.size() > 1 || ri.size() > 1) return std::nullopt;
  return ComplexRational(rr.empty() ? Rational(0) : rr[0], ri.empty() ? Rational(0) : ri[0]);
}

ApproxComplex Cyclotomic::to_approx() const {
  ApproxComplex acc;
  for (int t = 0; t < order_; ++t) {
    if (c_[t].is_zero()) continue;
    // zeta^t = exp(+2*pi*i*t/q) = conj(exp(-2*pi*i*t/q)).
    ApproxComplex unit = root_of_unity(reduce_angle(t, order_), BigInt(1)).conjugate();
    acc = acc + ApproxComplex::from_exact(c_[t]) * unit;
  }
  return acc;
}

}  // namespace cml
