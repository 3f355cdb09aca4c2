#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "cml/errors.hpp"

namespace cml {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored reduced with positive denominator.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
  explicit Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw invalid_input_error("rational with zero denominator");
    if (den < 0) {
      v_ = boost::multiprecision::cpp_rational(-num, -den);
    } else {
      v_ = boost::multiprecision::cpp_rational(num, den);
    }
  }
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Exact value of a double (every finite double is a dyadic rational).
  static Rational from_double(double x) {
    Rational r;
    r.v_ = boost::multiprecision::cpp_rational(x);
    return r;
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return denominator() == 1; }

  double to_double() const { return v_.convert_to<double>(); }

  Rational abs() const { return v_ < 0 ? -*this : *this; }

  Rational pow(long long e) const {
    if (e < 0) {
      if (is_zero()) throw invalid_input_error("0 raised to negative power");
      return (Rational(1) / *this).pow(-e);
    }
    Rational base = *this, acc = 1;
    while (e > 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw invalid_input_error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
  boost::multiprecision::cpp_rational v_;
};

}  // namespace cml
