#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <random>

#include "cml/approx_complex.hpp"
#include "cml/complex_rational.hpp"
#include "cml/continued_fraction.hpp"
#include "cml/errors.hpp"
#include "cml/rational.hpp"
#include "cml/turn_angle.hpp"

using namespace cml;

namespace {

using Quad = boost::multiprecision::cpp_bin_float_quad;

struct QuadComplex {
  Quad re, im;
};

QuadComplex q_add(const QuadComplex& a, const QuadComplex& b) { return {a.re + b.re, a.im + b.im}; }
QuadComplex q_mul(const QuadComplex& a, const QuadComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("construction reduces and normalizes the sign") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK_THROWS_AS(Rational(1, 0), invalid_input_error);
  }

  TEST_CASE("field laws on randomized desk instances") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long long> num(-1000000, 1000000);
    std::uniform_int_distribution<long long> den(1, 1000000);
    for (int i = 0; i < 200; ++i) {
      Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }

  TEST_CASE("pow and from_double") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational::from_double(0.5) == Rational(1, 2));
    CHECK(Rational::from_double(0.1) != Rational(1, 10));  // 0.1 is not dyadic
  }
}

TEST_SUITE("complex_rational") {
  TEST_CASE("ring operations and conjugation") {
    ComplexRational i(Rational(0), Rational(1));
    CHECK(i * i == ComplexRational(-1));
    CHECK(i.conjugate() == ComplexRational(Rational(0), Rational(-1)));
    CHECK(ComplexRational(Rational(3), Rational(4)).norm_sq() == Rational(25));
  }
}

TEST_SUITE("approx_complex") {
  TEST_CASE("error bound holds against quad-precision reference") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    for (int trial = 0; trial < 300; ++trial) {
      ApproxComplex a(coord(rng), coord(rng), 0.0);
      ApproxComplex b(coord(rng), coord(rng), 0.0);
      ApproxComplex c(coord(rng), coord(rng), 0.0);
      QuadComplex qa{a.re, a.im}, qb{b.re, b.im}, qc{c.re, c.im};

      ApproxComplex r = (a + b) * c + a * a - b * c;
      QuadComplex qr = q_add(q_add(q_mul(q_add(qa, qb), qc), q_mul(qa, qa)),
                             QuadComplex{-(q_mul(qb, qc).re), -(q_mul(qb, qc).im)});
      double dre = static_cast<double>(qr.re - Quad(r.re));
      double dim = static_cast<double>(qr.im - Quad(r.im));
      CHECK(std::hypot(dre, dim) <= r.err);
    }
  }

  TEST_CASE("conversion from exact values") {
    ApproxComplex half = ApproxComplex::from_exact(ComplexRational(Rational(1, 2)));
    CHECK(half.err == 0.0);
    ApproxComplex third = ApproxComplex::from_exact(ComplexRational(Rational(1, 3)));
    CHECK(third.err > 0.0);
    CHECK(third.err < 1e-15);
  }
}

TEST_SUITE("turn_angle") {
  TEST_CASE("reduce_angle wraps and reduces") {
    CHECK(reduce_angle(3, 2) == reduce_angle(1, 2));
    CHECK(reduce_angle(0, 7) == reduce_angle(0, 1));
    CHECK(reduce_angle(-1, 4) == reduce_angle(3, 4));
    CHECK_THROWS_AS(reduce_angle(1, 0), invalid_input_error);
  }

  TEST_CASE("quarter-turn path is exact") {
    ApproxComplex v = root_of_unity(reduce_angle(1, 4), 1);
    CHECK(v.re == 0.0);
    CHECK(v.im == -1.0);
    CHECK(v.err == 0.0);

    ApproxComplex one = root_of_unity(reduce_angle(0, 1), 5);
    CHECK(one.re == 1.0);
    CHECK(one.im == 0.0);
    CHECK(one.err == 0.0);
  }

  TEST_CASE("exp(-2 pi i/3) to high precision") {
    ApproxComplex v = root_of_unity(reduce_angle(1, 3), 1);
    CHECK(v.err <= 1e-12);
    CHECK(v.re == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(v.im == doctest::Approx(-0.86602540378443865).epsilon(1e-12));
  }

  TEST_CASE("group law within error bounds") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long long> pq(1, 60);
    std::uniform_int_distribution<long long> ns(-40, 40);
    for (int trial = 0; trial < 200; ++trial) {
      long long q = pq(rng);
      TurnAngle a = reduce_angle(pq(rng), q);
      long long n = ns(rng), m = ns(rng);
      ApproxComplex lhs = root_of_unity(a, n) * root_of_unity(a, m);
      ApproxComplex rhs = root_of_unity(a, n + m);
      CHECK(distance_upper(lhs, rhs) <= lhs.err + rhs.err + 1e-13);
    }
  }
}

TEST_SUITE("continued_fraction") {
  TEST_CASE("frozen convergents of 2 pi") {
    auto cs = convergents(6.283185307179586, 4);
    REQUIRE(cs.size() == 4);
    CHECK(cs[0] == Convergent{6, 1});
    CHECK(cs[1] == Convergent{19, 3});
    CHECK(cs[2] == Convergent{25, 4});
    CHECK(cs[3] == Convergent{44, 7});
  }

  TEST_CASE("terminating rational inputs") {
    auto one = convergents(1.0, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Convergent{1, 1});

    auto three_halves = convergents(1.5, 2);
    REQUIRE(three_halves.size() == 2);
    CHECK(three_halves[0] == Convergent{1, 1});
    CHECK(three_halves[1] == Convergent{3, 2});
  }

  TEST_CASE("rejects non-finite input") {
    CHECK_THROWS_AS(convergents(std::nan(""), 3), invalid_input_error);
    CHECK_THROWS_AS(convergents(-1.0, 3), invalid_input_error);
  }

  TEST_CASE("best-approximation property |x - p/q| < 1/q^2") {
    std::mt19937 rng(123);
    std::uniform_real_distribution<double> xs(0.01, 100.0);
    for (int trial = 0; trial < 200; ++trial) {
      double x = xs(rng);
      Rational exact_x = Rational::from_double(x);
      for (const Convergent& c : convergents(x, 12)) {
        Rational err = (exact_x - Rational(c.p, c.q)).abs();
        CHECK(err < Rational(1) / (Rational(c.q) * Rational(c.q)));
      }
    }
  }
}
