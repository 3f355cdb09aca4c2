#include <doctest.h>

#include <cmath>

#include "cml/continued_fraction.hpp"
#include "cml/cyclotomic.hpp"
#include "cml/errors.hpp"
#include "cml/filter_limit.hpp"
#include "cml/idempotent.hpp"
#include "cml/obstruction.hpp"
#include "cml/spectrum.hpp"

using namespace cml;

TEST_SUITE("cyclotomic") {
  TEST_CASE("vanishing sums of roots of unity") {
    for (int q : {2, 3, 5, 6, 8, 12}) {
      Cyclotomic sum = Cyclotomic::from_complex_rational(ComplexRational(0), q);
      for (int t = 0; t < q; ++t) sum = sum + Cyclotomic::root(q, t);
      CHECK(sum.is_zero());
    }
  }

  TEST_CASE("i is recognized as a gaussian rational at order 4") {
    Cyclotomic i4 = Cyclotomic::root(4, 1);
    auto cr = i4.as_complex_rational();
    REQUIRE(cr.has_value());
    CHECK(*cr == ComplexRational(Rational(0), Rational(1)));
  }

  TEST_CASE("zeta_3 is not gaussian rational but zeta_3 * conj is") {
    Cyclotomic z = Cyclotomic::root(3, 1);
    CHECK(!z.as_complex_rational().has_value());
    auto one = (z * z.conjugate()).as_complex_rational();
    REQUIRE(one.has_value());
    CHECK(*one == ComplexRational(1));
  }

  TEST_CASE("numeric evaluation matches the defining root") {
    Cyclotomic z = Cyclotomic::root(5, 2);
    ApproxComplex a = z.to_approx();
    constexpr double kTwoPi = 6.283185307179586;
    CHECK(a.re == doctest::Approx(std::cos(2 * kTwoPi / 5)).epsilon(1e-12));
    CHECK(a.im == doctest::Approx(std::sin(2 * kTwoPi / 5)).epsilon(1e-12));
  }
}

TEST_SUITE("idempotents") {
  TEST_CASE("examples") {
    DiscreteMeasure full = idempotent_from_residues(1, {0});
    REQUIRE(full.atom_count() == 1);
    CHECK(cv_exact_equal(full.atoms()[0].mass, cv_int(1)));

    DiscreteMeasure halves = idempotent_from_residues(2, {0});
    REQUIRE(halves.atom_count() == 2);
    CHECK(cv_exact_equal(halves.atoms()[0].mass, cv_rational(Rational(1, 2))));

    DiscreteMeasure zero = idempotent_from_residues(2, {});
    CHECK(zero.is_zero());
  }

  TEST_CASE("is_idempotent on hand measures") {
    DiscreteMeasure halves = idempotent_from_residues(2, {0});
    CHECK(is_idempotent(halves));
    CHECK(is_idempotent(DiscreteMeasure()));
    CHECK(!is_idempotent(DiscreteMeasure::delta(reduce_angle(1, 2))));
    CHECK(is_idempotent(DiscreteMeasure::delta(reduce_angle(0, 1))));
  }

  TEST_CASE("approximate measures are not decidable") {
    DiscreteMeasure fuzzy =
        DiscreteMeasure::delta(position_from_radians(1.0), ApproxComplex(1.0, 0.0, 1e-12));
    CHECK_THROWS_AS(is_idempotent(fuzzy), not_decidable_error);
  }

  TEST_CASE("every residue-set measure is idempotent, q <= 8") {
    for (int q = 1; q <= 8; ++q) {
      for (unsigned long mask = 0; mask < (1UL << q); ++mask) {
        std::set<int> residues;
        for (int r = 0; r < q; ++r) {
          if (mask & (1UL << r)) residues.insert(r);
        }
        DiscreteMeasure m = idempotent_from_residues(q, residues);
        CHECK(is_idempotent(m));
      }
    }
  }

  TEST_CASE("transform is the residue indicator") {
    // Exact on exact paths, within 1e-12 where a rational mass meets a
    // non-quarter angle and the value degrades to the approximate tier.
    for (int q : {2, 3, 5, 8}) {
      for (unsigned long mask : {1UL, 5UL, (1UL << q) - 1}) {
        std::set<int> residues;
        for (int r = 0; r < q; ++r) {
          if (mask & (1UL << r)) residues.insert(r);
        }
        DiscreteMeasure m = idempotent_from_residues(q, residues);
        for (long long n = -4 * q; n <= 4 * q; ++n) {
          int residue = static_cast<int>(((n % q) + q) % q);
          ComplexValue expected = cv_int(residues.count(residue) ? 1 : 0);
          ComplexValue got = fourier_coefficient(m, n);
          if (is_exact(got)) {
            CHECK(cv_exact_equal(got, expected));
          } else {
            CHECK(distance_upper(cv_approx(got), cv_approx(expected)) <= 1e-12);
          }
        }
      }
    }
  }

  TEST_CASE("enumerate counts and deduplicates") {
    CHECK(enumerate_idempotents(1).size() == 2);
    CHECK(enumerate_idempotents(2).size() == 4);
    CHECK(enumerate_idempotents(3).size() == 8);
    CHECK_THROWS_AS(enumerate_idempotents(17), resource_limit_error);
  }
}

TEST_SUITE("trigpoly_spectrum") {
  TEST_CASE("lebesgue truncation") {
    TrigPolynomial p = TrigPolynomial::from_coefficients({{0, cv_int(1)}});
    SpectrumReport r = trigpoly_spectrum(p);
    REQUIRE(r.points.size() == 2);
    CHECK(r.points[0].re == 0.0);
    CHECK(r.points[1].re == 1.0);
  }

  TEST_CASE("coefficient values plus zero, deduplicated") {
    TrigPolynomial p = TrigPolynomial::from_coefficients(
        {{0, cv_int(2)}, {5, cv_int(3)}, {-5, cv_int(3)}});
    SpectrumReport r = trigpoly_spectrum(p);
    REQUIRE(r.points.size() == 3);  // {0, 2, 3}
    CHECK(r.points[0].re == 0.0);
    CHECK(r.points[1].re == 2.0);
    CHECK(r.points[2].re == 3.0);
  }

  TEST_CASE("riesz convolution example {0, 1/4, 1}") {
    TrigPolynomial p = TrigPolynomial::from_coefficients({{-4, cv_rational(Rational(1, 4))},
                                                          {0, cv_int(1)},
                                                          {4, cv_rational(Rational(1, 4))}});
    SpectrumReport r = trigpoly_spectrum(p);
    REQUIRE(r.points.size() == 3);
    CHECK(r.points[0].re == 0.0);
    CHECK(r.points[1].re == 0.25);
    CHECK(r.points[2].re == 1.0);
  }
}

TEST_SUITE("spectral_radius_upper") {
  TEST_CASE("unimodular point mass") {
    RadiusBounds rb = spectral_radius_upper(DiscreteMeasure::delta(reduce_angle(1, 3)), 3);
    REQUIRE(rb.u.size() == 3);
    for (const auto& e : rb.u) {
      CHECK(e.lo == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(e.hi == doctest::Approx(1.0).epsilon(1e-9));
    }
  }

  TEST_CASE("2 delta_0 has norm powers 2^m") {
    DiscreteMeasure m = DiscreteMeasure::delta(reduce_angle(0, 1), cv_int(2));
    RadiusBounds rb = spectral_radius_upper(m, 2);
    CHECK(rb.u[0].hi == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(rb.u[1].hi == doctest::Approx(2.0).epsilon(1e-9));
  }

  TEST_CASE("probability measures stay at 1 and the minimum never increases") {
    DiscreteMeasure m = DiscreteMeasure::from_atoms({
        {reduce_angle(1, 4), cv_rational(Rational(1, 2))},
        {reduce_angle(3, 4), cv_rational(Rational(1, 2))},
    });
    RadiusBounds rb = spectral_radius_upper(m, 6);
    for (const auto& e : rb.u) {
      CHECK(e.lo <= 1.0 + 1e-9);
      CHECK(e.hi >= 1.0 - 1e-9);
      CHECK(e.hi <= 1.0 + 1e-9);
    }
    for (size_t i = 1; i < rb.running_min_upper.size(); ++i) {
      CHECK(rb.running_min_upper[i] <= rb.running_min_upper[i - 1]);
    }
  }

  TEST_CASE("guards") {
    DiscreteMeasure m = DiscreteMeasure::delta(reduce_angle(0, 1));
    CHECK_THROWS_AS(spectral_radius_upper(m, 13), resource_limit_error);
  }
}

TEST_SUITE("natural_spectrum_gap") {
  TEST_CASE("brown-moran riesz products: real range, witness i at distance 1") {
    for (long long base : {3, 4}) {
      RieszProductSpec spec = RieszProductSpec::make(LacunarySequence::power(base, 8),
                                                     ConstantRule{Rational(1)}, 8);
      SpectrumReport r = natural_spectrum_gap(spec, 1000);
      CHECK(!r.precondition_failed);
      CHECK(r.radius_lo == 1.0);
      CHECK(r.radius_hi == 1.0);
      REQUIRE(r.witness.has_value());
      CHECK(r.witness->im == 1.0);
      CHECK(r.gap == 1.0);
      for (const auto& z : r.points) {
        CHECK(z.im == 0.0);
        CHECK(z.re >= 0.0);
        CHECK(z.re <= 1.0);
      }
    }
  }

  TEST_CASE("summable coefficients fail the precondition") {
    RieszProductSpec spec = RieszProductSpec::make(
        LacunarySequence::power(4, 8), GeometricRule{Rational(1, 2), Rational(1, 2)}, 8);
    SpectrumReport r = natural_spectrum_gap(spec, 100);
    CHECK(r.precondition_failed);
  }
}

TEST_SUITE("exp_obstruction") {
  TEST_CASE("frozen drift values for alpha = 1") {
    constexpr double kTwoPi = 6.283185307179586476925286766559;

    ObstructionWitness w50 = exp_obstruction(1.0, 10.0, 50);
    CHECK(w50.m == 44);
    CHECK(w50.s == 7);
    CHECK(w50.drift == doctest::Approx(std::fabs(44.0 - 7.0 * kTwoPi)).epsilon(1e-9));
    CHECK(w50.growth_index == 565);

    ObstructionWitness w20 = exp_obstruction(1.0, 1.0, 20);
    CHECK(w20.m == 19);
    CHECK(w20.s == 3);
    CHECK(w20.drift == doctest::Approx(std::fabs(19.0 - 3.0 * kTwoPi)).epsilon(1e-9));
    CHECK(w20.growth_index == 7);

    ObstructionWitness w30 = exp_obstruction(1.0, 1.0, 30);
    CHECK(w30.m == 25);
    CHECK(w30.s == 4);
    CHECK(w30.drift == doctest::Approx(std::fabs(25.0 - 4.0 * kTwoPi)).epsilon(1e-9));
  }

  TEST_CASE("agrees with the exhaustive scan") {
    constexpr double kTwoPi = 6.283185307179586476925286766559;
    for (double alpha : {1.0, 0.7, 2.9, 5.1}) {
      for (long long M : {10LL, 30LL, 80LL}) {
        ObstructionWitness w = exp_obstruction(alpha, 1.0, M);
        double best = 1e300;
        for (long long m = 1; m <= M; ++m) {
          double s = std::round(m * alpha / kTwoPi);
          best = std::min(best, std::fabs(m * alpha - kTwoPi * s));
        }
        CHECK(w.drift == doctest::Approx(best).epsilon(1e-12));
        CHECK(w.m <= M);
        // optimal s for the returned m
        CHECK(w.s == static_cast<long long>(std::round(w.m * alpha / kTwoPi)));
        CHECK(static_cast<double>(w.growth_index) * w.drift >= w.target_bound);
      }
    }
  }

  TEST_CASE("rational multiples of pi are rejected") {
    constexpr double kPi = 3.141592653589793238462643383279502884;
    CHECK_THROWS_AS(exp_obstruction(kPi / 2, 10.0, 50), not_applicable_error);
    CHECK_THROWS_AS(exp_obstruction(kPi, 10.0, 50), not_applicable_error);
    CHECK_THROWS_AS(exp_obstruction(2 * kPi / 3, 10.0, 50), not_applicable_error);
    CHECK(detect_rational(0.5));
    CHECK(!detect_rational(1.0 / kPi));
  }
}

TEST_SUITE("filter_limit") {
  TEST_CASE("riesz transform along its own frequencies is exactly 1/2") {
    LacunarySequence seq = LacunarySequence::power(4, 14);
    IndexSet X = sierpinski_member("000", 3);  // {1, 3, 7}
    RieszProductSpec mu = RieszProductSpec::make(seq, IndicatorRule{X}, 14);
    FilterLimitResult r = filter_limit(SequenceSource::from_riesz(mu),
                                       IndexSubset::lacunary_frequencies(seq, X), 1e-9, 1 << 26);
    CHECK(r.converged);
    REQUIRE(r.limit.has_value());
    CHECK(cv_exact_equal(*r.limit, cv_rational(Rational(1, 2))));
    CHECK(r.oscillation == 0.0);
  }

  TEST_CASE("along disjoint frequencies the limit is exactly 0") {
    LacunarySequence seq = LacunarySequence::power(4, 14);
    IndexSet X = sierpinski_member("000", 3);  // {1, 3, 7}
    IndexSet Y = sierpinski_member("011", 3);  // {1, 4, 10}
    std::vector<int> tail;
    for (int k : Y.indices) {
      if (!X.contains(k)) tail.push_back(k);  // {4, 10}
    }
    RieszProductSpec mu = RieszProductSpec::make(seq, IndicatorRule{X}, 14);
    FilterLimitResult r = filter_limit(
        SequenceSource::from_riesz(mu),
        IndexSubset::lacunary_frequencies(seq, IndexSet::from_indices(tail, true)), 1e-9, 1 << 26);
    CHECK(r.converged);
    REQUIRE(r.limit.has_value());
    CHECK(cv_exact_equal(*r.limit, cv_int(0)));
  }

  TEST_CASE("alternating sequence diverges with liminf -1, limsup 1") {
    FilterLimitResult r =
        filter_limit(SequenceSource::alternating(), IndexSubset::all_integers(), 0.5, 50);
    CHECK(!r.converged);
    CHECK(r.liminf_re == -1.0);
    CHECK(r.limsup_re == 1.0);
  }

  TEST_CASE("empty subset is insufficient data") {
    CHECK_THROWS_AS(filter_limit(SequenceSource::alternating(),
                                 IndexSubset::explicit_list({1000}), 0.5, 10),
                    insufficient_data_error);
  }
}
