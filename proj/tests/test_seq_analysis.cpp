#include <doctest.h>

#include <cmath>
#include <random>

#include "cml/almost_periodic.hpp"
#include "cml/density_gap.hpp"
#include "cml/errors.hpp"
#include "cml/sequence_window.hpp"
#include "cml/wiener.hpp"

using namespace cml;

namespace {

DiscreteMeasure half_pair() {
  return DiscreteMeasure::from_atoms({
      {reduce_angle(0, 1), cv_rational(Rational(1, 2))},
      {reduce_angle(1, 2), cv_rational(Rational(1, 2))},
  });
}

}  // namespace

TEST_SUITE("wiener_average") {
  TEST_CASE("point mass gives 1 at every N") {
    WienerValue v = wiener_average(DiscreteMeasure::delta(reduce_angle(0, 1)), 10);
    REQUIRE(v.exact.has_value());
    CHECK(*v.exact == Rational(1));
  }

  TEST_CASE("half pair at N = 2 gives 3/5") {
    WienerValue v = wiener_average(half_pair(), 2);
    REQUIRE(v.exact.has_value());
    CHECK(*v.exact == Rational(3, 5));
  }

  TEST_CASE("riesz R(1, 4^k) at N = 5 gives 9/44") {
    RieszProductSpec spec =
        RieszProductSpec::make(LacunarySequence::power(4, 6), ConstantRule{Rational(1)}, 6);
    WienerValue v = wiener_average(spec, 5);
    REQUIRE(v.exact.has_value());
    CHECK(*v.exact == Rational(9, 44));
  }

  TEST_CASE("riesz path agrees with the generic measure-sum path") {
    RieszProductSpec spec =
        RieszProductSpec::make(LacunarySequence::power(4, 8), ConstantRule{Rational(1)}, 8);
    MeasureSum ms;
    ms.continuous.emplace_back(spec);
    for (long long N : {3, 17, 40}) {
      WienerValue fast = wiener_average(spec, N);
      WienerValue slow = wiener_average(ms, N);
      REQUIRE(fast.exact.has_value());
      REQUIRE(slow.exact.has_value());
      CHECK(*fast.exact == *slow.exact);
    }
  }
}

TEST_SUITE("atom_mass_sum") {
  TEST_CASE("examples") {
    MassSum a = atom_mass_sum(DiscreteMeasure::delta(reduce_angle(0, 1)));
    REQUIRE(a.exact.has_value());
    CHECK(*a.exact == Rational(1));

    MassSum b = atom_mass_sum(half_pair());
    REQUIRE(b.exact.has_value());
    CHECK(*b.exact == Rational(1, 2));

    MassSum c = atom_mass_sum(
        DiscreteMeasure::delta(reduce_angle(1, 3), cv_rational(Rational(3), Rational(4))));
    REQUIRE(c.exact.has_value());
    CHECK(*c.exact == Rational(25));
  }
}

TEST_SUITE("wiener_report") {
  TEST_CASE("point mass: averages constant, claim 1") {
    WienerReport r = wiener_report(DiscreteMeasure::delta(reduce_angle(0, 1)), {1, 10, 100});
    CHECK(r.limit_claim == Rational(1));
    for (double e : r.abs_errors) CHECK(e == 0.0);
    CHECK(r.converging);
  }

  TEST_CASE("riesz averages decay toward claim 0") {
    RieszProductSpec spec =
        RieszProductSpec::make(LacunarySequence::power(4, 8), ConstantRule{Rational(1)}, 8);
    WienerReport r = wiener_report(spec, {5, 50, 500});
    CHECK(r.limit_claim == Rational(0));
    CHECK(r.abs_errors[1] < r.abs_errors[0]);
    CHECK(r.abs_errors[2] < r.abs_errors[1]);
    CHECK(r.converging);
  }

  TEST_CASE("continuous parts do not move the claim") {
    MeasureSum ms;
    ms.discrete = DiscreteMeasure::delta(reduce_angle(0, 1));
    ms.continuous.emplace_back(TrigPolynomial::from_coefficients({{0, cv_int(1)}}));
    WienerReport r = wiener_report(ms, {2, 20});
    CHECK(r.limit_claim == Rational(1));
  }

  TEST_CASE("wiener consistency on random exact measures") {
    std::mt19937 rng(314);
    std::uniform_int_distribution<long long> dens(1, 12);
    std::uniform_int_distribution<long long> nums(-7, 7);
    std::uniform_int_distribution<int> natoms(1, 6);
    for (int t = 0; t < 12; ++t) {
      long long q = dens(rng);
      std::vector<DiscreteMeasure::Atom> atoms;
      int count = natoms(rng);
      for (int i = 0; i < count; ++i) {
        std::uniform_int_distribution<long long> ps(0, q - 1);
        atoms.push_back({reduce_angle(ps(rng), q),
                         cv_rational(Rational(nums(rng), 10), Rational(nums(rng), 10))});
      }
      DiscreteMeasure m = DiscreteMeasure::from_atoms(std::move(atoms));
      if (m.is_zero()) continue;
      double avg = wiener_average(m, 600).value;
      double claim = atom_mass_sum(m).exact->to_double();
      double bound = 2.0 * static_cast<double>(m.atom_count() * m.atom_count()) / 600.0;
      CHECK(std::fabs(avg - claim) <= bound);
    }
  }
}

TEST_SUITE("find_epsilon_periods") {
  TEST_CASE("constant sequences accept every shift") {
    SequenceWindow w = constant_window(-20, 20, {1.0, 0.0, 0.0});
    EpsilonPeriodScan scan = find_epsilon_periods(w, 0.5, 1);
    CHECK(scan.all_verified);
    for (const auto& iv : scan.intervals) {
      REQUIRE(iv.period.has_value());
      CHECK(*iv.period == iv.interval_lo);
    }
  }

  TEST_CASE("transform of delta_{1/3} has exact period 3") {
    SequenceWindow w = transform_window(DiscreteMeasure::delta(reduce_angle(1, 3)), -30, 30);
    EpsilonPeriodScan scan = find_epsilon_periods(w, 1e-9, 3);
    CHECK(scan.all_verified);
    for (const auto& iv : scan.intervals) {
      REQUIRE(iv.period.has_value());
      CHECK(*iv.period % 3 == 0);
    }
  }

  TEST_CASE("periodic transforms find m = q in every interval (Prop 5 desk form)") {
    for (long long q : {2, 5, 7, 12}) {
      std::vector<DiscreteMeasure::Atom> atoms;
      for (long long j = 0; j < q; ++j) {
        atoms.push_back({reduce_angle(j, q), cv_rational(Rational(j + 1, 2 * q))});
      }
      DiscreteMeasure m = DiscreteMeasure::from_atoms(std::move(atoms));
      SequenceWindow w = transform_window(m, -6 * q, 6 * q);
      EpsilonPeriodScan scan = find_epsilon_periods(w, 1e-9, q);
      CHECK(scan.all_verified);
      for (const auto& iv : scan.intervals) {
        REQUIRE(iv.period.has_value());
        CHECK(*iv.period % q == 0);
      }
    }
  }

  TEST_CASE("step sequence fails every interval within [1, 50]") {
    SequenceWindow w = step_window(-100, 100);
    EpsilonPeriodScan scan = find_epsilon_periods(w, 0.9, 10);
    REQUIRE(scan.intervals.size() >= 5);
    for (size_t i = 0; i < 5; ++i) {
      CHECK(!scan.intervals[i].period.has_value());
    }
    CHECK(!scan.all_verified);
  }

  TEST_CASE("window too short") {
    SequenceWindow w = step_window(-2, 2);
    CHECK_THROWS_AS(find_epsilon_periods(w, 0.5, 10), insufficient_data_error);
  }
}

TEST_SUITE("ap_falsify_step") {
  TEST_CASE("witnesses n = -m with unit jump") {
    SequenceWindow w = step_window(-70, 70);
    StepFalsification f = ap_falsify_step(10, 0.9, w);
    CHECK(f.falsified);
    REQUIRE(f.witnesses.size() == 10);
    for (const auto& wit : f.witnesses) {
      CHECK(wit.n == -wit.m);
      CHECK(wit.jump == 1.0);
    }
  }

  TEST_CASE("p = 1 at eps = 0.5") {
    SequenceWindow w = step_window(-10, 10);
    StepFalsification f = ap_falsify_step(1, 0.5, w);
    CHECK(f.falsified);
    REQUIRE(f.witnesses.size() == 1);
    CHECK(f.witnesses[0].n == -1);
  }

  TEST_CASE("eps >= 1 is rejected") {
    SequenceWindow w = step_window(-10, 10);
    CHECK_THROWS_AS(ap_falsify_step(2, 1.0, w), invalid_input_error);
    CHECK_THROWS_AS(ap_falsify_step(2, 1.5, w), invalid_input_error);
  }
}

TEST_SUITE("bounded_log") {
  TEST_CASE("constants") {
    SequenceWindow ones = constant_window(-5, 5, {1.0, 0.0, 0.0});
    SequenceWindow logs = bounded_log(ones, 0.5);
    for (const auto& v : logs.values) {
      CHECK(v.re == 0.0);
      CHECK(v.im == 0.0);
    }

    double e2 = std::exp(2.0);
    SequenceWindow big = constant_window(-5, 5, {e2, 0.0, 0.0});
    SequenceWindow blog = bounded_log(big, 0.5);
    for (const auto& v : blog.values) {
      CHECK(v.re == doctest::Approx(2.0).epsilon(1e-12));
    }
  }

  TEST_CASE("principal branch of e^{-in}") {
    std::vector<ApproxComplex> vals;
    for (long long n = -5; n <= 5; ++n) {
      vals.push_back({std::cos(static_cast<double>(n)), -std::sin(static_cast<double>(n)), 0.0});
    }
    SequenceWindow w = make_window(-5, 5, vals, "exp(-in)");
    SequenceWindow logs = bounded_log(w, 0.5);
    constexpr double kPi = 3.141592653589793;
    for (long long n = -5; n <= 5; ++n) {
      const ApproxComplex& b = logs.at(n);
      double wrapped = std::remainder(static_cast<double>(-n), 2.0 * kPi);
      CHECK(b.im == doctest::Approx(wrapped).epsilon(1e-9));
      CHECK(b.im <= kPi);
      CHECK(b.im > -kPi);
      CHECK(std::fabs(b.re) < 1e-12);
    }
  }

  TEST_CASE("roundtrip within 1e-9 on random invertible windows") {
    std::mt19937 rng(2718);
    std::uniform_real_distribution<double> mag(0.1, 4.0);
    std::uniform_real_distribution<double> phase(-3.1, 3.1);
    for (int t = 0; t < 100; ++t) {
      std::vector<ApproxComplex> vals;
      for (int i = 0; i < 41; ++i) {
        double r = mag(rng), th = phase(rng);
        vals.push_back({r * std::cos(th), r * std::sin(th), 0.0});
      }
      SequenceWindow w = make_window(-20, 20, vals, "random");
      SequenceWindow logs = bounded_log(w, 0.1);
      double worst = 0.0;
      for (long long n = -20; n <= 20; ++n) {
        const ApproxComplex& b = logs.at(n);
        double re = std::exp(b.re) * std::cos(b.im);
        double im = std::exp(b.re) * std::sin(b.im);
        worst = std::max(worst, std::hypot(re - w.at(n).re, im - w.at(n).im));
      }
      CHECK(worst <= 1e-9);
    }
  }

  TEST_CASE("real parts bounded by log separation and log sup") {
    std::mt19937 rng(555);
    std::uniform_real_distribution<double> mag(0.25, 3.0);
    std::vector<ApproxComplex> vals;
    double sup = 0.0;
    for (int i = 0; i < 21; ++i) {
      double r = mag(rng);
      sup = std::max(sup, r);
      vals.push_back({r, 0.0, 0.0});
    }
    SequenceWindow logs = bounded_log(make_window(0, 20, vals, "positive"), 0.25);
    for (const auto& b : logs.values) {
      CHECK(b.re >= std::log(0.25) - 1e-12);
      CHECK(b.re <= std::log(sup) + 1e-12);
    }
  }

  TEST_CASE("separation violations are flagged") {
    SequenceWindow w = constant_window(0, 3, {0.05, 0.0, 0.0});
    CHECK_THROWS_AS(bounded_log(w, 0.1), not_invertible_error);
  }
}

TEST_SUITE("density_gap") {
  TEST_CASE("delta_0 sits at sup distance 1, attained at n = -1") {
    MeasureSum cand;
    cand.discrete = DiscreteMeasure::delta(reduce_angle(0, 1));
    GapReport r = density_gap_report(cand, step_window(-50, 50), 0.05, 0.5, 5);
    CHECK(r.sup_distance == doctest::Approx(1.0));
    CHECK(r.sup_at_n == -1);
    CHECK(!r.pipeline_ran);
  }

  TEST_CASE("(1/2) delta_0 sits at sup distance 1/2") {
    MeasureSum cand;
    cand.discrete = DiscreteMeasure::delta(reduce_angle(0, 1), cv_rational(Rational(1, 2)));
    GapReport r = density_gap_report(cand, step_window(-50, 50), 0.05, 0.4, 5);
    CHECK(r.sup_distance == doctest::Approx(0.5));
    CHECK(!r.pipeline_ran);  // 0.5 >= delta = 0.4
  }

  TEST_CASE("pipeline runs for a delta-close candidate and traces the contradiction") {
    MeasureSum cand;
    cand.discrete = DiscreteMeasure::delta(reduce_angle(0, 1), cv_rational(Rational(1, 2)));
    cand.continuous.emplace_back(TrigPolynomial::from_coefficients(
        {{1, cv_rational(Rational(1, 50))}, {-1, cv_rational(Rational(1, 50))}}));
    GapReport r = density_gap_report(cand, step_window(-60, 60), 0.05, 0.6, 6);
    CHECK(r.sup_distance < 0.6);
    CHECK(r.pipeline_ran);
    CHECK(r.observed_gap == doctest::Approx(0.5).epsilon(1e-6));
    // the constant discrete transform accepts every shift as a near-period
    CHECK(r.accepted_periods == static_cast<long long>(r.near_periods.size()));
    for (const auto& row : r.wiener_trace) {
      CHECK(row.average < 0.01);  // the trace vanishes: no mass sustains the gap
    }
  }

  TEST_CASE("triangle inequality keeps mixtures above 1/2 - sup") {
    MeasureSum cand;
    cand.discrete = DiscreteMeasure::delta(reduce_angle(0, 1), cv_rational(Rational(1, 2)));
    cand.continuous.emplace_back(TrigPolynomial::from_coefficients(
        {{2, cv_rational(Rational(1, 20))}, {-2, cv_rational(Rational(1, 20))}}));
    GapReport r = density_gap_report(cand, step_window(-40, 40), 0.05, 0.7, 4);
    CHECK(r.sup_distance >= 0.5 - 0.1 - 1e-9);
  }
}
