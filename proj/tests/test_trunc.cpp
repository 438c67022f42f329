#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "test_oracles.hpp"
#include "ugompertz/data_sample.hpp"
#include "ugompertz/errors.hpp"
#include "ugompertz/truncated.hpp"
#include "ugompertz/unit_gompertz.hpp"

using namespace ugompertz;
using namespace ugompertz::testing;

namespace {

const double kGrid[] = {0.25, 1.0, 4.0};

// Partial first moments by direct quadrature of t f(t).
double lower_moment(const UnitGompertz& d, double x) {
  return quad([&](double t) { return t * d.pdf(t); }, 0.0, x);
}
double upper_moment(const UnitGompertz& d, double x) {
  return quad([&](double t) { return t * d.pdf(t); }, x, 1.0);
}

double log_derivative(const UnitGompertz& d, double x) {
  const double a = d.alpha(), b = d.beta();
  return a * b * std::pow(x, -(b + 1.0)) - (b + 1.0) / x;
}

}  // namespace

TEST_SUITE("trunc") {
  TEST_CASE("reversed hazard") {
    const UnitGompertz d(1.0, 1.0);
    CHECK(reversed_hazard(d, 0.5) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(rel_err(reversed_hazard(d, 0.5), d.pdf(0.5) / d.cdf(0.5)) <= 1e-14);
    const UnitGompertz e(2.0, 3.0);
    CHECK(reversed_hazard(e, 1.0) == doctest::Approx(6.0).epsilon(1e-15));
    const double x1 = std::nextafter(1.0, 0.0);
    CHECK(rel_err(e.pdf(x1) / e.cdf(x1), 6.0) <= 1e-14);
    CHECK(rel_err(reversed_hazard(UnitGompertz(4.0, 3.0), 0.3),
                  2.0 * reversed_hazard(e, 0.3)) <= 1e-15);
    CHECK_THROWS_AS(reversed_hazard(d, 0.0), DomainError);
    CHECK_THROWS_AS(reversed_hazard(d, 1.5), DomainError);
  }

  TEST_CASE("hazard") {
    const UnitGompertz d(1.0, 1.0);
    const double want = 4.0 * std::exp(-1.0) / (1.0 - std::exp(-1.0));
    CHECK(rel_err(hazard(d, 0.5), want) <= 1e-14);
    CHECK(rel_err(hazard(d, 0.5), 2.327906827477306) <= 1e-14);
    double prev = hazard(d, 0.9);
    for (double x : {0.99, 0.999, 0.9999, 1.0 - 1e-8, 1.0 - 1e-12}) {
      const double r = hazard(d, x);
      CHECK(r > prev);
      prev = r;
    }
    CHECK(prev > 1e11);
    for (double x : {0.1, 0.5, 0.9}) {
      const double f = d.pdf(x);
      CHECK(rel_err(hazard(d, x) * d.survival(x), f) <= 1e-14);
      CHECK(rel_err(reversed_hazard(d, x) * d.cdf(x), f) <= 1e-14);
    }
    CHECK_THROWS_AS(hazard(d, 1.0), DomainError);
    CHECK_THROWS_AS(hazard(d, 0.0), DomainError);
    // 1 - F ~ a b (1 - x) underflows to 0 while f stays subnormal.
    CHECK_THROWS_AS(
        hazard(UnitGompertz(1e-300, 1e-10), std::nextafter(1.0, 0.0)),
        OverflowError);
  }

  TEST_CASE("g factor") {
    const UnitGompertz d(1.0, 1.0);
    // e^2 * 0.25 * E1(2), E1(2) from the quadrature oracle.
    const double e1_2 = std::exp(log_inc_gamma_by_quadrature(0.0, 2.0));
    CHECK(rel_err(g_factor(d, 0.5), std::exp(2.0) * 0.25 * e1_2) <= 1e-12);
    CHECK(rel_err(g_factor(d, 0.5), lower_moment(d, 0.5) / d.pdf(0.5)) <=
          1e-11);
    CHECK(rel_err(g_factor(d, 0.5), 0.09033215422205565) <= 1e-13);
    // At x = 1: g(1) f(1) = E(X), f(1) = 1.
    CHECK(rel_err(g_factor(d, 1.0), 0.5963473623231941) <= 1e-13);
    for (double a : kGrid) {
      for (double b : kGrid) {
        for (double x : {1e-3, 0.1, 0.5, 0.9, 0.999}) {
          CHECK(g_factor(UnitGompertz(a, b), x) > 0.0);
        }
      }
    }
    CHECK_THROWS_AS(g_factor(d, 0.0), DomainError);
    CHECK_THROWS_AS(g_factor(d, 1.1), DomainError);
  }

  TEST_CASE("h factor") {
    const UnitGompertz d(1.0, 1.0);
    const double e1_1 = std::exp(log_inc_gamma_by_quadrature(0.0, 1.0));
    const double e1_2 = std::exp(log_inc_gamma_by_quadrature(0.0, 2.0));
    CHECK(rel_err(h_factor(d, 0.5), std::exp(2.0) * 0.25 * (e1_1 - e1_2)) <=
          1e-12);
    CHECK(rel_err(h_factor(d, 0.5), upper_moment(d, 0.5) / d.pdf(0.5)) <=
          1e-11);
    CHECK(rel_err(h_factor(d, 0.5), 0.3149278953910995) <= 1e-13);
    CHECK(h_factor(d, 0.999) < 1e-3);
    CHECK(h_factor(d, 0.999999) < 1e-6);
    CHECK_THROWS_AS(h_factor(d, 1.0 - 1e-15), PrecisionError);
    CHECK_THROWS_AS(h_factor(d, 1e-3), OverflowError);
    // g stays finite where f underflows: g ~ x^(b+2) / (a b) for small x.
    const UnitGompertz steep(4.0, 4.0);
    CHECK(g_factor(steep, 0.01) > 0.0);
    CHECK(std::isfinite(g_factor(steep, 0.01)));
    CHECK(rel_err(g_factor(steep, 1e-3), std::pow(1e-3, 6.0) / 16.0) <= 1e-6);
    CHECK_THROWS_AS(h_factor(d, 1.0), DomainError);
  }

  TEST_CASE("truncated means") {
    const UnitGompertz d(1.0, 1.0);
    const double below = truncated_mean_below(d, 0.5);
    CHECK(rel_err(below, lower_moment(d, 0.5) / d.cdf(0.5)) <= 1e-11);
    CHECK(rel_err(below, 0.3613286168882226) <= 1e-13);
    CHECK(rel_err(truncated_mean_below(d, 1.0), d.mean()) <= 1e-13);
    CHECK(std::abs(truncated_mean_below(d, 0.999999) - d.mean()) <= 1e-5);

    const double above = truncated_mean_above(d, 0.5);
    CHECK(rel_err(above, upper_moment(d, 0.5) / d.survival(0.5)) <= 1e-11);
    CHECK(rel_err(above, 0.7331227978439993) <= 1e-13);
    CHECK(std::abs(truncated_mean_above(d, 1e-3) - d.mean()) <= 1e-12);

    for (double x : {0.05, 0.3, 0.5, 0.8, 0.95}) {
      const double total = d.cdf(x) * truncated_mean_below(d, x) +
                           d.survival(x) * truncated_mean_above(d, x);
      CHECK(rel_err(total, d.mean()) <= 1e-12);
    }
  }

  TEST_CASE("property: reversed hazard simplification") {
    for (double a : kGrid) {
      for (double b : kGrid) {
        const UnitGompertz d(a, b);
        for (int i = 1; i < 50; ++i) {
          const double x = i / 50.0;
          const double f = d.pdf(x), F = d.cdf(x);
          if (!(F > 1e-300 && f > 1e-300)) continue;
          CHECK(rel_err(f / F, reversed_hazard(d, x)) <= 1e-10);
        }
      }
    }
  }

  TEST_CASE("property: complementarity and bounds") {
    for (double a : kGrid) {
      for (double b : kGrid) {
        const UnitGompertz d(a, b);
        const double mean = d.mean();
        for (int i = 1; i < 40; ++i) {
          const double x = i / 40.0;
          const double f = d.pdf(x);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(x);
          if (f > 1e-250) {
            CHECK(rel_err(g_factor(d, x) + h_factor(d, x), mean / f) <= 1e-9);
          }
          const double lo = truncated_mean_below(d, x);
          const double hi = truncated_mean_above(d, x);
          CHECK(0.0 < lo);
          CHECK(lo < x);
          CHECK(x < hi);
          CHECK(hi < 1.0);
        }
      }
    }
  }

  TEST_CASE("property: truncated means are nondecreasing") {
    for (double a : kGrid) {
      for (double b : kGrid) {
        const UnitGompertz d(a, b);
        double prev_lo = 0.0, prev_hi = 0.0;
        for (int i = 1; i <= 200; ++i) {
          const double x = i / 201.0;
          const double lo = truncated_mean_below(d, x);
          const double hi = truncated_mean_above(d, x);
          // Flat stretches tie to within rounding.
          const double slack = 4.0 * std::numeric_limits<double>::epsilon();
          CHECK(lo >= prev_lo * (1.0 - slack));
          CHECK(hi >= prev_hi * (1.0 - slack));
          prev_lo = lo;
          prev_hi = hi;
        }
      }
    }
  }

  TEST_CASE("property: derivative identities") {
    for (double a : kGrid) {
      for (double b : kGrid) {
        const UnitGompertz d(a, b);
        const auto g = [&](double x) { return g_factor(d, x); };
        const auto h = [&](double x) { return h_factor(d, x); };
        for (int i = 1; i < 20; ++i) {
          const double x = i / 20.0;
          const double step =
              1e-3 * std::min({x, 1.0 - x, std::pow(x, b + 1.0) / (a * b)});
          const double k = log_derivative(d, x);
          // h is only representable while f(x) is; beyond that it throws.
          if (d.log_pdf(x) < -700.0) {
            CHECK_THROWS_AS(h(x), OverflowError);
            continue;
          }
          const double gx = g(x), hx = h(x);
          CAPTURE(a);
          CAPTURE(b);
          CAPTURE(x);
          // Compare on the scale of the terms being summed.
          CHECK(std::abs(five_point_diff(g, x, step) - (x - gx * k)) <=
                1e-5 * (x + std::abs(gx * k)));
          CHECK(std::abs(five_point_diff(h, x, step) - (-x - hx * k)) <=
                1e-5 * (x + std::abs(hx * k)));
        }
      }
    }
  }

  TEST_CASE("density reconstruction from g") {
    for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, 0.5}}) {
      const UnitGompertz d(a, b);
      const auto r = reconstruct_density_from_g(
          [&](double x) { return g_factor(d, x); }, 64, 1e-6, d);
      REQUIRE(r.max_rel_error_vs_closed_form.has_value());
      CAPTURE(a);
      CAPTURE(b);
      CHECK(*r.max_rel_error_vs_closed_form <= 1e-4);
      CHECK(r.grid.size() == 64);
      CHECK(r.density_values.size() == 64);
      CHECK(r.normalization_constant > 0.0);
      for (std::size_t i = 0; i < r.grid.size(); ++i) {
        CHECK(r.grid[i] > 0.0);
        CHECK(r.grid[i] < 1.0);
        if (i > 0) CHECK(r.grid[i] > r.grid[i - 1]);
        const double x = r.grid[i];
        if (x > 0.05 && x < 0.95) {
          CHECK(rel_err(r.density_values[i], d.pdf(x)) <= 1e-4);
        }
      }
      // The midpoint sum of the reported values approximates the mass.
      double mass = 0.0;
      for (double v : r.density_values) mass += v / r.grid.size();
      CHECK(std::abs(mass - 1.0) <= 1e-2);
    }
    const UnitGompertz d(1.0, 1.0);
    CHECK_THROWS_AS(reconstruct_density_from_g(
                        [&](double x) { return g_factor(d, x); }, 15, 1e-6),
                    ArgumentError);
    CHECK_THROWS_AS(
        reconstruct_density_from_g([](double x) { return x - 0.5; }, 32, 1e-6),
        DomainError);
  }

  TEST_CASE("density reconstruction from h, and agreement with g") {
    for (auto [a, b] : {std::pair{1.0, 1.0}, std::pair{0.5, 2.0}}) {
      const UnitGompertz d(a, b);
      const auto rh = reconstruct_density_from_h(
          [&](double x) { return h_factor(d, x); }, 64, 1e-6, d);
      const auto rg = reconstruct_density_from_g(
          [&](double x) { return g_factor(d, x); }, 64, 1e-6, d);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(*rh.max_rel_error_vs_closed_form <= 1e-4);
      for (std::size_t i = 0; i < rh.grid.size(); ++i) {
        const double x = rh.grid[i];
        if (x > 0.05 && x < 0.95) {
          CHECK(rel_err(rh.density_values[i], rg.density_values[i]) <= 2e-4);
        }
      }
    }
    // Without a reference no error is reported.
    const UnitGompertz d(1.0, 1.0);
    const auto r = reconstruct_density_from_h(
        [&](double x) { return h_factor(d, x); }, 16, 1e-6);
    CHECK_FALSE(r.max_rel_error_vs_closed_form.has_value());
  }

  TEST_CASE("characterization goodness of fit") {
    const UnitGompertz d(1.0, 1.0);
    const auto self = sample(d, 100'000, 2024);
    const auto report = characterization_gof(self, d, 13);
    MESSAGE("self-sampled statistic " << report.statistic);
    CHECK(report.statistic < 0.01);
    CHECK(report.n == 100'000);
    REQUIRE(report.curve.size() == 13);
    CHECK(report.curve.front().level == doctest::Approx(0.2));
    CHECK(report.curve.back().level == doctest::Approx(0.8));
    double worst = 0.0;
    for (const auto& p : report.curve) {
      // Brute-force empirical conditional mean.
      double sum = 0.0;
      std::size_t count = 0;
      for (double v : self.values()) {
        if (v <= p.x) sum += v, ++count;
      }
      CHECK(p.empirical == doctest::Approx(sum / count).epsilon(1e-12));
      CHECK(p.theoretical ==
            doctest::Approx(truncated_mean_below(d, p.x)).epsilon(1e-15));
      worst = std::max(worst, p.deviation);
    }
    CHECK(report.statistic == worst);

    // Uniform data against the best-matching unit-Gompertz curve in mean
    // is much further off than self-sampled data.
    UniformStream u(5);
    std::vector<double> flat(100'000);
    for (double& v : flat) v = u.next();
    const auto uniform_report =
        characterization_gof(DataSample(flat), UnitGompertz(1.0, 1.0), 13);
    MESSAGE("uniform statistic " << uniform_report.statistic);
    CHECK(uniform_report.statistic > 5.0 * report.statistic);

    const auto single = characterization_gof(self, d, 1);
    REQUIRE(single.curve.size() == 1);
    CHECK(single.curve[0].level == 0.5);
    CHECK(single.statistic ==
          std::abs(single.curve[0].empirical - single.curve[0].theoretical));

    CHECK_THROWS_AS(characterization_gof(sample(d, 19, 1), d, 5),
                    ArgumentError);
    CHECK_THROWS_AS(characterization_gof(self, d, 0), ArgumentError);
  }
}
