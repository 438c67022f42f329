#include <cmath>
#include <random>

#include "doctest.h"
#include "test_oracles.hpp"
#include "ugompertz/entropy.hpp"
#include "ugompertz/errors.hpp"
#include "ugompertz/oracle.hpp"
#include "ugompertz/unit_gompertz.hpp"

using namespace ugompertz;
using namespace ugompertz::testing;

namespace {

const double kGrid[] = {0.25, 1.0, 4.0};

// integral of f^p by quadrature of exp(p log f), independent of the library's
// own quadrature wrapper for the same quantity.
double power_integral_oracle(const UnitGompertz& d, double p) {
  return quad(
      [&](double x) {
        const double lp = d.log_pdf(x);
        return std::exp(p * lp);
      },
      0.0, 1.0, 1e-13);
}

// -integral f log f.
double shannon_oracle(const UnitGompertz& d) {
  return -quad(
      [&](double x) {
        const double lp = d.log_pdf(x);
        const double f = std::exp(lp);
        return f == 0.0 ? 0.0 : f * lp;
      },
      0.0, 1.0, 1e-13);
}

}  // namespace

TEST_SUITE("entropy") {
  TEST_CASE("Tsallis at gamma = 2 is -1/4 for (1, 1)") {
    const UnitGompertz d(1.0, 1.0);
    // 1 - 2^-3 e^2 Gamma(3;2) with Gamma(3;2) = 10 e^-2.
    const auto closed = tsallis(d, 2.0);
    CHECK(closed.value == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(closed.family == EntropyFamily::tsallis);
    CHECK(closed.method == EntropyMethod::closed_form);
    CHECK(closed.gamma == 2.0);
    CHECK(closed.error_estimate == 0.0);
    CHECK(std::abs(power_integral_oracle(d, 2.0) - 1.25) <= 1e-12);

    const auto by_quad = tsallis(d, 2.0, EntropyMethod::quadrature);
    CHECK(by_quad.method == EntropyMethod::quadrature);
    CHECK(std::abs(by_quad.value + 0.25) <= 1e-7);
    CHECK(by_quad.error_estimate <= 1e-7);
  }

  TEST_CASE("Mathai-Haubold at gamma = 0 is -1/4 for (1, 1)") {
    const UnitGompertz d(1.0, 1.0);
    const auto closed = mathai_haubold(d, 0.0);
    CHECK(closed.value == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(closed.family == EntropyFamily::mathai_haubold);
    const auto by_quad = mathai_haubold(d, 0.0, EntropyMethod::quadrature);
    CHECK(std::abs(by_quad.value + 0.25) <= 1e-7);
  }

  TEST_CASE("Mathai-Haubold at gamma = 1.5 matches quadrature of f^0.5") {
    const UnitGompertz d(1.0, 1.0);
    const double integral = power_integral_oracle(d, 0.5);
    CHECK(rel_err(integral, 0.92291063248373047) <= 1e-12);
    const double want = (integral - 1.0) / 0.5;
    CHECK(std::abs(mathai_haubold(d, 1.5).value - want) <= 1e-7);
  }

  TEST_CASE("the alternative published MH closed form disagrees") {
    const UnitGompertz d(1.0, 1.0);
    // With its exponents, integral f^2 comes out as 2^-1 e^2 Gamma(3;2) = 5.
    const auto published = mathai_haubold(d, 0.0, EntropyMethod::closed_form,
                                          MhFormula::published_formula);
    CHECK(published.value == doctest::Approx(-4.0).epsilon(1e-13));
    CHECK(std::abs(published.value - mathai_haubold(d, 0.0).value) > 1.0);
    // The quadrature method ignores the formula flag.
    CHECK(mathai_haubold(d, 0.0, EntropyMethod::quadrature,
                         MhFormula::published_formula)
              .value == doctest::Approx(-0.25).epsilon(1e-7));
  }

  TEST_CASE("near gamma = 1 both families bracket the Shannon entropy") {
    const UnitGompertz d(1.0, 1.0);
    const double shannon = shannon_oracle(d);
    CHECK(rel_err(shannon, -0.19269472464638815) <= 1e-11);
    CHECK(rel_err(shannon_entropy_quadrature(d).value, shannon) <= 1e-10);
    const double t_lo = tsallis(d, 1.0 - 1e-4).value;
    const double t_hi = tsallis(d, 1.0 + 1e-4).value;
    CHECK(std::min(t_lo, t_hi) <= shannon);
    CHECK(shannon <= std::max(t_lo, t_hi));
    const double m_lo = mathai_haubold(d, 1.0 - 1e-4).value;
    const double m_hi = mathai_haubold(d, 1.0 + 1e-4).value;
    CHECK(std::min(m_lo, m_hi) <= shannon);
    CHECK(shannon <= std::max(m_lo, m_hi));
  }

  TEST_CASE("uniform sanity case for the quadrature route") {
    // With f = 1 on (0,1) every order gives integral 1 and entropy 0.
    for (double g : {0.5, 2.0, 3.0}) {
      const double integral =
          quad([g](double) { return std::pow(1.0, g); }, 0.0, 1.0);
      CHECK(std::abs((1.0 - integral) / (g - 1.0)) <= 1e-14);
    }
  }

  TEST_CASE("argument errors") {
    const UnitGompertz d(1.0, 1.0);
    CHECK_THROWS_AS(tsallis(d, 1.0), ArgumentError);
    CHECK_THROWS_AS(tsallis(d, 0.0), ArgumentError);
    CHECK_THROWS_AS(tsallis(d, -2.0), ArgumentError);
    CHECK_THROWS_AS(tsallis(d, std::nan("")), ArgumentError);
    CHECK_THROWS_AS(mathai_haubold(d, 1.0), ArgumentError);
    CHECK_THROWS_AS(mathai_haubold(d, 2.0), ArgumentError);
    CHECK_THROWS_AS(mathai_haubold(d, 2.5), ArgumentError);
    CHECK_THROWS_AS(power_integral(d, 0.0), ArgumentError);
    CHECK_THROWS_AS(power_integral(d, -1.0), ArgumentError);
  }

  TEST_CASE("to_string") {
    CHECK(to_string(EntropyFamily::tsallis) == "tsallis");
    CHECK(to_string(EntropyFamily::mathai_haubold) == "mathai_haubold");
    CHECK(to_string(EntropyMethod::closed_form) == "closed_form");
    CHECK(to_string(EntropyMethod::quadrature) == "quadrature");
  }

  TEST_CASE("property: closed form agrees with quadrature on the grid") {
    for (double a : kGrid) {
      for (double b : kGrid) {
        const UnitGompertz d(a, b);
        CAPTURE(a);
        CAPTURE(b);
        for (double g : {0.25, 0.5, 1.5, 2.0, 3.0}) {
          CAPTURE(g);
          const double closed = tsallis(d, g).value;
          const double q = (1.0 - power_integral_oracle(d, g)) / (g - 1.0);
          const double lib = tsallis(d, g, EntropyMethod::quadrature).value;
          CHECK(rel_err(closed, q) <= 1e-7);
          CHECK(rel_err(lib, q) <= 1e-7);
        }
        for (double g : {-1.0, 0.0, 0.5, 1.5}) {
          CAPTURE(g);
          const double closed = mathai_haubold(d, g).value;
          const double q =
              (power_integral_oracle(d, 2.0 - g) - 1.0) / (g - 1.0);
          CHECK(rel_err(closed, q) <= 1e-7);
        }
      }
    }
  }

  TEST_CASE("property: MH is the power integral at order 2 - gamma") {
    for (double a : kGrid) {
      for (double b : kGrid) {
        const UnitGompertz d(a, b);
        for (double g : {-1.0, 0.0, 0.5, 1.5}) {
          const double lhs = (g - 1.0) * mathai_haubold(d, g).value + 1.0;
          CHECK(rel_err(lhs, power_integral(d, 2.0 - g)) <= 1e-10);
        }
      }
    }
  }

  TEST_CASE("property: Shannon limit at gamma = 1 +- 1e-3") {
    for (double a : kGrid) {
      for (double b : kGrid) {
        const UnitGompertz d(a, b);
        const double shannon = shannon_oracle(d);
        CAPTURE(a);
        CAPTURE(b);
        for (double g : {1.0 - 1e-3, 1.0 + 1e-3}) {
          CHECK(std::abs(tsallis(d, g).value - shannon) <= 1e-2);
          CHECK(std::abs(mathai_haubold(d, g).value - shannon) <= 1e-2);
        }
      }
    }
  }

  TEST_CASE("property: power integral is log-convex in the order") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> order(0.1, 4.0);
    for (double a : kGrid) {
      for (double b : kGrid) {
        const UnitGompertz d(a, b);
        for (int k = 0; k < 20; ++k) {
          const double p1 = order(rng), p2 = order(rng);
          const double mid = std::log(power_integral(d, 0.5 * (p1 + p2)));
          const double chord = 0.5 * (std::log(power_integral(d, p1)) +
                                      std::log(power_integral(d, p2)));
          CHECK(mid <= chord + 1e-12 * std::abs(chord));
        }
      }
    }
  }
}
