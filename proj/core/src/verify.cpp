#include "ugompertz/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <sstream>

#include "ugompertz/entropy.hpp"
#include "ugompertz/errors.hpp"
#include "ugompertz/lmoments.hpp"
#include "ugompertz/truncated.hpp"

namespace ugompertz {
namespace {

std::string label(std::string_view name, std::string_view arg, double v) {
  std::ostringstream os;
  os << name << '(' << arg << '=' << v << ')';
  return os.str();
}

void judge(OracleReport& r, double floor, double mc_band) {
  r.abs_diff = std::abs(r.closed_form - r.quadrature);
  r.rel_diff = r.abs_diff / std::max(std::abs(r.quadrature), floor);
  bool ok = r.rel_diff <= r.tolerance;
  if (r.monte_carlo) {
    const auto& mc = *r.monte_carlo;
    ok = ok && std::abs(r.closed_form - mc.mean) <= mc_band * mc.std_error;
  }
  r.verdict = ok ? Verdict::agree : Verdict::disagree;
}

// Builds one report; any library error turns it inconclusive.
void add(std::vector<OracleReport>& out, std::string quantity, double tolerance,
         double floor, double mc_band,
         const std::function<void(OracleReport&)>& fill) {
  OracleReport r;
  r.quantity = std::move(quantity);
  r.tolerance = tolerance;
  try {
    fill(r);
    judge(r, floor, mc_band);
  } catch (const Error& e) {
    r.verdict = Verdict::inconclusive;
    r.note = e.what();
  }
  out.push_back(std::move(r));
}

// Shifted Legendre polynomials P*_k(u), k = 0..3.
double shifted_legendre(int k, double u) {
  switch (k) {
    case 0:
      return 1.0;
    case 1:
      return 2.0 * u - 1.0;
    case 2:
      return (6.0 * u - 6.0) * u + 1.0;
    default:
      return ((20.0 * u - 30.0) * u + 12.0) * u - 1.0;
  }
}

}  // namespace

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::agree:
      return "agree";
    case Verdict::disagree:
      return "disagree";
    default:
      return "inconclusive";
  }
}

VerifyConfig VerifyConfig::none() {
  VerifyConfig c;
  c.normalization = false;
  c.mean = false;
  c.pwms = false;
  c.lmoments = false;
  c.trunc_points.clear();
  c.tsallis_gammas.clear();
  c.mh_gammas.clear();
  c.mh_published_comparison = false;
  c.mc_draws = 0;
  return c;
}

std::vector<OracleReport> verify_all(const UnitGompertz& d,
                                     const VerifyConfig& config) {
  std::vector<OracleReport> out;
  const double qtol = config.quad_rel_tol;
  const double band = config.mc_band;
  const bool use_mc = config.mc_draws >= kMinMonteCarloDraws;

  auto quad = [&](OracleReport& r, const std::function<double(double)>& w) {
    const auto q = expectation_quadrature(d, w, qtol);
    r.quadrature = q.value;
    r.quadrature_error = q.error_estimate;
  };

  if (config.normalization) {
    add(out, "normalization", config.moment_tol, 0.0, band,
        [&](OracleReport& r) {
          r.closed_form = 1.0;
          quad(r, [](double) { return 1.0; });
        });
  }
  if (config.mean) {
    add(out, "mean", config.moment_tol, 0.0, band, [&](OracleReport& r) {
      r.closed_form = d.mean();
      quad(r, [](double x) { return x; });
      if (use_mc) {
        r.monte_carlo = mc_expectation(
            d, [](double x) { return x; }, config.mc_draws, config.seed);
      }
    });
  }
  if (config.pwms) {
    for (int k = 0; k < 4; ++k) {
      add(out, label("pwm", "r", k), config.moment_tol, 0.0, band,
          [&](OracleReport& r) {
            r.closed_form = pwm(d, k);
            quad(r, [&](double x) { return x * std::pow(d.cdf(x), k); });
            if (use_mc && k == 1) {
              r.monte_carlo = mc_expectation(
                  d, [&](double x) { return x * d.cdf(x); }, config.mc_draws,
                  config.seed + 1);
            }
          });
    }
  }
  if (config.lmoments) {
    for (int k = 0; k < 4; ++k) {
      add(out, label("lambda", "k", k + 1), config.lmoment_tol, 0.0, band,
          [&](OracleReport& r) {
            const LMomentSet lm = population_lmoments(d);
            const std::array<double, 4> l{lm.lambda1, lm.lambda2, lm.lambda3,
                                          lm.lambda4};
            r.closed_form = l[k];
            // Higher L-moments are small differences, so the integral is
            // held to an absolute tolerance on the scale of the mean.
            QuadratureOptions o;
            o.abs_tol = qtol * lm.lambda1;
            o.rel_tol = 0.0;
            const auto q = integrate(
                [&](double x) {
                  return x * shifted_legendre(k, d.cdf(x)) * d.pdf(x);
                },
                0.0, 1.0, o);
            r.quadrature = q.value;
            r.quadrature_error = q.error_estimate;
          });
    }
  }
  // integral of t f(t) / f(x) over (lo, hi), with the density ratio formed
  // in log space so that an underflowing f(x) does not matter.
  auto trunc_quad = [&](OracleReport& r, double x, double lo, double hi) {
    const double log_fx = d.log_pdf(x);
    QuadratureOptions o;
    o.abs_tol = 0.0;
    o.rel_tol = qtol;
    const auto q =
        integrate([&](double t) { return t * std::exp(d.log_pdf(t) - log_fx); },
                  lo, hi, o);
    r.quadrature = q.value;
    r.quadrature_error = q.error_estimate;
  };
  for (const double x : config.trunc_points) {
    add(out, label("g_factor", "x", x), config.trunc_tol, 0.0, band,
        [&](OracleReport& r) {
          r.closed_form = g_factor(d, x);
          trunc_quad(r, x, 0.0, x);
        });
    add(out, label("h_factor", "x", x), config.trunc_tol, 0.0, band,
        [&](OracleReport& r) {
          r.closed_form = h_factor(d, x);
          trunc_quad(r, x, x, 1.0);
        });
  }
  for (const double g : config.tsallis_gammas) {
    add(out, label("tsallis", "gamma", g), config.entropy_tol, 1.0, band,
        [&](OracleReport& r) {
          r.closed_form = tsallis(d, g, EntropyMethod::closed_form).value;
          const auto q = tsallis(d, g, EntropyMethod::quadrature);
          r.quadrature = q.value;
          r.quadrature_error = q.error_estimate;
        });
  }
  for (const double g : config.mh_gammas) {
    add(out, label("mathai_haubold", "gamma", g), config.entropy_tol, 1.0, band,
        [&](OracleReport& r) {
          r.closed_form =
              mathai_haubold(d, g, EntropyMethod::closed_form).value;
          const auto q = mathai_haubold(d, g, EntropyMethod::quadrature);
          r.quadrature = q.value;
          r.quadrature_error = q.error_estimate;
        });
  }
  if (config.mh_published_comparison) {
    for (const double g : config.mh_gammas) {
      add(out, label("mathai_haubold_published_formula", "gamma", g),
          config.entropy_tol, 1.0, band, [&](OracleReport& r) {
            r.informational = true;
            r.closed_form = mathai_haubold(d, g, EntropyMethod::closed_form,
                                           MhFormula::published_formula)
                                .value;
            r.derived_closed_form =
                mathai_haubold(d, g, EntropyMethod::closed_form).value;
            const auto q = mathai_haubold(d, g, EntropyMethod::quadrature);
            r.quadrature = q.value;
            r.quadrature_error = q.error_estimate;
          });
      out.back().informational = true;
    }
  }
  return out;
}

bool all_agree(const std::vector<OracleReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) {
    return r.informational || r.verdict == Verdict::agree;
  });
}

}  // namespace ugompertz
