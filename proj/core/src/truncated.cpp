#include "ugompertz/truncated.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "ugompertz/errors.hpp"
#include "ugompertz/quadrature.hpp"
#include "ugompertz/special.hpp"

namespace ugompertz {
namespace {

constexpr double kCancellationFloor = 1e-13;
constexpr double kAnchor = 0.5;
constexpr double kRelativeStep = 1e-6;
// The normalising integral skips (0, eps) and (1 - eps, 1); the density is
// bounded there, so at most ~f(1) * eps of mass is dropped.
constexpr double kEdge = 1e-9;
const double kLogMinNormal = std::log(std::numeric_limits<double>::min());

void require_unit(double x, const char* op, bool closed_right) {
  const bool ok = closed_right ? (x > 0.0 && x <= 1.0) : (x > 0.0 && x < 1.0);
  if (!ok) {
    std::ostringstream os;
    os.precision(17);
    os << op << ": x = " << x << " is outside (0,1"
       << (closed_right ? "]" : ")");
    throw DomainError(os.str());
  }
}

// z = a x^-b.
double scaled_argument(const UnitGompertz& d, double x) {
  return d.alpha() * std::exp(-d.beta() * std::log(x));
}

double gamma_shape(const UnitGompertz& d) { return 1.0 - 1.0 / d.beta(); }

// log(a^(1/b) / (a b) * x^(1+b)); the e^z factor is applied by callers.
double log_prefactor(const UnitGompertz& d, double x) {
  return (1.0 / d.beta() - 1.0) * d.log_alpha() - d.log_beta() +
         (1.0 + d.beta()) * std::log(x);
}

// log[Gamma(s; a) - Gamma(s; z)] for z >= a.
double log_upper_bracket(const UnitGompertz& d, double z) {
  const double s = gamma_shape(d);
  const double la = log_upper_inc_gamma(s, d.alpha());
  const double lz = log_upper_inc_gamma(s, z);
  const double rel = -std::expm1(lz - la);
  if (!(rel >= kCancellationFloor)) {
    std::ostringstream os;
    os << "h_factor: Gamma(s;a) - Gamma(s;z) cancels to relative " << rel
       << " (below " << kCancellationFloor << ")";
    throw PrecisionError(os.str());
  }
  return la + std::log(rel);
}

// exp(log_value), raising OverflowError rather than returning infinity.
double exp_checked(double log_value, const char* op, double x) {
  const double value = std::exp(log_value);
  if (std::isinf(value)) {
    std::ostringstream os;
    os.precision(17);
    os << op << ": result overflows at x = " << x;
    throw OverflowError(os.str());
  }
  return value;
}

// Thrown inside a reconstruction when the factor overflows; the density
// there is below 1/DBL_MAX of its scale and is taken as 0.
struct VanishingDensity {};

// g'(x) / g(x) by the five-point central difference. Formed from ratios so
// that a factor near the top of the double range does not overflow.
double relative_derivative(const std::function<double(double)>& fn, double x,
                           double value) {
  const double step = std::min({kRelativeStep * x, 0.5 * x, 0.5 * (1.0 - x)});
  // Offsets -2h, -h, h, 2h with weights 1, -8, 8, -1 over 12h.
  constexpr double kWeights[] = {1.0, -8.0, 8.0, -1.0};
  constexpr double kOffsets[] = {-2.0, -1.0, 1.0, 2.0};
  // The outer points need x - 2h > 0 and x + 2h < 1.
  const double h = 0.5 * step;
  double sum = 0.0;
  for (int k = 0; k < 4; ++k) {
    double v;
    try {
      v = fn(x + kOffsets[k] * h);
    } catch (const OverflowError&) {
      throw VanishingDensity{};
    }
    if (std::isinf(v)) throw VanishingDensity{};
    if (!(v > 0.0)) {
      std::ostringstream os;
      os.precision(17);
      os << "reconstruct_density: factor is not positive near x = " << x;
      throw DomainError(os.str());
    }
    sum += kWeights[k] * (v / value);
  }
  return sum / (12.0 * h);
}

ReconstructionResult reconstruct(const std::function<double(double)>& factor,
                                 bool upper, int grid_size, double quad_tol,
                                 const std::optional<UnitGompertz>& reference) {
  if (grid_size < kMinReconstructionGrid) {
    std::ostringstream os;
    os << "reconstruct_density: grid_size must be at least "
       << kMinReconstructionGrid << ", got " << grid_size;
    throw ArgumentError(os.str());
  }
  if (!(quad_tol > 0.0)) {
    throw ArgumentError("reconstruct_density: quad_tol must be positive");
  }

  // d/dx log f.
  auto log_slope = [&](double u) {
    double value;
    try {
      value = factor(u);
    } catch (const OverflowError&) {
      throw VanishingDensity{};
    }
    if (value == std::numeric_limits<double>::infinity()) {
      throw VanishingDensity{};
    }
    if (!(value > 0.0) || !std::isfinite(value)) {
      std::ostringstream os;
      os.precision(17);
      os << "reconstruct_density: factor is not positive at x = " << u;
      throw DomainError(os.str());
    }
    const double rel = relative_derivative(factor, u, value);
    return upper ? -(u / value + rel) : u / value - rel;
  };

  // The outer integrand inherits the inner error, so the inner runs tighter.
  QuadratureOptions inner;
  inner.abs_tol = 0.1 * quad_tol;
  inner.rel_tol = 0.1 * quad_tol;
  inner.endpoint_levels = 6;

  // log f(x) - log f(anchor).
  auto log_shape = [&](double x) {
    if (x == kAnchor) return 0.0;
    if (x > kAnchor) return integrate(log_slope, kAnchor, x, inner).value;
    return -integrate(log_slope, x, kAnchor, inner).value;
  };

  QuadratureOptions outer;
  outer.abs_tol = quad_tol;
  outer.rel_tol = quad_tol;
  outer.endpoint_levels = 12;
  // exp(log f - log f(anchor)), or 0 where the factor overflows.
  auto shape = [&](double x) {
    try {
      return std::exp(log_shape(x));
    } catch (const VanishingDensity&) {
      return 0.0;
    }
  };
  const double mass = integrate(shape, kEdge, 1.0 - kEdge, outer).value;
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw DomainError("reconstruct_density: reconstructed mass is not finite");
  }

  ReconstructionResult result;
  result.normalization_constant = 1.0 / mass;
  const double log_c = -std::log(mass);
  result.grid.reserve(grid_size);
  result.density_values.reserve(grid_size);
  double worst = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    const double x = (i + 0.5) / grid_size;
    double log_density;
    try {
      log_density = log_c + log_shape(x);
    } catch (const VanishingDensity&) {
      log_density = -std::numeric_limits<double>::infinity();
    }
    result.grid.push_back(x);
    result.density_values.push_back(std::exp(log_density));
    // Points where the reference density underflows carry no information.
    if (reference && x > 0.05 && x < 0.95 &&
        reference->log_pdf(x) > kLogMinNormal) {
      worst = std::max(
          worst, std::abs(std::expm1(log_density - reference->log_pdf(x))));
    }
  }
  if (reference) result.max_rel_error_vs_closed_form = worst;
  return result;
}

}  // namespace

double reversed_hazard(const UnitGompertz& d, double x) {
  require_unit(x, "reversed_hazard", true);
  return std::exp(d.log_alpha() + d.log_beta() -
                  (d.beta() + 1.0) * std::log(x));
}

double hazard(const UnitGompertz& d, double x) {
  require_unit(x, "hazard", false);
  const double surv = d.survival(x);
  if (surv == 0.0) {
    std::ostringstream os;
    os.precision(17);
    os << "hazard: survival underflows to 0 at x = " << x;
    throw OverflowError(os.str());
  }
  return std::exp(d.log_pdf(x) - std::log(surv));
}

double g_factor(const UnitGompertz& d, double x) {
  require_unit(x, "g_factor", true);
  const double z = scaled_argument(d, x);
  return exp_checked(
      log_prefactor(d, x) + log_scaled_upper_inc_gamma(gamma_shape(d), z),
      "g_factor", x);
}

double h_factor(const UnitGompertz& d, double x) {
  require_unit(x, "h_factor", false);
  const double z = scaled_argument(d, x);
  return exp_checked(log_prefactor(d, x) + z + log_upper_bracket(d, z),
                     "h_factor", x);
}

// g tau = a^(1/b) e^z Gamma(s; z): the x^(1+b) and a b factors of g cancel
// against tau, so the product is formed directly in log space.
double truncated_mean_below(const UnitGompertz& d, double x) {
  require_unit(x, "truncated_mean_below", true);
  const double z = scaled_argument(d, x);
  return std::exp(d.log_alpha() / d.beta() +
                  log_scaled_upper_inc_gamma(gamma_shape(d), z));
}

// h r = a^(1/b) e^a [Gamma(s; a) - Gamma(s; z)] / (1 - F(x)).
double truncated_mean_above(const UnitGompertz& d, double x) {
  require_unit(x, "truncated_mean_above", false);
  const double z = scaled_argument(d, x);
  const double log_surv = d.log_survival(x);
  if (!std::isfinite(log_surv)) {
    std::ostringstream os;
    os.precision(17);
    os << "truncated_mean_above: survival underflows to 0 at x = " << x;
    throw OverflowError(os.str());
  }
  return std::exp(d.log_alpha() / d.beta() + d.alpha() +
                  log_upper_bracket(d, z) - log_surv);
}

ReconstructionResult reconstruct_density_from_g(
    const std::function<double(double)>& g, int grid_size, double quad_tol,
    const std::optional<UnitGompertz>& reference) {
  return reconstruct(g, false, grid_size, quad_tol, reference);
}

ReconstructionResult reconstruct_density_from_h(
    const std::function<double(double)>& h, int grid_size, double quad_tol,
    const std::optional<UnitGompertz>& reference) {
  return reconstruct(h, true, grid_size, quad_tol, reference);
}

GofReport characterization_gof(const DataSample& data,
                               const UnitGompertz& fitted, int n_eval) {
  if (data.size() < kMinGofSample) {
    std::ostringstream os;
    os << "characterization_gof: need at least " << kMinGofSample
       << " observations, got " << data.size();
    throw ArgumentError(os.str());
  }
  if (n_eval < 1) {
    throw ArgumentError("characterization_gof: n_eval must be at least 1");
  }
  const auto values = data.values();
  std::vector<double> prefix(values.size() + 1, 0.0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    prefix[i + 1] = prefix[i] + values[i];
  }

  GofReport report;
  report.n = data.size();
  report.curve.reserve(n_eval);
  for (int k = 0; k < n_eval; ++k) {
    const double level =
        n_eval == 1 ? 0.5 : 0.2 + 0.6 * k / static_cast<double>(n_eval - 1);
    const double x = data.quantile(level);
    const auto count = static_cast<std::size_t>(
        std::upper_bound(values.begin(), values.end(), x) - values.begin());
    const double empirical = prefix[count] / static_cast<double>(count);
    const double theoretical = truncated_mean_below(fitted, x);
    const double deviation = std::abs(empirical - theoretical);
    report.curve.push_back({level, x, empirical, theoretical, deviation});
    report.statistic = std::max(report.statistic, deviation);
  }
  return report;
}

}  // namespace ugompertz
