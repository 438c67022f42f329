#ifndef UGOMPERTZ_TRUNCATED_HPP_
#define UGOMPERTZ_TRUNCATED_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "ugompertz/data_sample.hpp"
#include "ugompertz/unit_gompertz.hpp"

namespace ugompertz {

// Truncated-moment characterization of the unit-Gompertz law.
//
// With tau(x) = f/F and r(x) = f/(1-F), the truncated means factor as
//
//   E(X | X <= x) = g(x) tau(x),   E(X | X >= x) = h(x) r(x),
//
// where, writing s = 1 - 1/b and z = a / x^b,
//
//   g(x) = a^(1/b) / (a b) * e^z * x^(1+b) * Gamma(s; z)
//   h(x) = a^(1/b) / (a b) * e^z * x^(1+b) * [Gamma(s; a) - Gamma(s; z)].
//
// Conversely a positive differentiable g (or h) of this form pins the
// density down through
//
//   f(x) = c exp( integral (x - g'(x)) / g(x) dx )
//   f(x) = c exp(-integral (x + h'(x)) / h(x) dx ),
//
// which reconstruct_density_from_g / _from_h carry out numerically.

// a b x^-(b+1). Defined on (0,1]; the value at 1 is the limit f(1)/F(1).
double reversed_hazard(const UnitGompertz& d, double x);

// f / (1 - F) on (0,1). Throws OverflowError when 1 - F underflows to 0.
double hazard(const UnitGompertz& d, double x);

// g(x) on (0,1]; g(1) = E(X) / f(1). Throws OverflowError rather than
// returning infinity.
double g_factor(const UnitGompertz& d, double x);

// h(x) on (0,1). For small x, h = integral_x^1 t f / f(x) exceeds the double
// range as f(x) underflows; that raises OverflowError. Throws PrecisionError
// when the two incomplete gammas agree to better than 1e-13 relative (x too
// close to 1 for a meaningful difference).
double h_factor(const UnitGompertz& d, double x);

// E(X | X <= x) on (0,1].
double truncated_mean_below(const UnitGompertz& d, double x);

// E(X | X >= x) on (0,1).
double truncated_mean_above(const UnitGompertz& d, double x);

struct ReconstructionResult {
  std::vector<double> grid;
  std::vector<double> density_values;
  double normalization_constant = 0.0;
  // Max |reconstructed / closed-form - 1| over grid points in (0.05, 0.95)
  // where the closed-form density is a normal double; only set when a
  // reference distribution was supplied.
  std::optional<double> max_rel_error_vs_closed_form;
};

inline constexpr int kMinReconstructionGrid = 16;

// Rebuild the density from a truncated-mean factor g. The exponent is the
// integral of (x - g'(x)) / g(x) from the anchor 0.5, with g' from a
// five-point central difference at relative step 1e-6; the result is
// normalised over (0,1). `grid_size` midpoints (i + 1/2) / grid_size are
// reported. Where g overflows (or throws OverflowError) the density is below
// the double range and is reported as 0.
//
// The differentiated integrand carries noise near 1e-9 relative, so
// quad_tol much below 1e-8 cannot be met; 1e-6 already gives density errors
// near 1e-8.
//
// Throws ArgumentError for grid_size < 16, DomainError if g is not positive
// where evaluated, and ConvergenceError from the quadrature.
ReconstructionResult reconstruct_density_from_g(
    const std::function<double(double)>& g, int grid_size, double quad_tol,
    const std::optional<UnitGompertz>& reference = std::nullopt);

// Same, for the upper factor h with exponent -integral (x + h') / h.
ReconstructionResult reconstruct_density_from_h(
    const std::function<double(double)>& h, int grid_size, double quad_tol,
    const std::optional<UnitGompertz>& reference = std::nullopt);

struct GofPoint {
  double level;        // empirical quantile level
  double x;            // evaluation point (sample quantile at `level`)
  double empirical;    // mean of observations <= x
  double theoretical;  // E(X | X <= x) under the fitted law
  double deviation;    // |empirical - theoretical|
};

struct GofReport {
  double statistic = 0.0;  // max deviation over the curve
  std::size_t n = 0;
  std::vector<GofPoint> curve;
};

inline constexpr std::size_t kMinGofSample = 20;

// Compares empirical and fitted E(X | X <= x) at n_eval sample quantiles
// with levels evenly spaced on [0.2, 0.8] (0.5 when n_eval == 1).
// Throws ArgumentError when data has fewer than 20 points or n_eval < 1.
GofReport characterization_gof(const DataSample& data,
                               const UnitGompertz& fitted, int n_eval);

}  // namespace ugompertz

#endif  // UGOMPERTZ_TRUNCATED_HPP_
