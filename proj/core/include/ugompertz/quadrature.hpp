#ifndef UGOMPERTZ_QUADRATURE_HPP_
#define UGOMPERTZ_QUADRATURE_HPP_

#include <functional>

namespace ugompertz {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int panels = 0;
  int evaluations = 0;
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  // Terminates when error <= max(abs_tol, rel_tol * |value|).
  double rel_tol = 0.0;
  int max_panels = 10000;
  // Number of geometrically shrinking panels laid toward each endpoint
  // before adaptive refinement starts (panel k spans a half-width * 2^-k).
  int endpoint_levels = 40;
};

// Adaptive 15-point Gauss-Kronrod quadrature over (a, b). The rule is open,
// so the integrand is never evaluated at a or b; integrable endpoint
// singularities are resolved by the geometric endpoint panels.
//
// Throws ArgumentError unless a < b, DomainError if the integrand returns a
// non-finite value, and ConvergenceError (partial value and error estimate
// attached) when the panel budget runs out.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureOptions& options);

// Absolute-tolerance form.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double tol);

}  // namespace ugompertz

#endif  // UGOMPERTZ_QUADRATURE_HPP_
