// Test-only reference computations. Nothing here calls into the special
// function kernel or the closed forms it checks; everything goes back to a
// defining integral, a root bracket, or a brute-force sum.
#ifndef UGOMPERTZ_TESTS_TEST_ORACLES_HPP_
#define UGOMPERTZ_TESTS_TEST_ORACLES_HPP_

#include <cmath>
#include <functional>
#include <span>

#include "ugompertz/quadrature.hpp"
#include "ugompertz/unit_gompertz.hpp"

namespace ugompertz::testing {

// log of integral_x^inf t^(s-1) e^-t dt by quadrature, scaled by the peak of
// the integrand so it works where the value itself overflows.
inline double log_inc_gamma_by_quadrature(double s, double x,
                                          double rel_tol = 1e-13) {
  auto log_integrand = [s](double t) { return (s - 1.0) * std::log(t) - t; };
  const double mode = std::max(x, s - 1.0);
  const double peak = log_integrand(mode);
  double upper = std::max(2.0 * mode, mode + 1.0);
  while (log_integrand(upper) > peak - 60.0) upper *= 1.5;
  QuadratureOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = rel_tol;
  const auto scaled = [&](double t) {
    return std::exp(log_integrand(t) - peak);
  };
  double total = 0.0;
  // Split at the mode so each side is monotone.
  if (mode > x) total += integrate(scaled, x, mode, opts).value;
  total += integrate(scaled, std::max(x, mode), upper, opts).value;
  return peak + std::log(total);
}

// Integral over (a, b) of fn at relative tolerance.
inline double quad(const std::function<double(double)>& fn, double a, double b,
                   double rel_tol = 1e-13) {
  QuadratureOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = rel_tol;
  return integrate(fn, a, b, opts).value;
}

// E[w(X)] = integral w f over (0,1).
inline double expect(const UnitGompertz& d,
                     const std::function<double(double)>& w,
                     double rel_tol = 1e-13) {
  return quad([&](double x) { return w(x) * d.pdf(x); }, 0.0, 1.0, rel_tol);
}

// Root of an increasing function on [lo, hi] by bisection to full precision.
inline double bisect(const std::function<double(double)>& fn, double lo,
                     double hi) {
  for (int i = 0; i < 200 && hi > lo; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (fn(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline double central_diff(const std::function<double(double)>& fn, double x,
                           double h) {
  return (fn(x + h) - fn(x - h)) / (2.0 * h);
}

// Fourth-order five-point stencil.
inline double five_point_diff(const std::function<double(double)>& fn, double x,
                              double h) {
  return (fn(x - 2.0 * h) - 8.0 * fn(x - h) + 8.0 * fn(x + h) -
          fn(x + 2.0 * h)) /
         (12.0 * h);
}

// Half the mean absolute difference over all pairs: lambda2 by definition.
inline double half_gini_mean_difference(std::span<const double> v) {
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      sum += std::abs(v[i] - v[j]);
    }
  }
  const double pairs =
      0.5 * static_cast<double>(v.size()) * static_cast<double>(v.size() - 1);
  return 0.5 * sum / pairs;
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace ugompertz::testing

#endif  // UGOMPERTZ_TESTS_TEST_ORACLES_HPP_
