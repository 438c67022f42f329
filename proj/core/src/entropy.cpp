#include "ugompertz/entropy.hpp"

#include <cmath>
#include <sstream>

#include "ugompertz/errors.hpp"
#include "ugompertz/quadrature.hpp"
#include "ugompertz/special.hpp"

namespace ugompertz {
namespace {

double log_power_integral(const UnitGompertz& d, double p) {
  const double a = d.alpha();
  const double b = d.beta();
  const double shape = (p + b * p - 1.0) / b;
  return (1.0 - p) / b * d.log_alpha() + (p - 1.0) * d.log_beta() -
         shape * std::log(p) + log_scaled_upper_inc_gamma(shape, a * p);
}

// The alternative published closed form of the integral of f^(2-gamma):
//   a^((1-b)(gamma-1+b)/b) b^(1-gamma) (2-gamma)^(-(1+b-b^2)/b)
//   e^(a(2-gamma)) Gamma((1+b)(1-gamma)/b + 1; a(2-gamma)).
double published_mh_integral(const UnitGompertz& d, double gamma) {
  const double a = d.alpha();
  const double b = d.beta();
  const double p = 2.0 - gamma;
  const double shape = (1.0 + b) * (1.0 - gamma) / b + 1.0;
  const double log_value = (1.0 - b) * (gamma - 1.0 + b) / b * d.log_alpha() +
                           (1.0 - gamma) * d.log_beta() -
                           (1.0 + b - b * b) / b * std::log(p) +
                           log_scaled_upper_inc_gamma(shape, a * p);
  return std::exp(log_value);
}

void check_tsallis_order(double gamma) {
  if (!std::isfinite(gamma) || !(gamma > 0.0) || gamma == 1.0) {
    std::ostringstream os;
    os << "tsallis: order must satisfy gamma > 0, gamma != 1; got " << gamma;
    throw ArgumentError(os.str());
  }
}

void check_mh_order(double gamma) {
  if (!std::isfinite(gamma) || !(gamma < 2.0) || gamma == 1.0) {
    std::ostringstream os;
    os << "mathai_haubold: order must satisfy gamma < 2, gamma != 1; got "
       << gamma;
    throw ArgumentError(os.str());
  }
}

}  // namespace

std::string_view to_string(EntropyMethod m) {
  return m == EntropyMethod::closed_form ? "closed_form" : "quadrature";
}

std::string_view to_string(EntropyFamily f) {
  return f == EntropyFamily::tsallis ? "tsallis" : "mathai_haubold";
}

double power_integral(const UnitGompertz& d, double p) {
  if (!std::isfinite(p) || !(p > 0.0)) {
    throw ArgumentError("power_integral: exponent must be positive");
  }
  return std::exp(log_power_integral(d, p));
}

double power_integral_quadrature(const UnitGompertz& d, double p,
                                 double rel_tol, double* error_estimate) {
  if (!std::isfinite(p) || !(p > 0.0)) {
    throw ArgumentError("power_integral_quadrature: exponent must be positive");
  }
  QuadratureOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = rel_tol;
  const auto r = integrate([&](double x) { return std::exp(p * d.log_pdf(x)); },
                           0.0, 1.0, opts);
  if (error_estimate) *error_estimate = r.error_estimate;
  return r.value;
}

EntropyValue tsallis(const UnitGompertz& d, double gamma,
                     EntropyMethod method) {
  check_tsallis_order(gamma);
  EntropyValue out;
  out.method = method;
  out.gamma = gamma;
  out.family = EntropyFamily::tsallis;
  double integral;
  if (method == EntropyMethod::closed_form) {
    integral = power_integral(d, gamma);
  } else {
    double err = 0.0;
    integral = power_integral_quadrature(d, gamma, 1e-13, &err);
    out.error_estimate = err / std::abs(gamma - 1.0);
  }
  out.value = (1.0 - integral) / (gamma - 1.0);
  return out;
}

EntropyValue mathai_haubold(const UnitGompertz& d, double gamma,
                            EntropyMethod method, MhFormula formula) {
  check_mh_order(gamma);
  EntropyValue out;
  out.method = method;
  out.gamma = gamma;
  out.family = EntropyFamily::mathai_haubold;
  double integral;
  if (method == EntropyMethod::quadrature) {
    double err = 0.0;
    integral = power_integral_quadrature(d, 2.0 - gamma, 1e-13, &err);
    out.error_estimate = err / std::abs(gamma - 1.0);
  } else if (formula == MhFormula::derived) {
    integral = power_integral(d, 2.0 - gamma);
  } else {
    integral = published_mh_integral(d, gamma);
  }
  out.value = (integral - 1.0) / (gamma - 1.0);
  return out;
}

}  // namespace ugompertz
