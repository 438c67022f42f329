#include "ugompertz/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ugompertz/errors.hpp"

namespace ugompertz {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
// Below this x the continued fraction converges slowly; use series forms.
constexpr double kSmallX = 1.0;

struct LogGamma {
  double log_value;
  int work;
  // Directly computed value when representable, else NaN. Avoids the
  // rounding of exp(log_value) when log_value is large.
  double linear = std::numeric_limits<double>::quiet_NaN();
  // log(e^x Gamma(s;x)) when the route can form it without adding x to a
  // large negative log_value.
  double log_scaled = std::numeric_limits<double>::quiet_NaN();
};

bool representable(double v) { return std::isnormal(v) && v > 0.0; }

[[noreturn]] void throw_no_convergence(const char* method, double s, double x,
                                       double partial_log, int terms) {
  std::ostringstream os;
  os << "upper_inc_gamma(" << s << ", " << x << "): " << method
     << " did not converge within " << kIncGammaMaxTerms << " terms";
  throw ConvergenceError(os.str(), std::exp(partial_log), 0.0, terms);
}

// Modified Lentz evaluation of the continued fraction
//   Gamma(s;x) = x^s e^-x / (x+1-s - 1(1-s)/(x+3-s - 2(2-s)/(x+5-s - ...)))
// which converges for every real s when x > 0 and fast for x > s+1.
LogGamma continued_fraction(double s, double x) {
  double b = x + 1.0 - s;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  const double prefix = s * std::log(x) - x;
  for (int i = 1; i <= kIncGammaMaxTerms; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) <= kEps) {
      LogGamma r{prefix + std::log(h), i};
      r.log_scaled = s * std::log(x) + std::log(h);
      return r;
    }
  }
  throw_no_convergence("continued fraction", s, x, prefix + std::log(h),
                       kIncGammaMaxTerms);
}

// Gamma(s;x) = Gamma(s) (1 - P(s,x)) with P from the lower-gamma series
//   gamma(s,x) = x^s e^-x sum_n x^n / (s (s+1) ... (s+n)).
// Requires s > 0; used for x < s+1 where P stays away from 1.
LogGamma lower_series(double s, double x) {
  double ap = s;
  double term = 1.0 / s;
  double sum = term;
  for (int n = 1; n <= kIncGammaMaxTerms; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) <= std::abs(sum) * kEps) {
      const double log_p = std::log(sum) + s * std::log(x) - x - std::lgamma(s);
      return {std::lgamma(s) + std::log1p(-std::exp(log_p)), n};
    }
  }
  throw_no_convergence("lower series", s, x, std::lgamma(s), kIncGammaMaxTerms);
}

// Small-x expansion, valid for s in (-1, 2) minus {0 handled as a limit}:
//   Gamma(s;x) = [(Gamma(1+s) - 1) - (x^s - 1)] / s
//                - x^s sum_{n>=1} (-x)^n / (n! (s+n)).
// The bracket is formed with expm1 so that s -> 0 reproduces E1(x).
LogGamma small_x_expansion(double s, double x) {
  const double log_x = std::log(x);
  double head;
  if (s == 0.0) {
    head = -std::numbers::egamma - log_x;
  } else {
    head = (std::expm1(std::lgamma(1.0 + s)) - std::expm1(s * log_x)) / s;
  }
  double term = 1.0;  // (-x)^n / n!
  double sum = 0.0;
  int n = 1;
  for (; n <= kIncGammaMaxTerms; ++n) {
    term *= -x / n;
    const double contribution = term / (s + n);
    sum += contribution;
    if (std::abs(contribution) <= std::abs(sum) * kEps) break;
  }
  if (n > kIncGammaMaxTerms) {
    throw_no_convergence("small-x series", s, x, std::log(std::abs(head)),
                         kIncGammaMaxTerms);
  }
  const double value = head - std::exp(s * log_x) * sum;
  return {std::log(value), n, value};
}

// For s <= -1/2 and small x: start at s0 = s + k in (-1/2, 1/2] and walk
// down with Gamma(t;x) = (x^t e^-x - Gamma(t+1;x)) / (-t). For t < 0 and
// x below kSmallX the x^t e^-x term dominates, so the subtraction is benign.
LogGamma downward_recurrence(double s, double x) {
  const int k = static_cast<int>(std::floor(0.5 - s));
  LogGamma current = small_x_expansion(s + k, x);
  const double log_x = std::log(x);
  const double ex = std::exp(-x);
  for (int j = k - 1; j >= 0; --j) {
    const double t = s + j;
    const double log_lead = t * log_x - x;
    const double ratio = std::exp(current.log_value - log_lead);
    current.log_value = log_lead + std::log1p(-ratio) - std::log(-t);
    if (representable(current.linear)) {
      const double lead = std::pow(x, t) * ex;
      current.linear = representable(lead)
                           ? (lead - current.linear) / (-t)
                           : std::numeric_limits<double>::quiet_NaN();
    }
    ++current.work;
  }
  if (representable(current.linear)) {
    current.log_value = std::log(current.linear);
  }
  return current;
}

LogGamma evaluate(double s, double x) {
  if (x >= kSmallX && x >= s + 1.0) return continued_fraction(s, x);
  if (s > 1.5 || x >= kSmallX) return lower_series(s, x);
  if (s > -0.5) return small_x_expansion(s, x);
  return downward_recurrence(s, x);
}

void check_domain(double s, double x) {
  if (!std::isfinite(s) || !std::isfinite(x)) {
    throw DomainError("upper_inc_gamma: arguments must be finite");
  }
  if (!(x > 0.0)) {
    std::ostringstream os;
    os << "upper_inc_gamma: x must be positive, got " << x;
    throw DomainError(os.str());
  }
}

}  // namespace

IncGammaResult upper_inc_gamma(double s, double x) {
  check_domain(s, x);
  const LogGamma lg = evaluate(s, x);
  IncGammaResult r;
  if (representable(lg.linear)) {
    r.value = lg.linear;
    r.log_abs = std::log(lg.linear);
  } else {
    r.log_abs = lg.log_value;
    r.value = std::exp(lg.log_value);
  }
  r.sign = 1;
  r.converged = true;
  r.terms_or_depth = lg.work;
  return r;
}

double log_upper_inc_gamma(double s, double x) {
  return upper_inc_gamma(s, x).log_abs;
}

double log_scaled_upper_inc_gamma(double s, double x) {
  check_domain(s, x);
  const LogGamma lg = evaluate(s, x);
  if (!std::isnan(lg.log_scaled)) return lg.log_scaled;
  const double log_value =
      representable(lg.linear) ? std::log(lg.linear) : lg.log_value;
  return log_value + x;
}

double upper_inc_gamma_recurrence_check(double s, double x) {
  const auto g0 = upper_inc_gamma(s, x);
  const auto g1 = upper_inc_gamma(s + 1.0, x);
  const double lead = std::pow(x, s) * std::exp(-x);
  if (representable(g0.value) && representable(g1.value) &&
      representable(lead)) {
    return std::abs(g1.value - s * g0.value - lead) / g1.value;
  }
  const double log_lead = s * std::log(x) - x;
  return std::abs(1.0 - s * std::exp(g0.log_abs - g1.log_abs) -
                  std::exp(log_lead - g1.log_abs));
}

}  // namespace ugompertz
