#include "ugompertz/unit_gompertz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "ugompertz/errors.hpp"
#include "ugompertz/special.hpp"

namespace ugompertz {
namespace {

void require_finite(double x, const char* op) {
  if (!std::isfinite(x)) {
    std::ostringstream os;
    os << "UnitGompertz::" << op << ": argument must be finite";
    throw DomainError(os.str());
  }
}

void require_open_unit(double x, const char* op) {
  if (!(x > 0.0 && x < 1.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "UnitGompertz::" << op << ": argument " << x << " is outside (0,1)";
    throw DomainError(os.str());
  }
}

}  // namespace

UnitGompertz::UnitGompertz(double alpha, double beta)
    : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !(alpha > 0.0) || !std::isfinite(beta) ||
      !(beta > 0.0)) {
    std::ostringstream os;
    os << "UnitGompertz: parameters must be finite and positive, got alpha="
       << alpha << ", beta=" << beta;
    throw DomainError(os.str());
  }
  log_alpha_ = std::log(alpha_);
  log_beta_ = std::log(beta_);
}

// x^-b - 1 = expm1(-b log x), accurate as x -> 1.
double UnitGompertz::log_cdf(double x) const {
  require_open_unit(x, "log_cdf");
  return -alpha_ * std::expm1(-beta_ * std::log(x));
}

double UnitGompertz::log_survival(double x) const {
  require_open_unit(x, "log_survival");
  // log(1 - e^l) for l = log F <= 0.
  const double l = log_cdf(x);
  return l > -std::numbers::ln2 ? std::log(-std::expm1(l))
                                : std::log1p(-std::exp(l));
}

double UnitGompertz::log_pdf(double x) const {
  require_open_unit(x, "log_pdf");
  const double log_x = std::log(x);
  return log_alpha_ + log_beta_ - alpha_ * std::expm1(-beta_ * log_x) -
         (1.0 + beta_) * log_x;
}

double UnitGompertz::pdf(double x) const {
  require_finite(x, "pdf");
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return std::exp(log_pdf(x));
}

double UnitGompertz::cdf(double x) const {
  require_finite(x, "cdf");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return std::exp(log_cdf(x));
}

double UnitGompertz::survival(double x) const {
  require_finite(x, "survival");
  if (x <= 0.0) return 1.0;
  if (x >= 1.0) return 0.0;
  return -std::expm1(log_cdf(x));
}

double UnitGompertz::quantile(double u) const {
  if (!std::isfinite(u) || !(u > 0.0 && u < 1.0)) {
    std::ostringstream os;
    os.precision(17);
    os << "UnitGompertz::quantile: level " << u << " is outside (0,1)";
    throw DomainError(os.str());
  }
  const double x = std::exp(-std::log1p(-std::log(u) / alpha_) / beta_);
  // Levels within an ulp of 0 or 1 can round onto the closed boundary.
  return std::clamp(x, std::numeric_limits<double>::denorm_min(),
                    std::nextafter(1.0, 0.0));
}

double UnitGompertz::raw_moment(double s) const {
  if (!std::isfinite(s) || !(s > 0.0)) {
    throw ArgumentError("UnitGompertz::raw_moment: order must be positive");
  }
  return std::exp(s / beta_ * log_alpha_ +
                  log_scaled_upper_inc_gamma(1.0 - s / beta_, alpha_));
}

std::vector<double> draw(const UnitGompertz& d, std::size_t n,
                         std::uint64_t seed) {
  if (n == 0) throw ArgumentError("draw: sample size must be at least 1");
  UniformStream uniform(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = d.quantile(uniform.next());
  return out;
}

DataSample sample(const UnitGompertz& d, std::size_t n, std::uint64_t seed) {
  return DataSample(draw(d, n, seed));
}

}  // namespace ugompertz
