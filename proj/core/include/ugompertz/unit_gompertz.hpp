#ifndef UGOMPERTZ_UNIT_GOMPERTZ_HPP_
#define UGOMPERTZ_UNIT_GOMPERTZ_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "ugompertz/data_sample.hpp"

namespace ugompertz {

// The unit-Gompertz distribution on (0,1):
//
//   f(x) = a b exp(-a (x^-b - 1)) / x^(1+b)
//   F(x) = exp(-a (x^-b - 1))
//
// with shape a = alpha > 0 and b = beta > 0. It is the law of exp(-Y) for a
// Gompertz variable Y. Instances are immutable and validated on
// construction.
class UnitGompertz {
 public:
  // Throws DomainError unless both parameters are finite and positive.
  UnitGompertz(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double log_alpha() const noexcept { return log_alpha_; }
  double log_beta() const noexcept { return log_beta_; }

  // Density extended by 0 outside (0,1). Throws DomainError for non-finite x.
  double pdf(double x) const;
  // Strict: x must lie in (0,1).
  double log_pdf(double x) const;
  // 0 for x <= 0, 1 for x >= 1. Throws DomainError for non-finite x.
  double cdf(double x) const;
  // 1 - F(x), computed without forming 1 - F directly.
  double survival(double x) const;
  // log F(x) = -a (x^-b - 1) on (0,1).
  double log_cdf(double x) const;
  // log(1 - F(x)) on (0,1).
  double log_survival(double x) const;
  // (1 - log(u)/a)^(-1/b). Throws DomainError unless 0 < u < 1.
  double quantile(double u) const;

  // E[X^s] = a^(s/b) e^a Gamma(1 - s/b; a). Throws ArgumentError for s <= 0.
  double raw_moment(double s) const;
  double mean() const { return raw_moment(1.0); }

  friend bool operator==(const UnitGompertz&, const UnitGompertz&) = default;

 private:
  double alpha_;
  double beta_;
  double log_alpha_;
  double log_beta_;
};

// Uniform variates on the open interval (0,1) from a 64-bit Mersenne
// Twister seeded with `seed`. The mapping from engine output to doubles is
// fixed here, so sequences are identical across platforms.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : engine_(seed) {}

  // ((k >> 11) + 1/2) / 2^53 for the next engine output k.
  double next() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

// n draws in generation order by inverse-transform sampling.
// Throws ArgumentError for n == 0.
std::vector<double> draw(const UnitGompertz& d, std::size_t n,
                         std::uint64_t seed);

// Same draws as `draw`, collected into a sorted DataSample.
DataSample sample(const UnitGompertz& d, std::size_t n, std::uint64_t seed);

}  // namespace ugompertz

#endif  // UGOMPERTZ_UNIT_GOMPERTZ_HPP_
