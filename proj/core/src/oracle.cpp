#include "ugompertz/oracle.hpp"

#include <cmath>
#include <sstream>

#include "ugompertz/errors.hpp"

namespace ugompertz {

MonteCarloEstimate mc_expectation(
    const UnitGompertz& d, const std::function<double(double)>& statistic,
    std::size_t n, std::uint64_t seed) {
  if (n < kMinMonteCarloDraws) {
    std::ostringstream os;
    os << "mc_expectation: need at least " << kMinMonteCarloDraws
       << " draws, got " << n;
    throw ArgumentError(os.str());
  }
  UniformStream uniform(seed);
  // Welford.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double y = statistic(d.quantile(uniform.next()));
    const double delta = y - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (y - mean);
  }
  const double var = m2 / static_cast<double>(n - 1);
  return {mean, std::sqrt(var / static_cast<double>(n)), n, seed};
}

QuadratureResult expectation_quadrature(
    const UnitGompertz& d, const std::function<double(double)>& weight,
    double rel_tol) {
  QuadratureOptions opts;
  opts.abs_tol = 0.0;
  opts.rel_tol = rel_tol;
  return integrate([&](double x) { return weight(x) * d.pdf(x); }, 0.0, 1.0,
                   opts);
}

QuadratureResult shannon_entropy_quadrature(const UnitGompertz& d,
                                            double abs_tol) {
  return integrate(
      [&](double x) {
        const double lp = d.log_pdf(x);
        return std::isfinite(lp) ? -std::exp(lp) * lp : 0.0;
      },
      0.0, 1.0, abs_tol);
}

}  // namespace ugompertz
