#ifndef UGOMPERTZ_ORACLE_HPP_
#define UGOMPERTZ_ORACLE_HPP_

#include <cstdint>
#include <functional>

#include "ugompertz/quadrature.hpp"
#include "ugompertz/unit_gompertz.hpp"

namespace ugompertz {

// Independent numerical routes used to check the closed forms: quadrature
// of defining integrals over (0,1) and seeded Monte Carlo.

struct MonteCarloEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::size_t kMinMonteCarloDraws = 100;

// Sample mean of statistic(X) over n draws from d, with its standard error.
// Deterministic per seed. Throws ArgumentError for n < 100.
MonteCarloEstimate mc_expectation(
    const UnitGompertz& d, const std::function<double(double)>& statistic,
    std::size_t n, std::uint64_t seed);

// Integral over (0,1) of weight(x) f(x), relative tolerance `rel_tol`.
QuadratureResult expectation_quadrature(
    const UnitGompertz& d, const std::function<double(double)>& weight,
    double rel_tol = 1e-12);

// -integral f log f by quadrature.
QuadratureResult shannon_entropy_quadrature(const UnitGompertz& d,
                                            double abs_tol = 1e-12);

}  // namespace ugompertz

#endif  // UGOMPERTZ_ORACLE_HPP_
