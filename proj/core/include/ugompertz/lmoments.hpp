#ifndef UGOMPERTZ_LMOMENTS_HPP_
#define UGOMPERTZ_LMOMENTS_HPP_

#include <array>
#include <cstddef>
#include <variant>

#include "ugompertz/data_sample.hpp"
#include "ugompertz/unit_gompertz.hpp"

namespace ugompertz {

struct PopulationSource {
  double alpha;
  double beta;
};

struct SampleSource {
  std::size_t n;
};

// First four L-moments and their ratios.
struct LMomentSet {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double lambda3 = 0.0;
  double lambda4 = 0.0;
  double tau2 = 0.0;  // L-CV, lambda2 / lambda1
  double tau3 = 0.0;  // L-skewness, lambda3 / lambda2
  double tau4 = 0.0;  // L-kurtosis, lambda4 / lambda2
  std::variant<PopulationSource, SampleSource> source;

  // lambda_k from the PWMs b_0..b_3 by the shifted-Legendre weights.
  static LMomentSet from_pwms(const std::array<double, 4>& b,
                              std::variant<PopulationSource, SampleSource> src);
};

// beta_r = E[X F(X)^r]
//        = a^(1/b) (r+1)^(1/b - 1) e^((r+1)a) Gamma(1 - 1/b; (r+1)a),
// assembled in log space.
double pwm(const UnitGompertz& d, int r);

LMomentSet population_lmoments(const UnitGompertz& d);

// Unbiased sample PWMs
//   b_r = n^-1 sum_i x_(i) [(i-1)...(i-r)] / [(n-1)...(n-r)]
// combined with the same weights. Throws ArgumentError for n < 4.
LMomentSet sample_lmoments(const DataSample& data);

struct FitDiagnostics {
  // sqrt of the summed squared relative residuals of lambda1 and lambda2.
  double residual = 0.0;
  int iterations = 0;
  int starts = 0;
  bool converged = false;
};

struct FitResult {
  UnitGompertz distribution;
  FitDiagnostics diagnostics;
};

inline constexpr double kFitLowerBound = 0.05;
inline constexpr double kFitUpperBound = 20.0;
inline constexpr double kFitTolerance = 1e-8;

// Match population (lambda1, lambda2) to the targets. Nelder-Mead in
// (log a, log b) from a multi-start grid over [0.05, 20]^2, then a Newton
// polish. Throws EstimationError (best parameters attached) when no start
// reaches kFitTolerance inside the bounds, ArgumentError if lambda2 <= 0 or
// lambda1 is outside (0,1).
FitResult fit_by_lmoments(const LMomentSet& target);

// Sample L-moments first, then the above.
FitResult fit_by_lmoments(const DataSample& data);

}  // namespace ugompertz

#endif  // UGOMPERTZ_LMOMENTS_HPP_
