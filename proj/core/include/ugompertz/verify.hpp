#ifndef UGOMPERTZ_VERIFY_HPP_
#define UGOMPERTZ_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ugompertz/oracle.hpp"
#include "ugompertz/unit_gompertz.hpp"

namespace ugompertz {

enum class Verdict { agree, disagree, inconclusive };

std::string_view to_string(Verdict v);

// One closed-form quantity set against its independent routes.
struct OracleReport {
  std::string quantity;
  double closed_form = 0.0;
  double quadrature = 0.0;
  double quadrature_error = 0.0;
  std::optional<MonteCarloEstimate> monte_carlo;
  double abs_diff = 0.0;
  // abs_diff / max(|quadrature|, floor); floor is 1 for entropies, whose
  // natural accuracy is absolute, and 0 otherwise.
  double rel_diff = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::inconclusive;
  // Informational reports are shown but do not affect the exit status.
  bool informational = false;
  // Set on the Mathai-Haubold comparison report, where `closed_form` holds
  // the alternative published formula and this holds the derived one.
  std::optional<double> derived_closed_form;
  std::string note;
};

struct VerifyConfig {
  bool normalization = true;
  bool mean = true;
  bool pwms = true;
  bool lmoments = true;
  std::vector<double> trunc_points{0.1, 0.3, 0.5, 0.7, 0.9};
  std::vector<double> tsallis_gammas{0.25, 0.5, 1.5, 2.0, 3.0};
  std::vector<double> mh_gammas{-1.0, 0.0, 0.5, 1.5};
  bool mh_published_comparison = true;

  // Monte-Carlo cross-checks of the mean and beta_1; 0 disables them.
  std::size_t mc_draws = 200000;
  std::uint64_t seed = 20201;

  double quad_rel_tol = 1e-12;
  double moment_tol = 1e-8;
  double lmoment_tol = 1e-7;
  double trunc_tol = 1e-8;
  double entropy_tol = 1e-7;
  // Monte-Carlo agreement band, in standard errors.
  double mc_band = 3.0;

  // Everything switched off; verify_all returns an empty vector.
  static VerifyConfig none();
};

// Runs the configured battery. Per-quantity failures are recorded as
// `inconclusive` with the error message in `note`; the battery never throws
// for them. A factor that is not representable as a double (h near 0 for
// large beta) lands here.
std::vector<OracleReport> verify_all(const UnitGompertz& d,
                                     const VerifyConfig& config = {});

// True when every non-informational report agrees.
bool all_agree(const std::vector<OracleReport>& reports);

}  // namespace ugompertz

#endif  // UGOMPERTZ_VERIFY_HPP_
