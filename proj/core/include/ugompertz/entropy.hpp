#ifndef UGOMPERTZ_ENTROPY_HPP_
#define UGOMPERTZ_ENTROPY_HPP_

#include <string_view>

#include "ugompertz/unit_gompertz.hpp"

namespace ugompertz {

enum class EntropyMethod { closed_form, quadrature };
enum class EntropyFamily { tsallis, mathai_haubold };

// Which closed form mathai_haubold uses. `derived` substitutes 2 - gamma
// into the power integral below; `published_formula` is the alternative
// published display, kept for comparison only.
enum class MhFormula { derived, published_formula };

struct EntropyValue {
  double value = 0.0;
  EntropyMethod method = EntropyMethod::closed_form;
  double gamma = 0.0;
  EntropyFamily family = EntropyFamily::tsallis;
  // Quadrature error bound propagated to `value`; 0 for closed forms.
  double error_estimate = 0.0;
};

std::string_view to_string(EntropyMethod m);
std::string_view to_string(EntropyFamily f);

// Integral over (0,1) of f^p for p > 0:
//
//   a^((1-p)/b) b^(p-1) p^(-(p+bp-1)/b) e^(ap) Gamma((p+bp-1)/b; ap).
//
// Throws ArgumentError unless p > 0.
double power_integral(const UnitGompertz& d, double p);

// Same quantity by adaptive quadrature of exp(p log f); `rel_tol` relative.
double power_integral_quadrature(const UnitGompertz& d, double p,
                                 double rel_tol = 1e-13,
                                 double* error_estimate = nullptr);

// I_T(gamma) = (1 - integral f^gamma) / (gamma - 1), gamma > 0, gamma != 1.
EntropyValue tsallis(const UnitGompertz& d, double gamma,
                     EntropyMethod method = EntropyMethod::closed_form);

// I_MH(gamma) = (integral f^(2-gamma) - 1) / (gamma - 1), gamma < 2,
// gamma != 1. `formula` is ignored for the quadrature method.
EntropyValue mathai_haubold(const UnitGompertz& d, double gamma,
                            EntropyMethod method = EntropyMethod::closed_form,
                            MhFormula formula = MhFormula::derived);

}  // namespace ugompertz

#endif  // UGOMPERTZ_ENTROPY_HPP_
