#ifndef UGOMPERTZ_SPECIAL_HPP_
#define UGOMPERTZ_SPECIAL_HPP_

namespace ugompertz {

// Upper incomplete gamma value in linear and log-magnitude form.
//
// `value` may overflow to +inf or underflow to 0 while `log_abs` stays
// finite; callers that multiply by large exponentials should work from
// `log_abs`. For every in-domain call the integrand is positive, so `sign`
// is always +1.
struct IncGammaResult {
  double value = 0.0;
  double log_abs = 0.0;
  int sign = 1;
  bool converged = false;
  // Series terms, continued-fraction depth, or recurrence steps consumed.
  int terms_or_depth = 0;
};

inline constexpr int kIncGammaMaxTerms = 10000;

// Gamma(s; x) = integral from x to infinity of t^(s-1) e^(-t) dt, for any
// finite real s and x > 0.
//
// Throws DomainError for non-finite input or x <= 0, and ConvergenceError
// (carrying the partial value) if a series or continued fraction exceeds
// kIncGammaMaxTerms.
IncGammaResult upper_inc_gamma(double s, double x);

// Convenience: log Gamma(s; x).
double log_upper_inc_gamma(double s, double x);

// log(e^x Gamma(s; x)). For large x this avoids the cancellation in
// x + log Gamma(s; x), where both terms are of size x.
double log_scaled_upper_inc_gamma(double s, double x);

// |Gamma(s+1;x) - s Gamma(s;x) - x^s e^(-x)| / Gamma(s+1;x), assembled in
// log space so it stays finite when the gammas themselves do not.
double upper_inc_gamma_recurrence_check(double s, double x);

}  // namespace ugompertz

#endif  // UGOMPERTZ_SPECIAL_HPP_
