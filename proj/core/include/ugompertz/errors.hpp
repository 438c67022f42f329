#ifndef UGOMPERTZ_ERRORS_HPP_
#define UGOMPERTZ_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ugompertz {

// Root of the library's exception hierarchy. Every failure the library
// reports derives from this, so callers can catch one type at a boundary.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input lies outside the mathematical domain of the operation
// (non-finite value, point outside the support, invalid parameter).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A structural argument is invalid (sample size, grid size, order).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// An iterative method ran out of budget. Carries what it had so far.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double partial_value,
                   double error_estimate, long work)
      : Error(what),
        partial_value_(partial_value),
        error_estimate_(error_estimate),
        work_(work) {}

  double partial_value() const noexcept { return partial_value_; }
  double error_estimate() const noexcept { return error_estimate_; }
  long work() const noexcept { return work_; }

 private:
  double partial_value_;
  double error_estimate_;
  long work_;
};

// A result would be dominated by cancellation noise.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// A result is not representable (e.g. a hazard whose survival underflowed).
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Parameter estimation failed. The best parameters found are attached.
class EstimationError : public Error {
 public:
  EstimationError(const std::string& what, double alpha, double beta,
                  double residual)
      : Error(what), alpha_(alpha), beta_(beta), residual_(residual) {}

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double residual() const noexcept { return residual_; }

 private:
  double alpha_;
  double beta_;
  double residual_;
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ugompertz

#endif  // UGOMPERTZ_ERRORS_HPP_
