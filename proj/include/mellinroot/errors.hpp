#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace mellinroot {

// Argument outside the domain of an operation (csgn(0), strip violations, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation at (or on top of) a pole or a root that makes the result undefined.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Requested order exceeds what the implementation supports.
class UnsupportedOrderError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Quadrature did not reach its tolerance within the evaluation budget.
// Carries the best estimate so callers can still report something.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, std::complex<double> best_estimate,
                  double error_estimate, int dimension = 0)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate),
        dimension_(dimension) {}

  std::complex<double> best_estimate() const { return best_estimate_; }
  double error_estimate() const { return error_estimate_; }
  // 0 for a plain 1-D integral; for iterated integrals, the 1-based nesting
  // level (1 = outermost) at which convergence failed.
  int dimension() const { return dimension_; }

 private:
  std::complex<double> best_estimate_;
  double error_estimate_;
  int dimension_;
};

}  // namespace mellinroot
