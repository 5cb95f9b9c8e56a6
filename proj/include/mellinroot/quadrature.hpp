#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>

namespace mellinroot {

struct QuadratureConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  // Budget per one-dimensional sweep; iterated integrals apply it at every level.
  std::size_t max_evals = 200000;
  // A tail node is dropped once |term| < truncation_decay * |partial sum|.
  double truncation_decay = 1e-16;

  // Throws DomainError when a field violates its range.
  void validate() const;

  // Default tolerances by integral dimension: 1e-8 (1-D), 1e-7 (2-D), 1e-6 (3-D).
  static QuadratureConfig for_dimension(int dim);

  // Copy with both tolerances divided by `factor`.
  QuadratureConfig tightened(double factor) const;
};

struct QuadratureResult {
  std::complex<double> value;
  double error = 0.0;
  std::size_t evals = 0;
};

using RealToComplex = std::function<std::complex<double>(double)>;
using PointToComplex = std::function<std::complex<double>(std::span<const double>)>;

/// int_0^inf g(t) dt with the exp-sinh transform t = exp(pi/2 sinh x).
///
/// Trapezoidal sums in x are refined by halving the step until two successive
/// levels agree to max(abs_tol, rel_tol * |I|). Endpoint behaviour like
/// t^{sigma-1} (sigma > 0) at the origin and exponential decay at infinity
/// are both absorbed by the double-exponential clustering of nodes.
/// Throws QuadratureError (dimension 0) when the budget runs out.
QuadratureResult integrate_semi_infinite(const RealToComplex& g,
                                         const QuadratureConfig& quad = {});

/// k-fold iterated integral over (0, inf)^k, k in {2, 3}.
///
/// g receives the point as (u_1, ..., u_{k-1}, t): the last coordinate is the
/// outermost integration variable. Each inner level runs with tolerances one
/// order tighter than the level enclosing it. Non-convergence is reported with
/// the 1-based nesting level (1 = outermost) that failed.
QuadratureResult integrate_iterated(const PointToComplex& g, int k,
                                    const QuadratureConfig& quad = {});

/// As above, but computes int dt w(t) [int du ... g(u, t)]: the weight is
/// applied to the outermost variable after the inner integrals are done.
/// Lets a factor such as t^{s-1} stay out of the inner integrands, whose
/// values could otherwise leave double range where the full product is tiny.
QuadratureResult integrate_iterated(const PointToComplex& g, int k,
                                    const QuadratureConfig& quad,
                                    const RealToComplex& outer_weight);

/// Trapezoidal rule over `nodes` equispaced angles in [0, 2pi).
std::complex<double> integrate_periodic(const RealToComplex& k, int nodes);

/// (2pi / N) * sum of the samples, summed in index order.
std::complex<double> periodic_sum(std::span<const std::complex<double>> samples);

}  // namespace mellinroot
