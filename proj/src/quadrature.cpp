#include "mellinroot/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "mellinroot/errors.hpp"

namespace mellinroot {

namespace {

constexpr double kHalfPi = 1.57079632679489661923;
constexpr double kInitialStep = 0.5;
constexpr double kMaxAbscissa = 6.5;
constexpr int kMinLevels = 2;
constexpr int kMaxLevels = 12;
// Consecutive negligible terms required before a tail scan stops.
constexpr int kTailRun = 3;

struct Node {
  double t;
  double dt_dx;
};

// exp-sinh map; returns false when t leaves the representable range.
bool map_node(double x, Node& out) {
  const double u = kHalfPi * std::sinh(x);
  if (u > 700.0 || u < -700.0) return false;
  const double t = std::exp(u);
  if (t == 0.0 || !std::isfinite(t)) return false;
  out.t = t;
  out.dt_dx = t * kHalfPi * std::cosh(x);
  return std::isfinite(out.dt_dx);
}

class ExpSinhIntegrator {
 public:
  ExpSinhIntegrator(const RealToComplex& g, const QuadratureConfig& quad)
      : g_(g), quad_(quad) {}

  QuadratureResult run() {
    // Level 0: scan outward from x = 0 to find the effective support.
    double h = kInitialStep;
    std::complex<double> sum = term(0.0);
    x_hi_ = scan(+1, h, sum);
    x_lo_ = scan(-1, h, sum);
    std::complex<double> estimate = h * sum;
    double error = std::numeric_limits<double>::infinity();

    for (int level = 1; level <= kMaxLevels; ++level) {
      h *= 0.5;
      // Only odd multiples of the new step are new nodes.
      const long j_lo = static_cast<long>(std::ceil(x_lo_ / h));
      const long j_hi = static_cast<long>(std::floor(x_hi_ / h));
      for (long j = j_lo; j <= j_hi; ++j) {
        if ((j & 1L) == 0) continue;
        sum += term(static_cast<double>(j) * h);
        if (evals_ > quad_.max_evals) {
          std::ostringstream msg;
          msg << "semi-infinite quadrature exceeded " << quad_.max_evals
              << " evaluations (error estimate " << error << ")";
          throw QuadratureError(msg.str(), estimate, error);
        }
      }
      const std::complex<double> refined = h * sum;
      error = std::abs(refined - estimate);
      estimate = refined;
      if (!std::isfinite(estimate.real()) || !std::isfinite(estimate.imag())) {
        throw QuadratureError("semi-infinite quadrature produced a non-finite value",
                              estimate, error);
      }
      const double target = std::max(quad_.abs_tol, quad_.rel_tol * std::abs(estimate));
      if (level >= kMinLevels && error <= target) {
        return {estimate, error, evals_};
      }
    }
    std::ostringstream msg;
    msg << "semi-infinite quadrature did not converge (error estimate " << error << ")";
    throw QuadratureError(msg.str(), estimate, error);
  }

 private:
  std::complex<double> term(double x) {
    Node node{};
    if (!map_node(x, node)) return {0.0, 0.0};
    ++evals_;
    return g_(node.t) * node.dt_dx;
  }

  // Walks from x = 0 in `direction` until the terms become negligible or the
  // map leaves double range. Returns the last abscissa that was kept.
  double scan(int direction, double h, std::complex<double>& sum) {
    double last = 0.0;
    int quiet = 0;
    for (int j = 1;; ++j) {
      const double x = direction * j * h;
      if (std::abs(x) > kMaxAbscissa) break;
      Node node{};
      if (!map_node(x, node)) break;
      const std::complex<double> value = g_(node.t) * node.dt_dx;
      ++evals_;
      sum += value;
      last = x;
      if (std::abs(value) <= quad_.truncation_decay * std::abs(sum)) {
        if (++quiet >= kTailRun) break;
      } else {
        quiet = 0;
      }
    }
    return last;
  }

  const RealToComplex& g_;
  const QuadratureConfig& quad_;
  std::size_t evals_ = 0;
  double x_lo_ = 0.0;
  double x_hi_ = 0.0;
};

// Integrates coordinate `index` of `point`; deeper coordinates recurse.
// `abs_scale` multiplies the absolute tolerance of this and all inner levels.
QuadratureResult integrate_level(const PointToComplex& g, const RealToComplex* outer_weight,
                                 std::vector<double>& point, int index,
                                 const std::vector<QuadratureConfig>& configs, double abs_scale,
                                 std::size_t& evals) {
  const int k = static_cast<int>(point.size());
  const int dimension = k - index;  // 1 = outermost
  RealToComplex slice;
  if (index == 0) {
    slice = [&](double x) {
      point[0] = x;
      return g(std::span<const double>(point));
    };
  } else if (outer_weight == nullptr) {
    slice = [&](double x) {
      point[index] = x;
      return integrate_level(g, nullptr, point, index - 1, configs, abs_scale, evals).value;
    };
  } else {
    slice = [&](double x) -> std::complex<double> {
      const std::complex<double> w = (*outer_weight)(x);
      if (w == std::complex<double>(0.0, 0.0)) return w;
      point[index] = x;
      // The node's contribution carries w and a Jacobian of order x, so the
      // inner integral only needs absolute accuracy abs_tol / |w x|.
      const double scale = abs_scale / (std::abs(w) * std::max(x, 1e-300));
      return w * integrate_level(g, nullptr, point, index - 1, configs, scale, evals).value;
    };
  }
  QuadratureConfig cfg = configs[static_cast<std::size_t>(dimension - 1)];
  cfg.abs_tol = std::clamp(cfg.abs_tol * abs_scale, std::numeric_limits<double>::min(), 0.5);
  try {
    QuadratureResult result = integrate_semi_infinite(slice, cfg);
    evals += result.evals;
    return result;
  } catch (const QuadratureError& e) {
    if (e.dimension() != 0) throw;
    std::ostringstream msg;
    msg << "iterated quadrature, dimension " << dimension << " of " << k << ": "
        << e.what();
    throw QuadratureError(msg.str(), e.best_estimate(), e.error_estimate(), dimension);
  }
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("rel_tol must lie in (0, 1)");
  if (!(abs_tol > 0.0 && abs_tol < 1.0)) throw DomainError("abs_tol must lie in (0, 1)");
  if (max_evals < 100) throw DomainError("max_evals must be at least 100");
  if (!(truncation_decay > 0.0)) throw DomainError("truncation_decay must be positive");
}

QuadratureConfig QuadratureConfig::for_dimension(int dim) {
  QuadratureConfig cfg;
  switch (dim) {
    case 1: cfg.rel_tol = 1e-8; break;
    case 2: cfg.rel_tol = 1e-7; break;
    case 3: cfg.rel_tol = 1e-6; break;
    default: throw DomainError("quadrature dimension must be 1, 2 or 3");
  }
  return cfg;
}

QuadratureConfig QuadratureConfig::tightened(double factor) const {
  QuadratureConfig cfg = *this;
  cfg.rel_tol /= factor;
  cfg.abs_tol /= factor;
  return cfg;
}

QuadratureResult integrate_semi_infinite(const RealToComplex& g, const QuadratureConfig& quad) {
  quad.validate();
  return ExpSinhIntegrator(g, quad).run();
}

namespace {

QuadratureResult run_iterated(const PointToComplex& g, int k, const QuadratureConfig& quad,
                              const RealToComplex* outer_weight) {
  if (k != 2 && k != 3) {
    throw UnsupportedOrderError("iterated quadrature supports k = 2 or 3 only");
  }
  quad.validate();
  std::vector<QuadratureConfig> configs;
  configs.reserve(static_cast<std::size_t>(k));
  QuadratureConfig level = quad;
  for (int d = 0; d < k; ++d) {
    configs.push_back(level);
    level = level.tightened(10.0);
  }
  std::vector<double> point(static_cast<std::size_t>(k), 0.0);
  std::size_t evals = 0;
  QuadratureResult result = integrate_level(g, outer_weight, point, k - 1, configs, 1.0, evals);
  result.evals = evals;
  return result;
}

}  // namespace

QuadratureResult integrate_iterated(const PointToComplex& g, int k, const QuadratureConfig& quad) {
  return run_iterated(g, k, quad, nullptr);
}

QuadratureResult integrate_iterated(const PointToComplex& g, int k, const QuadratureConfig& quad,
                                    const RealToComplex& outer_weight) {
  return run_iterated(g, k, quad, &outer_weight);
}

std::complex<double> periodic_sum(std::span<const std::complex<double>> samples) {
  if (samples.empty()) throw DomainError("periodic quadrature needs at least one node");
  std::complex<double> sum{0.0, 0.0};
  for (const auto& v : samples) sum += v;
  constexpr double kTwoPi = 6.28318530717958647692;
  return sum * (kTwoPi / static_cast<double>(samples.size()));
}

std::complex<double> integrate_periodic(const RealToComplex& k, int nodes) {
  if (nodes <= 0) throw DomainError("periodic quadrature needs a positive node count");
  constexpr double kTwoPi = 6.28318530717958647692;
  std::vector<std::complex<double>> samples(static_cast<std::size_t>(nodes));
  for (int m = 0; m < nodes; ++m) {
    samples[static_cast<std::size_t>(m)] = k(kTwoPi * m / nodes);
  }
  return periodic_sum(samples);
}

}  // namespace mellinroot
