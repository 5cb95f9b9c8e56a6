#include "mellinroot/argument_principle.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "mellinroot/errors.hpp"
#include "mellinroot/numerics.hpp"
#include "mellinroot/parallel.hpp"

namespace mellinroot {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
const Complex kTwoPiI{0.0, kTwoPi};

struct ReferenceSample {
  Complex s;
  Complex weight;  // (ds/dphi) / (2 pi i)
  Complex f;
  Complex fprime;
};

ReferenceSample sample_reference(const FactoredFunction& ff, const CircularContour& c,
                                 double phi) {
  if (!ff.has_reference()) {
    throw DomainError("this integrand needs the reference f and f' functions");
  }
  ReferenceSample out;
  out.s = c.point(phi);
  out.weight = c.jacobian(phi) / kTwoPiI;
  out.f = ff.f_reference(out.s);
  out.fprime = ff.fprime_reference(out.s);
  if (out.f == Complex(0.0, 0.0)) {
    std::ostringstream msg;
    msg << "f vanishes on the contour at s = " << out.s;
    throw PoleError(msg.str());
  }
  return out;
}

double inverse_factorial(int k) {
  double value = 1.0;
  for (int i = 2; i <= k; ++i) value /= i;
  return value;
}

}  // namespace

void CircularContour::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DomainError("contour radius must be positive");
  if (nodes <= 0) throw DomainError("contour needs a positive node count");
}

Complex CircularContour::point(double phi) const { return center + radius * std::polar(1.0, phi); }

Complex CircularContour::jacobian(double phi) const {
  return Complex(0.0, radius) * std::polar(1.0, phi);
}

void PipelineConfig::validate() const {
  if (series_order < 0) throw DomainError("series order n must be non-negative");
  if (series_order > 1) {
    throw UnsupportedOrderError("series order n > 1 needs Z' Z^k for k >= 2, which is not supported");
  }
  if (const auto* smooth = std::get_if<CsgnSmooth>(&csgn_mode); smooth && !(smooth->eps > 0.0)) {
    throw DomainError("smooth csgn needs eps > 0");
  }
  quad.validate();
}

CountResult CountResult::from_value(Complex value) {
  CountResult result;
  result.value = value;
  const double nearest = std::round(value.real());
  result.rounded = static_cast<int>(nearest);
  result.residual = std::abs(value - Complex(nearest, 0.0));
  return result;
}

Complex sign_power(Complex sign, int p) {
  Complex result = 1.0;
  for (int i = 0; i < p; ++i) result *= sign;
  return result;
}

Complex integrand_direct(const FactoredFunction& ff, const CircularContour& c, double phi) {
  const ReferenceSample r = sample_reference(ff, c, phi);
  return r.weight * r.fprime / r.f;
}

Complex integrand_stage1(const FactoredFunction& ff, const CircularContour& c, double phi,
                         const ExpSumTable& table) {
  const ReferenceSample r = sample_reference(ff, c, phi);
  return r.weight * r.fprime * inv_approx(r.f, table);
}

Complex integrand_stage2(const FactoredFunction& ff, const CircularContour& c, double phi,
                         const ExpSumTable& table, int n) {
  const ReferenceSample r = sample_reference(ff, c, phi);
  return r.weight * r.fprime * inv_approx_truncated(r.f, table, n);
}

Complex kernel_mellin(const FactoredFunction& ff, const CircularContour& c, double phi,
                      const PipelineConfig& cfg) {
  cfg.validate();
  const int n = cfg.series_order;
  const Complex s = c.point(phi);
  const Complex weight = c.jacobian(phi) / kTwoPiI;
  const QuadratureConfig& quad = cfg.quad;

  // powers[k] = Z^{k+1}(s), derivs[k] = Z'(s) Z^k(s), k = 0..n
  std::vector<Complex> powers(static_cast<std::size_t>(n) + 1);
  std::vector<Complex> derivs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    try {
      powers[k] = power_transform(ff.zf, k + 1, s, quad);
      derivs[k] = deriv_times_power(ff.zf, k, s, quad);
    } catch (const QuadratureError& e) {
      std::ostringstream msg;
      msg << "kernel term k = " << k << " at phi = " << phi << ": " << e.what();
      throw QuadratureError(msg.str(), e.best_estimate(), e.error_estimate(), e.dimension());
    }
  }

  const Complex K = ff.K(s);
  const Complex Kp = ff.Kprime(s);

  // csgn^{k+1}(f) for each k
  std::vector<Complex> signs(static_cast<std::size_t>(n) + 1);
  if (std::holds_alternative<CsgnExact>(cfg.csgn_mode)) {
    const Complex f = ff.f_reference ? ff.f_reference(s) : K * powers[0];
    const int sign = csgn(f);
    for (int k = 0; k <= n; ++k) signs[k] = sign_power(sign, k + 1);
  } else {
    const double eps = std::get<CsgnSmooth>(cfg.csgn_mode).eps;
    const Complex sign = csgn_smooth(K * powers[0], eps);
    for (int k = 0; k <= n; ++k) signs[k] = sign_power(sign, k + 1);
  }

  Complex total = 0.0;
  for (std::size_t j = 0; j < cfg.table.size(); ++j) {
    const double alpha = cfg.table.alpha()[j];
    const double rate = cfg.table.c()[j];
    Complex K_power = 1.0;  // K^k
    double rate_power = 1.0;  // c_j^k
    for (int k = 0; k <= n; ++k) {
      const double coeff = alpha * ((k % 2 == 0) ? 1.0 : -1.0) * inverse_factorial(k) * rate_power;
      total += coeff * signs[k] * (Kp * K_power * powers[k] + K_power * K * derivs[k]);
      K_power *= K;
      rate_power *= rate;
    }
  }
  return total * weight;
}

CountResult count_direct(const FactoredFunction& ff, const CircularContour& c) {
  c.validate();
  return CountResult::from_value(
      integrate_periodic([&](double phi) { return integrand_direct(ff, c, phi); }, c.nodes));
}

CountResult count_pipeline(const FactoredFunction& ff, const CircularContour& c,
                           const PipelineConfig& cfg) {
  c.validate();
  cfg.validate();
  const auto nodes = static_cast<std::size_t>(c.nodes);
  const std::vector<Complex> samples = parallel_map(nodes, [&](std::size_t m) {
    return kernel_mellin(ff, c, kTwoPi * static_cast<double>(m) / c.nodes, cfg);
  });
  return CountResult::from_value(periodic_sum(samples));
}

}  // namespace mellinroot
