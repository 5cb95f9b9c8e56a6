#include "mellinroot/mellin.hpp"

#include <cmath>
#include <sstream>
#include <span>

#include "mellinroot/errors.hpp"

namespace mellinroot {

using Complex = std::complex<double>;

namespace {

void require_strip(const MellinIntegrand& zf, Complex s) {
  if (!zf.in_strip(s)) {
    std::ostringstream msg;
    msg << "Re(s) = " << s.real() << " lies outside the convergence strip ("
        << zf.sigma_min << ", " << zf.sigma_max << ")";
    throw DomainError(msg.str());
  }
}

// t^{s-1}
Complex kernel_power(double t, Complex s) { return std::exp((s - 1.0) * std::log(t)); }

}  // namespace

Complex transform(const MellinIntegrand& zf, Complex s, const QuadratureConfig& quad) {
  require_strip(zf, s);
  return integrate_semi_infinite(
             [&](double t) { return zf.z(t) * kernel_power(t, s); }, quad)
      .value;
}

Complex transform_derivative(const MellinIntegrand& zf, Complex s, const QuadratureConfig& quad) {
  require_strip(zf, s);
  return integrate_semi_infinite(
             [&](double t) { return std::log(t) * zf.z(t) * kernel_power(t, s); }, quad)
      .value;
}

Complex power_transform(const MellinIntegrand& zf, int k, Complex s, const QuadratureConfig& quad) {
  if (k < 1) throw DomainError("power_transform requires k >= 1");
  if (k > 3) throw UnsupportedOrderError("power_transform supports k <= 3");
  if (k == 1) return transform(zf, s, quad);
  require_strip(zf, s);
  // point = (u_1, ..., u_{k-1}, t); t^{s-1} is applied as the outer weight.
  auto convolution = [&](std::span<const double> point) -> Complex {
    const double t = point.back();
    const auto u = point.first(point.size() - 1);
    Complex value = zf.z(u.front()) / u.front() * zf.z(t / u.back());
    for (std::size_t j = 0; j + 1 < u.size(); ++j) {
      value *= zf.z(u[j + 1] / u[j]) / u[j + 1];
    }
    return value;
  };
  return integrate_iterated(convolution, k, quad, [s](double t) { return kernel_power(t, s); })
      .value;
}

Complex power_transform(const MellinIntegrand& zf, int k, Complex s) {
  return power_transform(zf, k, s, QuadratureConfig::for_dimension(k < 1 || k > 3 ? 1 : k));
}

Complex deriv_times_power(const MellinIntegrand& zf, int k, Complex s,
                          const QuadratureConfig& quad) {
  if (k < 0) throw DomainError("deriv_times_power requires k >= 0");
  if (k > 1) throw UnsupportedOrderError("deriv_times_power supports k <= 1");
  if (k == 0) return transform_derivative(zf, s, quad);
  require_strip(zf, s);
  auto convolution = [&](std::span<const double> point) -> Complex {
    const double u = point[0];
    const double t = point[1];
    return std::log(u) * zf.z(u) / u * zf.z(t / u);
  };
  return integrate_iterated(convolution, 2, quad, [s](double t) { return kernel_power(t, s); })
      .value;
}

Complex deriv_times_power(const MellinIntegrand& zf, int k, Complex s) {
  return deriv_times_power(zf, k, s, QuadratureConfig::for_dimension(k == 1 ? 2 : 1));
}

}  // namespace mellinroot
