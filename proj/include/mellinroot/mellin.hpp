#pragma once

#include <complex>
#include <functional>
#include <limits>

#include "mellinroot/quadrature.hpp"

namespace mellinroot {

/// The function z(t) whose Mellin transform Z(s) = int_0^inf z(t) t^{s-1} dt
/// is being evaluated, together with the open strip of Re(s) where the
/// transform converges.
struct MellinIntegrand {
  std::function<std::complex<double>(double)> z;
  double sigma_min = 0.0;
  double sigma_max = std::numeric_limits<double>::infinity();

  bool in_strip(std::complex<double> s) const {
    return s.real() > sigma_min && s.real() < sigma_max;
  }
};

/// Z(s).
std::complex<double> transform(const MellinIntegrand& zf, std::complex<double> s,
                               const QuadratureConfig& quad = QuadratureConfig::for_dimension(1));

/// Z'(s) = int_0^inf ln(t) z(t) t^{s-1} dt.
std::complex<double> transform_derivative(
    const MellinIntegrand& zf, std::complex<double> s,
    const QuadratureConfig& quad = QuadratureConfig::for_dimension(1));

/// Z(s)^k for k in {1, 2, 3}, evaluated as a (k-1)-fold Mellin convolution of z
/// with itself followed by the outer transform:
///   Z^k(s) = int dt int du_1 ... du_{k-1} t^{s-1} z(u_1) z(t/u_{k-1}) / u_1
///            * prod_{j=1}^{k-2} z(u_{j+1}/u_j) / u_{j+1}.
/// k = 1 delegates to transform(). Throws UnsupportedOrderError for k > 3.
std::complex<double> power_transform(const MellinIntegrand& zf, int k, std::complex<double> s,
                                     const QuadratureConfig& quad);
std::complex<double> power_transform(const MellinIntegrand& zf, int k, std::complex<double> s);

/// Z'(s) Z(s)^k for k in {0, 1}. k = 1 uses
///   int dt int du ln(u) z(u) z(t/u) u^{-1} t^{s-1}.
/// Throws UnsupportedOrderError for k > 1.
std::complex<double> deriv_times_power(const MellinIntegrand& zf, int k,
                                       std::complex<double> s, const QuadratureConfig& quad);
std::complex<double> deriv_times_power(const MellinIntegrand& zf, int k,
                                       std::complex<double> s);

}  // namespace mellinroot
