#pragma once

#include <complex>

#include "mellinroot/quadrature.hpp"

namespace mellinroot {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kLn2 = 0.69314718055994530941723212145817657;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Complex sign: sign of the real part, falling back to the sign of the
/// imaginary part on the imaginary axis. Throws DomainError for x == 0.
int csgn(Complex x);

/// tanh(x / eps), a smooth stand-in for csgn. Saturates to +-1 without
/// overflowing for large |Re(x)| / eps.
Complex csgn_smooth(Complex x, double eps);

/// Overflow-safe complex tanh.
Complex stable_tanh(Complex w);

/// tanh evaluated through its Mellin-type integral representation
///   tanh(x) = -(2i/pi) * int_0^inf (t^{2ix/pi} - 1) / (t^2 - 1) dt.
/// Only accepts -pi/2 < Im(x) < 0.
Complex tanh_integral_rep(Complex x, const QuadratureConfig& quad = {});

/// Principal-branch-continuous log Gamma for complex arguments (Lanczos,
/// with reflection for Re(s) < 0.5). Throws PoleError at non-positive integers.
Complex log_gamma(Complex s);

/// Gamma(s) = exp(log_gamma(s)).
Complex gamma(Complex s);

/// d/ds log Gamma(s). Throws PoleError at non-positive integers.
Complex digamma(Complex s);

}  // namespace mellinroot
