#include "mellinroot/numerics.hpp"

#include <array>
#include <cmath>

#include "mellinroot/errors.hpp"

namespace mellinroot {

namespace {

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLog2Pi = 0.91893853320467274178;

bool is_nonpositive_integer(Complex s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real());
}

Complex log_gamma_lanczos(Complex s) {
  const Complex z = s - 1.0;
  Complex series = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const Complex base = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(base) - base + std::log(series);
}

// psi(s) for Re(s) large enough that the asymptotic series is accurate.
Complex digamma_asymptotic(Complex s) {
  // B_{2k} / (2k) for k = 1..7.
  constexpr std::array<double, 7> kCoeffs = {
      1.0 / 12.0,   -1.0 / 120.0,       1.0 / 252.0, -1.0 / 240.0,
      1.0 / 132.0,  -691.0 / 32760.0,   1.0 / 12.0};
  const Complex inv2 = 1.0 / (s * s);
  Complex power = inv2;
  Complex tail = 0.0;
  for (double c : kCoeffs) {
    tail += c * power;
    power *= inv2;
  }
  return std::log(s) - 0.5 / s - tail;
}

}  // namespace

int csgn(Complex x) {
  if (x.real() > 0.0) return 1;
  if (x.real() < 0.0) return -1;
  if (x.imag() > 0.0) return 1;
  if (x.imag() < 0.0) return -1;
  throw DomainError("csgn is undefined at 0");
}

Complex stable_tanh(Complex w) {
  if (w.real() < 0.0) return -stable_tanh(-w);
  if (std::abs(w) < 0.5) return std::tanh(w);
  const Complex e = std::exp(-2.0 * w);  // |e| <= 1, never overflows
  return (1.0 - e) / (1.0 + e);
}

Complex csgn_smooth(Complex x, double eps) {
  if (!(eps > 0.0)) throw DomainError("csgn_smooth requires eps > 0");
  return stable_tanh(x / eps);
}

Complex tanh_integral_rep(Complex x, const QuadratureConfig& quad) {
  if (!(x.imag() > -kPi / 2.0 && x.imag() < 0.0)) {
    throw DomainError("tanh integral representation requires -pi/2 < Im(x) < 0");
  }
  const Complex a = Complex(0.0, 2.0 / kPi) * x;
  // Folding (1, inf) onto (0, 1) with t -> 1/t and then t = e^{-v} turns
  //   int_0^inf (t^a - 1)/(t^2 - 1) dt
  // into int_0^inf 2 sinh(a v) e^{-v} / (1 - e^{-2v}) dv, whose value at the
  // former t = 1 singularity (v = 0) is the finite limit a.
  auto integrand = [a](double v) -> Complex {
    const double denom = -std::expm1(-2.0 * v);
    if (v < 1.0) return 2.0 * std::sinh(a * v) * std::exp(-v) / denom;
    return (std::exp((a - 1.0) * v) - std::exp(-(a + 1.0) * v)) / denom;
  };
  const Complex integral = integrate_semi_infinite(integrand, quad).value;
  return Complex(0.0, -2.0 / kPi) * integral;
}

Complex log_gamma(Complex s) {
  if (is_nonpositive_integer(s)) throw PoleError("log_gamma: pole at non-positive integer");
  if (s.real() < 0.5) {
    // Gamma(s) Gamma(1 - s) = pi / sin(pi s)
    return std::log(kPi) - std::log(std::sin(kPi * s)) - log_gamma_lanczos(1.0 - s);
  }
  return log_gamma_lanczos(s);
}

Complex gamma(Complex s) { return std::exp(log_gamma(s)); }

Complex digamma(Complex s) {
  if (is_nonpositive_integer(s)) throw PoleError("digamma: pole at non-positive integer");
  if (s.real() < 0.5) {
    // psi(1 - s) - psi(s) = pi cot(pi s)
    return digamma(1.0 - s) - kPi / std::tan(kPi * s);
  }
  Complex shift = 0.0;
  while (std::abs(s) < 12.0) {
    shift -= 1.0 / s;
    s += 1.0;
  }
  return shift + digamma_asymptotic(s);
}

}  // namespace mellinroot
