#include "mellinroot/zeta.hpp"

#include <array>
#include <cmath>

#include "mellinroot/errors.hpp"
#include "mellinroot/numerics.hpp"

namespace mellinroot {

namespace {

constexpr int kEtaTerms = 50;

// Borwein weights (d_k - d_n) / d_n for k = 0..n-1, with
// d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!).
struct EtaWeights {
  std::array<double, kEtaTerms> w{};
  std::array<double, kEtaTerms> log_index{};  // ln(k+1)

  EtaWeights() {
    constexpr int n = kEtaTerms;
    std::array<double, n + 1> d{};
    double term = 1.0 / n;  // i = 0: (n-1)!/n!
    double partial = term;
    d[0] = n * partial;
    for (int i = 1; i <= n; ++i) {
      term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i) * (2.0 * i - 1.0));
      partial += term;
      d[i] = n * partial;
    }
    for (int k = 0; k < n; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      w[k] = -sign * (d[k] - d[n]) / d[n];
      log_index[k] = std::log(static_cast<double>(k + 1));
    }
  }
};

const EtaWeights& eta_weights() {
  static const EtaWeights weights;
  return weights;
}

}  // namespace

ZetaEvaluation zeta_evaluate(Complex s) {
  if (s == Complex(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1");
  const EtaWeights& ew = eta_weights();
  Complex eta = 0.0;
  Complex eta_prime = 0.0;
  for (int k = 0; k < kEtaTerms; ++k) {
    const Complex term = ew.w[k] * std::exp(-s * ew.log_index[k]);
    eta += term;
    eta_prime -= ew.log_index[k] * term;
  }
  const Complex two_pow = std::exp((1.0 - s) * kLn2);  // 2^{1-s}
  const Complex denom = 1.0 - two_pow;
  const Complex denom_prime = kLn2 * two_pow;
  ZetaEvaluation out;
  out.value = eta / denom;
  out.derivative = eta_prime / denom - eta * denom_prime / (denom * denom);
  out.ill_conditioned = std::abs(denom) < 1e-6;
  return out;
}

Complex zeta_reference(Complex s) { return zeta_evaluate(s).value; }

Complex zeta_prime_reference(Complex s) { return zeta_evaluate(s).derivative; }

double zeta_mellin_z(double t) {
  if (!std::isfinite(t)) return 0.0;
  // t / cosh^2 t = 4 t e^{-2t} / (1 + e^{-2t})^2
  const double e = std::exp(-2.0 * t);
  const double denom = 1.0 + e;
  return 4.0 * t * e / (denom * denom);
}

Complex zeta_prefactor(Complex s) {
  const Complex denom = 1.0 - std::exp((1.0 - s) * kLn2);
  if (denom == Complex(0.0, 0.0)) throw PoleError("prefactor K has a pole at s = 1");
  return std::exp((s - 1.0) * kLn2 - log_gamma(s + 1.0)) / denom;
}

Complex zeta_prefactor_derivative(Complex s) {
  const Complex two_pow = std::exp((1.0 - s) * kLn2);
  const Complex log_derivative = kLn2 - two_pow * kLn2 / (1.0 - two_pow) - digamma(s + 1.0);
  return zeta_prefactor(s) * log_derivative;
}

FactoredFunction build_zeta_factored() {
  FactoredFunction ff;
  ff.zf.z = [](double t) { return Complex(zeta_mellin_z(t), 0.0); };
  ff.zf.sigma_min = -1.0;
  ff.K = zeta_prefactor;
  ff.Kprime = zeta_prefactor_derivative;
  ff.f_reference = zeta_reference;
  ff.fprime_reference = zeta_prime_reference;
  return ff;
}

}  // namespace mellinroot
