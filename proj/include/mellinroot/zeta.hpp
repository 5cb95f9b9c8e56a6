#pragma once

#include <complex>

#include "mellinroot/argument_principle.hpp"

namespace mellinroot {

struct ZetaEvaluation {
  std::complex<double> value;
  std::complex<double> derivative;
  // |1 - 2^{1-s}| is tiny: the eta-to-zeta division amplifies rounding error.
  bool ill_conditioned = false;
};

/// zeta and zeta' from the Dirichlet eta series with Borwein's alternating-series
/// acceleration (50 terms), divided by 1 - 2^{1-s}. Throws PoleError at s = 1.
ZetaEvaluation zeta_evaluate(std::complex<double> s);
std::complex<double> zeta_reference(std::complex<double> s);
std::complex<double> zeta_prime_reference(std::complex<double> s);

/// z(t) = t / cosh^2(t), evaluated without overflow for large t.
double zeta_mellin_z(double t);

/// K(s) = 2^{s-1} / ((1 - 2^{1-s}) Gamma(s+1)). Throws PoleError at s = 1.
std::complex<double> zeta_prefactor(std::complex<double> s);
/// K'(s) = K(s) [ln 2 - 2^{1-s} ln 2 / (1 - 2^{1-s}) - psi(s+1)].
std::complex<double> zeta_prefactor_derivative(std::complex<double> s);

/// zeta(s) = K(s) int_0^inf t^s / cosh^2(t) dt, strip Re(s) > -1, with the
/// eta-series zeta as reference.
FactoredFunction build_zeta_factored();

}  // namespace mellinroot
