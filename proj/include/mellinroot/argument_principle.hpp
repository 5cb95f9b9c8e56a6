#pragma once

#include <complex>
#include <functional>
#include <variant>

#include "mellinroot/expsum.hpp"
#include "mellinroot/mellin.hpp"
#include "mellinroot/quadrature.hpp"

namespace mellinroot {

using ComplexFunction = std::function<std::complex<double>(std::complex<double>)>;

/// s(phi) = center + radius * e^{i phi}, sampled at `nodes` equispaced angles.
struct CircularContour {
  std::complex<double> center;
  double radius = 0.1;
  int nodes = 128;

  void validate() const;
  std::complex<double> point(double phi) const;
  // ds/dphi = i R e^{i phi}
  std::complex<double> jacobian(double phi) const;
};

/// f(s) = K(s) * Z(s) with Z the Mellin transform of zf.z. The reference
/// functions are optional; when present they supply csgn(f) and drive the
/// direct counting method.
struct FactoredFunction {
  MellinIntegrand zf;
  ComplexFunction K;
  ComplexFunction Kprime;
  ComplexFunction f_reference;       // may be empty
  ComplexFunction fprime_reference;  // may be empty

  bool has_reference() const { return static_cast<bool>(f_reference) && static_cast<bool>(fprime_reference); }
};

struct CsgnExact {};
struct CsgnSmooth {
  double eps = 1e-3;
};
using CsgnMode = std::variant<CsgnExact, CsgnSmooth>;

struct PipelineConfig {
  ExpSumTable table = ExpSumTable::appendix_c();
  int series_order = 1;  // n; capped at 1
  QuadratureConfig quad = QuadratureConfig::for_dimension(1);
  CsgnMode csgn_mode = CsgnExact{};

  void validate() const;
};

/// Contour integral for N_R - N_P with its nearest integer.
struct CountResult {
  std::complex<double> value;
  int rounded = 0;
  double residual = 0.0;

  // Trust the rounded count only below this residual.
  static constexpr double kTrustedResidual = 0.25;
  bool trusted() const { return residual < kTrustedResidual; }

  static CountResult from_value(std::complex<double> value);
};

/// (1/2pi i) (ds/dphi) f'(s)/f(s) at s = s(phi). Needs the reference functions.
std::complex<double> integrand_direct(const FactoredFunction& ff, const CircularContour& c,
                                      double phi);

/// Same weighting with 1/f replaced by the exponential-sum reciprocal.
std::complex<double> integrand_stage1(const FactoredFunction& ff, const CircularContour& c,
                                      double phi, const ExpSumTable& table);

/// Same weighting with 1/f replaced by the order-n truncated exponential sum.
std::complex<double> integrand_stage2(const FactoredFunction& ff, const CircularContour& c,
                                      double phi, const ExpSumTable& table, int n);

/// The expanded kernel
///   sum_j sum_{k<=n} alpha_j csgn^{k+1}(f) (-1)^k/k! c_j^k
///       [K' K^k Z^{k+1} + K^{k+1} Z' Z^k] (ds/dphi) / (2 pi i)
/// with every power of Z obtained from z(t) through Mellin convolutions.
std::complex<double> kernel_mellin(const FactoredFunction& ff, const CircularContour& c,
                                   double phi, const PipelineConfig& cfg);

/// Trapezoidal contour integral of integrand_direct over c.nodes angles.
CountResult count_direct(const FactoredFunction& ff, const CircularContour& c);

/// Trapezoidal contour integral of kernel_mellin; node evaluations run in
/// parallel and are summed in node order.
CountResult count_pipeline(const FactoredFunction& ff, const CircularContour& c,
                           const PipelineConfig& cfg);

/// csgn^p for a sign that is exactly +-1: only the parity of p matters.
inline double sign_power(int sign, int p) { return (p % 2 == 0) ? 1.0 : static_cast<double>(sign); }

/// General complex power used when csgn is smoothed.
std::complex<double> sign_power(std::complex<double> sign, int p);

}  // namespace mellinroot
