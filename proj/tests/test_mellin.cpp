#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "mellinroot/errors.hpp"
#include "mellinroot/mellin.hpp"
#include "mellinroot/numerics.hpp"
#include "mellinroot/parallel.hpp"
#include "mellinroot/zeta.hpp"
#include "oracles.hpp"

using namespace mellinroot;

namespace {

MellinIntegrand exponential() {
  return {[](double t) { return Complex(std::exp(-t)); }, 0.0};
}

MellinIntegrand sech_squared() { return build_zeta_factored().zf; }

}  // namespace

TEST_CASE("transform of e^{-t} is Gamma") {
  const MellinIntegrand zf = exponential();
  CHECK(std::abs(transform(zf, 2.0) - 1.0) < 1e-10);
  CHECK(std::abs(transform(zf, 0.5) - std::sqrt(kPi)) < 1e-10);
  const Complex s(1.3, 2.2);
  CHECK(std::abs(transform(zf, s) - gamma(s)) < 1e-9);
  CHECK_THROWS_AS(transform(zf, -0.5), DomainError);
  CHECK_THROWS_AS(transform(zf, 0.0), DomainError);
}

TEST_CASE("transform derivative") {
  const MellinIntegrand zf = exponential();
  const double euler = oracles::euler_gamma_series();
  CHECK(std::abs(transform_derivative(zf, 1.0) + euler) < 1e-9);

  const double h = 1e-5;
  QuadratureConfig quad;
  quad.rel_tol = 1e-13;
  for (const MellinIntegrand& m : {exponential(), sech_squared()}) {
    for (Complex s : {Complex(0.4, 0.0), Complex(0.67, 1.57), Complex(1.5, -3.0)}) {
      const Complex fd = (transform(m, s + h, quad) - transform(m, s - h, quad)) / (2 * h);
      CAPTURE(s);
      CHECK(std::abs(transform_derivative(m, s) - fd) < 1e-6);
    }
  }
}

TEST_CASE("transform is analytic in s") {
  const MellinIntegrand zf = sech_squared();
  QuadratureConfig quad;
  quad.rel_tol = 1e-13;
  const double h = 1e-5;
  for (Complex s : {Complex(0.6, 1.5), Complex(1.2, -0.7)}) {
    const Complex d_re = (transform(zf, s + h, quad) - transform(zf, s - h, quad)) / (2 * h);
    const Complex d_im =
        (transform(zf, s + Complex(0, h), quad) - transform(zf, s - Complex(0, h), quad)) /
        Complex(0, 2 * h);
    CHECK(std::abs(d_re - d_im) < 1e-5);
  }
}

TEST_CASE("power_transform order handling") {
  const MellinIntegrand zf = exponential();
  CHECK(power_transform(zf, 1, 2.0) == transform(zf, 2.0, QuadratureConfig::for_dimension(1)));
  CHECK_THROWS_AS(power_transform(zf, 4, 2.0), UnsupportedOrderError);
  CHECK_THROWS_AS(power_transform(zf, 0, 2.0), DomainError);
  CHECK_THROWS_AS(power_transform(zf, 2, -1.0), DomainError);
  CHECK_THROWS_AS(deriv_times_power(zf, 2, 2.0), UnsupportedOrderError);
  CHECK_THROWS_AS(deriv_times_power(zf, -1, 2.0), DomainError);
}

TEST_CASE("Mellin convolution of e^{-t}") {
  const MellinIntegrand zf = exponential();
  // Gamma(1.5)^2
  CHECK(std::abs(power_transform(zf, 2, 1.5) - kPi / 4.0) < 1e-7);
  // Gamma'(1) Gamma(1)
  CHECK(std::abs(deriv_times_power(zf, 1, 1.0) + oracles::euler_gamma_series()) < 1e-7);
  CHECK(deriv_times_power(zf, 0, 1.3) == transform_derivative(zf, 1.3));
}

TEST_CASE("convolution identities on t/cosh^2 t") {
  const MellinIntegrand zf = sech_squared();
  const Complex s = Complex(0.57, 1.57) + 0.1;
  const QuadratureConfig quad = QuadratureConfig::for_dimension(2);
  const Complex product = transform_derivative(zf, s, quad) * transform(zf, s, quad);
  CHECK(std::abs(deriv_times_power(zf, 1, s, quad) - product) < 1e-6);

  SUBCASE("random points, k = 2") {
    auto gen = oracles::rng(41);
    std::uniform_real_distribution<double> re(-0.5, 2.5);
    std::uniform_real_distribution<double> im(-4.0, 4.0);
    for (int i = 0; i < 50; ++i) {
      const Complex p(re(gen), im(gen));
      const Complex z = transform(zf, p, quad);
      CAPTURE(p);
      CHECK(std::abs(power_transform(zf, 2, p, quad) - z * z) <
            10 * quad.rel_tol * std::max(1.0, std::abs(z * z)));
      CHECK(std::abs(deriv_times_power(zf, 1, p, quad) - transform_derivative(zf, p, quad) * z) <
            10 * quad.rel_tol * std::max(1.0, std::abs(z)));
    }
  }
}

TEST_CASE("three-fold convolution at published check points") {
  const MellinIntegrand zf = sech_squared();
  QuadratureConfig quad = QuadratureConfig::for_dimension(3);
  const Complex real_case = power_transform(zf, 3, 0.4, quad);
  CHECK(std::abs(real_case - 0.4875296028) < 1e-6);
  const Complex complex_case = power_transform(zf, 3, {0.4, -0.3}, quad);
  CHECK(std::abs(complex_case - Complex(0.4103824778, 0.1549090396)) < 1e-6);
}

TEST_CASE("three-fold convolution at random points") {
  const MellinIntegrand zf = sech_squared();
  const QuadratureConfig quad = QuadratureConfig::for_dimension(3);
  {
    auto gen = oracles::rng(42);
    std::uniform_real_distribution<double> re(-0.5, 2.5);
    std::uniform_real_distribution<double> im(-4.0, 4.0);
    std::vector<Complex> points(50);
    for (auto& p : points) p = {re(gen), im(gen)};
    const auto deviations = parallel_map(points.size(), [&](std::size_t i) {
      const Complex z = transform(zf, points[i], quad);
      return std::abs(power_transform(zf, 3, points[i], quad) - z * z * z) /
             std::max(1.0, std::abs(z * z * z));
    });
    for (std::size_t i = 0; i < points.size(); ++i) {
      CAPTURE(points[i]);
      CHECK(deviations[i] < 10 * quad.rel_tol);
    }
  }
}
