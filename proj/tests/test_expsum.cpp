#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "mellinroot/errors.hpp"
#include "mellinroot/expsum.hpp"
#include "oracles.hpp"

using namespace mellinroot;
using Complex = std::complex<double>;

TEST_CASE("table invariants") {
  CHECK_THROWS_AS(ExpSumTable({}, {}), DomainError);
  CHECK_THROWS_AS(ExpSumTable({1.0}, {1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(ExpSumTable({1.0, -1.0}, {1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(ExpSumTable({1.0, 1.0}, {2.0, 2.0}), DomainError);
  CHECK(ExpSumTable::preset("appendixC").alpha()[2] == 0.8523);
  CHECK(ExpSumTable::preset("table2").c()[0] == 0.017);
  CHECK_THROWS_AS(ExpSumTable::preset("nope"), DomainError);
}

TEST_CASE("coefficient file parsing") {
  const ExpSumTable t = ExpSumTable::parse("# alpha c\n0.048 0.0169\n\n0.235\t0.139  \n0.8523 0.627\n2.737 2.241 # last\n");
  CHECK(t.size() == 4);
  CHECK(t.alpha() == ExpSumTable::appendix_c().alpha());
  CHECK(t.c() == ExpSumTable::appendix_c().c());
  CHECK_THROWS_AS(ExpSumTable::parse("0.1\n"), DomainError);
  CHECK_THROWS_AS(ExpSumTable::parse("0.1 abc\n"), DomainError);

  SUBCASE("full precision from a file") {
    const auto path = std::filesystem::temp_directory_path() / "mellinroot_coeffs.txt";
    {
      std::ofstream out(path);
      out << "0.1234567890123456789 1.0000000000000002\n";
    }
    const ExpSumTable f = ExpSumTable::from_file(path);
    CHECK(f.alpha()[0] == 0.1234567890123456789);
    CHECK(f.c()[0] == 1.0000000000000002);
    std::filesystem::remove(path);
  }
  CHECK_THROWS_AS(ExpSumTable::from_file("/nonexistent/coeffs.txt"), DomainError);
}

TEST_CASE("inv_approx") {
  const ExpSumTable table = ExpSumTable::appendix_c();
  const Complex at_one = inv_approx(1.0, table);
  CHECK(std::abs(at_one.real() - oracles::four_term_sum_at_one()) < 1e-15);
  CHECK(at_one.imag() == 0.0);
  CHECK(std::abs(at_one.real() - 0.998) < 1e-3);
  CHECK(inv_approx(-1.0, table) == -at_one);
  CHECK_THROWS_AS(inv_approx(0.0, table), DomainError);
}

TEST_CASE("odd symmetry") {
  const ExpSumTable table = ExpSumTable::appendix_c();
  auto gen = oracles::rng(21);
  std::uniform_real_distribution<double> dist(-20.0, 20.0);
  for (int i = 0; i < 1000; ++i) {
    const Complex x(dist(gen), dist(gen));
    CHECK(inv_approx(-x, table) == -inv_approx(x, table));
    CHECK(inv_approx_truncated(-x, table, 3) == -inv_approx_truncated(x, table, 3));
  }
}

TEST_CASE("truncated series") {
  const ExpSumTable table = ExpSumTable::appendix_c();
  CHECK(std::abs(inv_approx_truncated(1.0, table, 30) - inv_approx(1.0, table)) < 1e-12);

  double alpha_sum = 0.0;
  for (double a : table.alpha()) alpha_sum += a;
  for (Complex x : {Complex(0.3, 2.0), Complex(7.0, -1.0), Complex(-4.0, 0.5)}) {
    const double sign = x.real() > 0 ? 1.0 : -1.0;
    CHECK(std::abs(inv_approx_truncated(x, table, 0) - sign * alpha_sum) < 1e-15);
  }
  CHECK_THROWS_AS(inv_approx_truncated(1.0, table, -1), DomainError);

  SUBCASE("error decreases monotonically past the largest exponent") {
    for (Complex x : {Complex(1.5, 1.0), Complex(-2.0, 3.0), Complex(0.4, -0.2)}) {
      double max_exponent = 0.0;
      for (double c : table.c()) max_exponent = std::max(max_exponent, c * std::abs(x));
      const Complex target = inv_approx(x, table);
      double previous = INFINITY;
      for (int n = static_cast<int>(std::ceil(max_exponent)); n <= 40; ++n) {
        const double err = std::abs(inv_approx_truncated(x, table, n) - target);
        // Below ~1e-11 only rounding noise of the alternating Taylor terms is left.
        CHECK((err <= previous || err < 1e-11));
        previous = err;
      }
      CHECK(previous < 1e-11);
    }
  }
}

TEST_CASE("error grid") {
  const ExpSumTable table = ExpSumTable::appendix_c();
  const ComplexGrid grid = error_grid(table, -1.0, 1.0, -1.0, 1.0, 3, 3);
  CHECK(grid.nx() == 3);
  CHECK(grid.ny() == 3);
  CHECK_FALSE(grid.at(1, 1).has_value());  // z = 0
  REQUIRE(grid.at(2, 1).has_value());
  CHECK(*grid.at(2, 1) == inv_approx(1.0, table) - 1.0);

  const Complex err_at_10 = inv_approx(10.0, table) - 0.1;
  CHECK(std::abs(err_at_10) < 1e-1);
  const Complex err_small = inv_approx(0.01, table) - 100.0;
  CHECK(std::abs(err_small) > 50.0);

  // With only four terms the error grows with |Im z|; values from a direct
  // four-term evaluation.
  const double e1 = std::abs(inv_approx(1.0, table) - 1.0);
  const double e2 = std::abs(inv_approx(Complex(1.0, 5.0), table) - 1.0 / Complex(1.0, 5.0));
  CHECK(e1 == doctest::Approx(0.0019232812303992).epsilon(1e-9));
  CHECK(e2 == doctest::Approx(0.4092443329170131).epsilon(1e-9));
  CHECK(std::abs(inv_approx(Complex(3.0, 0.25), table) - 1.0 / Complex(3.0, 0.25)) ==
        doctest::Approx(0.00048771281939928503).epsilon(1e-9));
}

TEST_CASE("linspace") {
  const auto axis = linspace(0.0, 1.0, 5);
  CHECK(axis == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(linspace(3.0, 4.0, 1) == std::vector<double>{3.0});
  CHECK_THROWS_AS(linspace(0.0, 1.0, 0), DomainError);
}
