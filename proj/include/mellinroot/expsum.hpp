#pragma once

#include <complex>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mellinroot {

/// Weights alpha_j and rates c_j of 1/x ~ sum_j alpha_j exp(-c_j x), Re(x) > 0.
/// Immutable once constructed; the constructor enforces equal non-zero
/// lengths, strictly positive entries and strictly increasing rates.
class ExpSumTable {
 public:
  ExpSumTable(std::vector<double> alpha, std::vector<double> c);

  /// Coefficients as used to generate the published zeta table (4 terms).
  static ExpSumTable appendix_c();
  /// Same four terms at the lower precision printed with the coefficient table.
  static ExpSumTable table2();
  /// "appendixC" or "table2".
  static ExpSumTable preset(std::string_view name);
  /// Plain text, one "alpha c" pair per line. Blank lines and '#' comments are
  /// skipped.
  static ExpSumTable from_file(const std::filesystem::path& path);
  static ExpSumTable parse(std::string_view text);

  std::size_t size() const { return alpha_.size(); }
  const std::vector<double>& alpha() const { return alpha_; }
  const std::vector<double>& c() const { return c_; }

 private:
  std::vector<double> alpha_;
  std::vector<double> c_;
};

/// sum_j alpha_j csgn(x) exp(-c_j x csgn(x)). The csgn fold keeps every
/// exponent in the right half-plane. Throws DomainError at x = 0.
std::complex<double> inv_approx(std::complex<double> x, const ExpSumTable& table);

/// inv_approx with exp(w) replaced by its Taylor polynomial of degree n.
std::complex<double> inv_approx_truncated(std::complex<double> x, const ExpSumTable& table,
                                          int n);

struct ComplexGrid {
  std::vector<double> re_axis;  // nx entries
  std::vector<double> im_axis;  // ny entries
  // Row-major, cells[iy * nx + ix]; empty where the cell could not be evaluated.
  std::vector<std::optional<std::complex<double>>> cells;

  std::size_t nx() const { return re_axis.size(); }
  std::size_t ny() const { return im_axis.size(); }
  const std::optional<std::complex<double>>& at(std::size_t ix, std::size_t iy) const {
    return cells[iy * nx() + ix];
  }
};

/// Inclusive equispaced axis; a single sample sits at `lo`.
std::vector<double> linspace(double lo, double hi, std::size_t count);

/// inv_approx(z) - 1/z over the rectangle; z = 0 cells are left empty.
ComplexGrid error_grid(const ExpSumTable& table, double re_min, double re_max,
                       double im_min, double im_max, std::size_t nx, std::size_t ny);

}  // namespace mellinroot
