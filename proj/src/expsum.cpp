#include "mellinroot/expsum.hpp"

#include <cassert>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mellinroot/errors.hpp"
#include "mellinroot/numerics.hpp"

namespace mellinroot {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view token, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    std::ostringstream msg;
    msg << "coefficient file line " << line_no << ": cannot parse '" << token << "'";
    throw DomainError(msg.str());
  }
  return value;
}

}  // namespace

ExpSumTable::ExpSumTable(std::vector<double> alpha, std::vector<double> c)
    : alpha_(std::move(alpha)), c_(std::move(c)) {
  if (alpha_.empty()) throw DomainError("exponential sum table needs at least one term");
  if (alpha_.size() != c_.size()) {
    throw DomainError("exponential sum table: alpha and c differ in length");
  }
  for (std::size_t j = 0; j < alpha_.size(); ++j) {
    if (!(alpha_[j] > 0.0) || !(c_[j] > 0.0) || !std::isfinite(alpha_[j]) ||
        !std::isfinite(c_[j])) {
      throw DomainError("exponential sum table entries must be finite and positive");
    }
    if (j > 0 && !(c_[j] > c_[j - 1])) {
      throw DomainError("exponential sum rates must be strictly increasing");
    }
  }
}

ExpSumTable ExpSumTable::appendix_c() {
  return {{0.048, 0.235, 0.8523, 2.737}, {0.0169, 0.139, 0.627, 2.241}};
}

ExpSumTable ExpSumTable::table2() {
  return {{0.048, 0.235, 0.852, 2.737}, {0.017, 0.139, 0.627, 2.241}};
}

ExpSumTable ExpSumTable::preset(std::string_view name) {
  if (name == "appendixC") return appendix_c();
  if (name == "table2") return table2();
  throw DomainError("unknown coefficient preset '" + std::string(name) + "'");
}

ExpSumTable ExpSumTable::parse(std::string_view text) {
  std::vector<double> alpha;
  std::vector<double> c;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) {
      throw DomainError("coefficient file line " + std::to_string(line_no) +
                        ": expected 'alpha c'");
    }
    alpha.push_back(parse_double(line.substr(0, gap), line_no));
    c.push_back(parse_double(trim(line.substr(gap)), line_no));
  }
  return {std::move(alpha), std::move(c)};
}

ExpSumTable ExpSumTable::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open coefficient file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str());
}

Complex inv_approx(Complex x, const ExpSumTable& table) {
  const double sign = csgn(x);
  const Complex w = x * sign;
  Complex sum = 0.0;
  for (std::size_t j = 0; j < table.size(); ++j) {
    const Complex exponent = table.c()[j] * w;
    assert(exponent.real() >= 0.0);
    sum += table.alpha()[j] * std::exp(-exponent);
  }
  return sign * sum;
}

Complex inv_approx_truncated(Complex x, const ExpSumTable& table, int n) {
  if (n < 0) throw DomainError("series order must be non-negative");
  const double sign = csgn(x);
  const Complex w = x * sign;
  Complex sum = 0.0;
  for (std::size_t j = 0; j < table.size(); ++j) {
    const Complex step = -table.c()[j] * w;
    Complex term = 1.0;
    Complex series = 1.0;
    for (int k = 1; k <= n; ++k) {
      term *= step / static_cast<double>(k);
      series += term;
    }
    sum += table.alpha()[j] * series;
  }
  return sign * sum;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count == 0) throw DomainError("grid axis needs at least one sample");
  std::vector<double> axis(count, lo);
  if (count == 1) return axis;
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) axis[i] = lo + step * static_cast<double>(i);
  axis.back() = hi;
  return axis;
}

ComplexGrid error_grid(const ExpSumTable& table, double re_min, double re_max,
                       double im_min, double im_max, std::size_t nx, std::size_t ny) {
  ComplexGrid grid;
  grid.re_axis = linspace(re_min, re_max, nx);
  grid.im_axis = linspace(im_min, im_max, ny);
  grid.cells.resize(nx * ny);
  for (std::size_t iy = 0; iy < ny; ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      const Complex z(grid.re_axis[ix], grid.im_axis[iy]);
      if (z == Complex(0.0, 0.0)) continue;
      grid.cells[iy * nx + ix] = inv_approx(z, table) - 1.0 / z;
    }
  }
  return grid;
}

}  // namespace mellinroot
