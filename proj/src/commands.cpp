#include "mellinroot/commands.hpp"

#include <cmath>
#include <iomanip>
#include <locale>
#include <sstream>

#include <json.hpp>

#include "mellinroot/errors.hpp"
#include "mellinroot/numerics.hpp"
#include "mellinroot/parallel.hpp"
#include "mellinroot/zeta.hpp"

namespace mellinroot::cli {

namespace {

using json = nlohmann::json;

std::string fixed7(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(7) << v;
  std::string text = os.str();
  if (text == "-0.0000000") text.erase(0, 1);
  return text;
}

std::string sig10(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(10) << v;
  return os.str();
}

double round7(double v) { return std::round(v * 1e7) / 1e7; }

json complex_json(Complex z, bool rounded) {
  return {{"re", rounded ? round7(z.real()) : z.real()},
          {"im", rounded ? round7(z.imag()) : z.imag()}};
}

// Result of one table cell: either a value or the exit code of its failure.
struct Cell {
  std::optional<Complex> value;
  int error_code = kSuccess;
  std::string error;
};

template <typename Fn>
Cell evaluate_cell(Fn&& fn) {
  Cell cell;
  try {
    cell.value = fn();
  } catch (...) {
    cell.error_code = exit_code_for(std::current_exception());
    try {
      throw;
    } catch (const std::exception& e) {
      cell.error = e.what();
    } catch (...) {
      cell.error = "unknown failure";
    }
  }
  return cell;
}

ExpSumTable load_table(const RunSpec& spec) {
  if (!spec.coeff_file.empty()) return ExpSumTable::from_file(spec.coeff_file);
  return ExpSumTable::preset(spec.preset);
}

}  // namespace

RunSpec RunSpec::defaults_for(const std::string& command) {
  RunSpec spec;
  spec.command = command;
  if (command == "table1") {
    spec.nodes = 8;
  } else if (command == "sign-map") {
    spec.re_min = -0.9;
    spec.re_max = 2.0;
    spec.im_min = 0.0;
    spec.im_max = 30.0;
    spec.grid_nx = 30;
    spec.grid_ny = 61;
  } else if (command == "convolution-check") {
    spec.rel_tol = 1e-9;
    spec.s_values = {{0.4, 0.0}, {0.4, -0.3}};
  }
  return spec;
}

void RunSpec::validate() const {
  if (!(radius > 0.0)) throw DomainError("--radius must be positive");
  if (nodes <= 0) throw DomainError("--nodes must be positive");
  if (method != "direct" && method != "pipeline") {
    throw DomainError("--method must be 'direct' or 'pipeline'");
  }
  if (grid_nx <= 0 || grid_ny <= 0) throw DomainError("grid dimensions must be positive");
  if (csgn_eps && !(*csgn_eps > 0.0)) throw DomainError("--csgn-eps must be positive");
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw DomainError("--rel-tol must lie in (0, 1)");
}

CircularContour RunSpec::contour() const {
  CircularContour c{{center_re, center_im}, radius, nodes};
  c.validate();
  return c;
}

PipelineConfig RunSpec::pipeline() const {
  PipelineConfig cfg;
  cfg.table = load_table(*this);
  cfg.series_order = order_n;
  cfg.quad.rel_tol = rel_tol;
  if (csgn_eps) cfg.csgn_mode = CsgnSmooth{*csgn_eps};
  cfg.validate();
  return cfg;
}

int cmd_table1(const RunSpec& spec, std::ostream& out) {
  spec.validate();
  const FactoredFunction ff = build_zeta_factored();
  const CircularContour contour = spec.contour();
  const PipelineConfig cfg = spec.pipeline();
  const int steps = spec.nodes;

  const auto rows = parallel_map(static_cast<std::size_t>(steps) + 1, [&](std::size_t m) {
    const double phi = 2.0 * kPi * static_cast<double>(m) / steps;
    return std::array<Cell, 4>{
        evaluate_cell([&] { return integrand_direct(ff, contour, phi); }),
        evaluate_cell([&] { return integrand_stage1(ff, contour, phi, cfg.table); }),
        evaluate_cell(
            [&] { return integrand_stage2(ff, contour, phi, cfg.table, cfg.series_order); }),
        evaluate_cell([&] { return kernel_mellin(ff, contour, phi, cfg); }),
    };
  });

  int status = kSuccess;
  static constexpr std::array<const char*, 4> kColumns = {"direct", "stage1", "stage2", "kernel"};
  if (spec.format == OutputFormat::Csv) {
    out << "phi_over_2pi";
    for (const char* name : kColumns) out << ',' << name << "_re," << name << "_im";
    out << '\n';
    for (std::size_t m = 0; m < rows.size(); ++m) {
      out << fixed7(static_cast<double>(m) / steps);
      for (const Cell& cell : rows[m]) {
        if (cell.value) {
          out << ',' << fixed7(cell.value->real()) << ',' << fixed7(cell.value->imag());
        } else {
          out << ",error,error";
          if (status == kSuccess) status = cell.error_code;
        }
      }
      out << '\n';
    }
  } else {
    json doc;
    doc["center"] = complex_json(contour.center, false);
    doc["radius"] = contour.radius;
    doc["rows"] = json::array();
    for (std::size_t m = 0; m < rows.size(); ++m) {
      json row;
      row["phi_over_2pi"] = round7(static_cast<double>(m) / steps);
      for (std::size_t col = 0; col < kColumns.size(); ++col) {
        const Cell& cell = rows[m][col];
        if (cell.value) {
          row[kColumns[col]] = complex_json(*cell.value, true);
        } else {
          row[kColumns[col]] = {{"error", cell.error}};
          if (status == kSuccess) status = cell.error_code;
        }
      }
      doc["rows"].push_back(std::move(row));
    }
    out << doc.dump(2) << '\n';
  }
  return status;
}

int cmd_count(const RunSpec& spec, std::ostream& out) {
  spec.validate();
  const FactoredFunction ff = build_zeta_factored();
  const CircularContour contour = spec.contour();
  const CountResult result = spec.method == "direct"
                                 ? count_direct(ff, contour)
                                 : count_pipeline(ff, contour, spec.pipeline());
  if (spec.format == OutputFormat::Csv) {
    out << "method,center_re,center_im,radius,nodes,value_re,value_im,rounded,residual\n";
    out << spec.method << ',' << sig10(contour.center.real()) << ','
        << sig10(contour.center.imag()) << ',' << sig10(contour.radius) << ','
        << contour.nodes << ',' << sig10(result.value.real()) << ','
        << sig10(result.value.imag()) << ',' << result.rounded << ','
        << sig10(result.residual) << '\n';
  } else {
    json doc = {{"method", spec.method},
                {"center", complex_json(contour.center, false)},
                {"radius", contour.radius},
                {"nodes", contour.nodes},
                {"value", complex_json(result.value, false)},
                {"rounded", result.rounded},
                {"residual", result.residual},
                {"trusted", result.trusted()}};
    out << doc.dump(2) << '\n';
  }
  return result.trusted() ? kSuccess : kUntrustedCount;
}

int cmd_sign_map(const RunSpec& spec, std::ostream& out) {
  spec.validate();
  const auto re_axis = linspace(spec.re_min, spec.re_max, static_cast<std::size_t>(spec.grid_nx));
  const auto im_axis = linspace(spec.im_min, spec.im_max, static_cast<std::size_t>(spec.grid_ny));

  // One row per Im grid line; empty optional marks the pole (or an exact zero).
  const auto rows = parallel_map(im_axis.size(), [&](std::size_t iy) {
    std::vector<std::optional<int>> row(re_axis.size());
    for (std::size_t ix = 0; ix < re_axis.size(); ++ix) {
      const Complex s(re_axis[ix], im_axis[iy]);
      if (s == Complex(1.0, 0.0)) continue;
      const Complex value = zeta_reference(s);
      if (value == Complex(0.0, 0.0)) continue;
      row[ix] = csgn(value);
    }
    return row;
  });

  if (spec.format == OutputFormat::Csv) {
    out << "im\\re";
    for (double re : re_axis) out << ',' << sig10(re);
    out << '\n';
    for (std::size_t iy = 0; iy < im_axis.size(); ++iy) {
      out << sig10(im_axis[iy]);
      for (const auto& cell : rows[iy]) {
        if (cell) {
          out << ',' << *cell;
        } else {
          out << ",pole";
        }
      }
      out << '\n';
    }
  } else {
    json cells = json::array();
    for (const auto& row : rows) {
      json line = json::array();
      for (const auto& cell : row) line.push_back(cell ? json(*cell) : json(nullptr));
      cells.push_back(std::move(line));
    }
    out << json{{"re_axis", re_axis}, {"im_axis", im_axis}, {"cells", cells}}.dump(2) << '\n';
  }
  return kSuccess;
}

int cmd_expsum_error(const RunSpec& spec, std::ostream& out) {
  spec.validate();
  const ExpSumTable table = load_table(spec);
  const ComplexGrid grid =
      error_grid(table, spec.re_min, spec.re_max, spec.im_min, spec.im_max,
                 static_cast<std::size_t>(spec.grid_nx), static_cast<std::size_t>(spec.grid_ny));

  if (spec.format == OutputFormat::Csv) {
    out << "part,im\\re";
    for (double re : grid.re_axis) out << ',' << sig10(re);
    out << '\n';
    for (const char* part : {"real", "imag"}) {
      const bool real_part = part[0] == 'r';
      for (std::size_t iy = 0; iy < grid.ny(); ++iy) {
        out << part << ',' << sig10(grid.im_axis[iy]);
        for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
          const auto& cell = grid.at(ix, iy);
          if (cell) {
            out << ',' << sig10(real_part ? cell->real() : cell->imag());
          } else {
            out << ",flagged";
          }
        }
        out << '\n';
      }
    }
  } else {
    json real_rows = json::array();
    json imag_rows = json::array();
    for (std::size_t iy = 0; iy < grid.ny(); ++iy) {
      json re_line = json::array();
      json im_line = json::array();
      for (std::size_t ix = 0; ix < grid.nx(); ++ix) {
        const auto& cell = grid.at(ix, iy);
        re_line.push_back(cell ? json(cell->real()) : json(nullptr));
        im_line.push_back(cell ? json(cell->imag()) : json(nullptr));
      }
      real_rows.push_back(std::move(re_line));
      imag_rows.push_back(std::move(im_line));
    }
    out << json{{"re_axis", grid.re_axis},
                {"im_axis", grid.im_axis},
                {"real", real_rows},
                {"imag", imag_rows}}
               .dump(2)
        << '\n';
  }
  return kSuccess;
}

int cmd_convolution_check(const RunSpec& spec, std::ostream& out) {
  spec.validate();
  const FactoredFunction ff = build_zeta_factored();
  QuadratureConfig quad;
  quad.rel_tol = spec.rel_tol;

  struct Row {
    Complex s;
    Complex convolution;
    Complex direct_cube;
  };
  const auto rows = parallel_map(spec.s_values.size(), [&](std::size_t i) {
    const Complex s = spec.s_values[i];
    const Complex direct = transform(ff.zf, s, quad);
    return Row{s, power_transform(ff.zf, 3, s, quad), direct * direct * direct};
  });

  if (spec.format == OutputFormat::Csv) {
    out << "s_re,s_im,convolution_re,convolution_im,direct_cube_re,direct_cube_im,abs_difference\n";
    for (const Row& r : rows) {
      out << sig10(r.s.real()) << ',' << sig10(r.s.imag()) << ','
          << sig10(r.convolution.real()) << ',' << sig10(r.convolution.imag()) << ','
          << sig10(r.direct_cube.real()) << ',' << sig10(r.direct_cube.imag()) << ','
          << sig10(std::abs(r.convolution - r.direct_cube)) << '\n';
    }
  } else {
    json doc = json::array();
    for (const Row& r : rows) {
      doc.push_back({{"s", complex_json(r.s, false)},
                     {"convolution", complex_json(r.convolution, false)},
                     {"direct_cube", complex_json(r.direct_cube, false)},
                     {"abs_difference", std::abs(r.convolution - r.direct_cube)}});
    }
    out << doc.dump(2) << '\n';
  }
  return kSuccess;
}

int run_command(const RunSpec& spec, std::ostream& out) {
  if (spec.command == "table1") return cmd_table1(spec, out);
  if (spec.command == "count") return cmd_count(spec, out);
  if (spec.command == "sign-map") return cmd_sign_map(spec, out);
  if (spec.command == "expsum-error") return cmd_expsum_error(spec, out);
  if (spec.command == "convolution-check") return cmd_convolution_check(spec, out);
  throw DomainError("unknown command '" + spec.command + "'");
}

int exit_code_for(std::exception_ptr error) {
  try {
    std::rethrow_exception(error);
  } catch (const QuadratureError&) {
    return kQuadratureFailure;
  } catch (const DomainError&) {
    return kDomainError;
  } catch (...) {
    return kDomainError;
  }
}

}  // namespace mellinroot::cli
