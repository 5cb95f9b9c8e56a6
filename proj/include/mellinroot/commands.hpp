#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mellinroot/argument_principle.hpp"

namespace mellinroot::cli {

enum class OutputFormat { Csv, Json };

enum ExitCode : int {
  kSuccess = 0,
  kUntrustedCount = 1,
  kDomainError = 2,
  kQuadratureFailure = 3,
};

/// Everything a command needs. Defaults reproduce the published zeta setup.
struct RunSpec {
  std::string command;
  double center_re = 0.57;
  double center_im = 1.57;
  double radius = 0.1;
  int nodes = 128;
  std::string method = "direct";
  int order_n = 1;
  std::string preset = "appendixC";
  std::string coeff_file;
  std::optional<double> csgn_eps;
  double rel_tol = 1e-8;
  OutputFormat format = OutputFormat::Csv;
  std::string out;
  double re_min = 0.05;
  double re_max = 5.0;
  double im_min = -5.0;
  double im_max = 5.0;
  int grid_nx = 41;
  int grid_ny = 41;
  std::vector<std::complex<double>> s_values;

  /// Per-command defaults (table1 uses 8 angular steps, sign-map a strip
  /// of the critical region, ...).
  static RunSpec defaults_for(const std::string& command);

  void validate() const;
  CircularContour contour() const;
  PipelineConfig pipeline() const;
};

/// Each command writes to `out` and returns its exit code. DomainError and
/// QuadratureError escaping a command map to exit codes via exit_code_for().
int cmd_table1(const RunSpec& spec, std::ostream& out);
int cmd_count(const RunSpec& spec, std::ostream& out);
int cmd_sign_map(const RunSpec& spec, std::ostream& out);
int cmd_expsum_error(const RunSpec& spec, std::ostream& out);
int cmd_convolution_check(const RunSpec& spec, std::ostream& out);

int run_command(const RunSpec& spec, std::ostream& out);

/// Maps the exception currently being handled to an exit code.
int exit_code_for(std::exception_ptr error);

}  // namespace mellinroot::cli
