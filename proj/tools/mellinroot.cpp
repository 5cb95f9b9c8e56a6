// Command-line front end: reproduces the zeta tables and figure grids and
// counts roots minus poles on user-supplied circles.

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "mellinroot/commands.hpp"

namespace {

using mellinroot::cli::OutputFormat;
using mellinroot::cli::RunSpec;

void add_common(CLI::App& sub, RunSpec& spec) {
  static const std::map<std::string, OutputFormat> kFormats = {{"csv", OutputFormat::Csv},
                                                               {"json", OutputFormat::Json}};
  sub.add_option("--format", spec.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
      ->capture_default_str();
  sub.add_option("--out", spec.out, "Write output to PATH instead of stdout");
}

void add_contour(CLI::App& sub, RunSpec& spec) {
  sub.add_option("--center-re", spec.center_re, "Contour center, real part")->capture_default_str();
  sub.add_option("--center-im", spec.center_im, "Contour center, imaginary part")->capture_default_str();
  sub.add_option("--radius", spec.radius, "Contour radius")->capture_default_str();
  sub.add_option("--nodes", spec.nodes, "Angular nodes (table1: angular steps)")->capture_default_str();
}

void add_pipeline(CLI::App& sub, RunSpec& spec) {
  sub.add_option("--order-n", spec.order_n, "Series order n of the truncated exponential")
      ->capture_default_str();
  sub.add_option("--preset", spec.preset, "Coefficient preset: appendixC or table2")
      ->check(CLI::IsMember({"appendixC", "table2"}))
      ->capture_default_str();
  sub.add_option("--coeff-file", spec.coeff_file, "Coefficient file, one 'alpha c' pair per line")
      ->check(CLI::ExistingFile);
  sub.add_option("--csgn-eps", spec.csgn_eps, "Use tanh(f/eps) instead of the exact csgn(f)");
  sub.add_option("--rel-tol", spec.rel_tol, "Relative tolerance of the Mellin quadratures")
      ->capture_default_str();
}

void add_grid(CLI::App& sub, RunSpec& spec) {
  sub.add_option("--re-min", spec.re_min)->capture_default_str();
  sub.add_option("--re-max", spec.re_max)->capture_default_str();
  sub.add_option("--im-min", spec.im_min)->capture_default_str();
  sub.add_option("--im-max", spec.im_max)->capture_default_str();
  sub.add_option("--grid-nx", spec.grid_nx, "Samples along Re")->capture_default_str();
  sub.add_option("--grid-ny", spec.grid_ny, "Samples along Im")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root-minus-pole counting for functions given as Mellin transforms"};
  app.set_config("--config", "", "TOML/INI file with option defaults");
  app.require_subcommand(1);

  std::map<std::string, RunSpec> specs;
  for (const char* name : {"table1", "count", "sign-map", "expsum-error", "convolution-check"}) {
    specs.emplace(name, RunSpec::defaults_for(name));
  }

  auto* table1 = app.add_subcommand("table1", "Integrand stages on the zeta test circle");
  add_contour(*table1, specs["table1"]);
  add_pipeline(*table1, specs["table1"]);
  add_common(*table1, specs["table1"]);

  auto* count = app.add_subcommand("count", "Count roots minus poles of zeta inside a circle");
  add_contour(*count, specs["count"]);
  add_pipeline(*count, specs["count"]);
  count->add_option("--method", specs["count"].method, "direct or pipeline")
      ->check(CLI::IsMember({"direct", "pipeline"}))
      ->capture_default_str();
  add_common(*count, specs["count"]);

  auto* sign_map = app.add_subcommand("sign-map", "Sign of Re(zeta) over a rectangle");
  add_grid(*sign_map, specs["sign-map"]);
  add_common(*sign_map, specs["sign-map"]);

  auto* expsum_error = app.add_subcommand("expsum-error",
                                          "Error of the exponential-sum reciprocal over a rectangle");
  add_grid(*expsum_error, specs["expsum-error"]);
  expsum_error->add_option("--preset", specs["expsum-error"].preset)
      ->check(CLI::IsMember({"appendixC", "table2"}))
      ->capture_default_str();
  expsum_error->add_option("--coeff-file", specs["expsum-error"].coeff_file)
      ->check(CLI::ExistingFile);
  add_common(*expsum_error, specs["expsum-error"]);

  auto* conv = app.add_subcommand("convolution-check",
                                  "Z^3 by triple Mellin convolution vs the cube of Z");
  std::optional<double> s_re;
  std::optional<double> s_im;
  conv->add_option("--s-re", s_re, "Evaluate at this Re(s) instead of the defaults");
  conv->add_option("--s-im", s_im, "Imaginary part used with --s-re");
  conv->add_option("--rel-tol", specs["convolution-check"].rel_tol)->capture_default_str();
  add_common(*conv, specs["convolution-check"]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests keep CLI11's exit code 0; bad input is a domain error.
    const int code = app.exit(e);
    return code == 0 ? 0 : mellinroot::cli::kDomainError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  RunSpec spec = specs[name];
  if (name == "convolution-check" && s_re) {
    spec.s_values = {{*s_re, s_im.value_or(0.0)}};
  }

  try {
    if (spec.out.empty()) return mellinroot::cli::run_command(spec, std::cout);
    std::ofstream file(spec.out);
    if (!file) {
      std::cerr << "error: cannot open " << spec.out << '\n';
      return mellinroot::cli::kDomainError;
    }
    return mellinroot::cli::run_command(spec, file);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return mellinroot::cli::exit_code_for(std::current_exception());
  }
}
