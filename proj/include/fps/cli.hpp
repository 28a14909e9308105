// Batch command-line driver.
#pragma once

#include <iostream>
#include <string>

namespace fps {

enum class Subcommand {
  ComposeBinomial,
  ComposeBinomialMulti,
  Invert,
  DetHessenberg,
  MonomialShift,
  OdeDemo,
};

enum class OutputFormat { Json, Csv };

struct CliConfig {
  Subcommand subcommand = Subcommand::ComposeBinomial;
  std::string input_path;
  std::string output_path;  // empty = stdout

  double a_re = 0.0;  // exponent (compose-binomial, -multi, monomial-shift)
  double a_im = 0.0;
  double b0_re = 0.0;  // monomial-shift
  double b0_im = 0.0;
  int nbar = 2;
  int order = -1;  // compose-binomial: retruncate input; monomial-shift: N
  bool explicit_path = false;

  int degree = 20;  // ode-demo
  double step = 0.01;
  double x_max = 1.0;
  std::string coeffs_output;  // ode-demo CSV targets; empty = stdout
  std::string grid_output;

  OutputFormat format = OutputFormat::Json;
  int digits = 16;    // significant digits for series CSV output
  bool force = false; // lift the q/N and explicit-order cost caps
};

/// Executes one subcommand. Exit status 0 on success, 2 when the request
/// is mathematically impossible (composition existence, invertibility),
/// 1 for I/O, schema, or usage errors. Results destined for stdout are
/// written to `out`; diagnostics go to `err`.
int run(const CliConfig& config, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace fps
