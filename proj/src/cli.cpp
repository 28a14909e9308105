#include "fps/cli.hpp"

#include <cstdio>
#include <sstream>

#include "fps/applications.hpp"
#include "fps/io.hpp"
#include "fps/miller.hpp"
#include "fps/multivar.hpp"
#include "fps/trudi.hpp"

namespace fps {

namespace {

constexpr int kExplicitOrderCap = 20;
constexpr int kMultiVarsCap = 4;
constexpr int kMultiOrderCap = 16;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const CliConfig& cfg, const std::string& content,
          std::ostream& out) {
  if (cfg.output_path.empty()) {
    out << content;
    if (!content.empty() && content.back() != '\n') out << '\n';
  } else {
    write_text_file(cfg.output_path, content);
  }
}

std::string fixed(double value, int decimals) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return buf;
}

void run_compose_binomial(const CliConfig& cfg, std::ostream& out) {
  if (cfg.input_path.empty()) throw UsageError("--input is required");
  Series f = series_from_json(read_text_file(cfg.input_path));
  if (cfg.order >= 0) f = f.resized(cfg.order);
  const BinomialExponent a(Complex(cfg.a_re, cfg.a_im));
  Series result = [&] {
    if (!cfg.explicit_path) return miller_recursive(f, a);
    if (f.order() > kExplicitOrderCap && !cfg.force) {
      throw UsageError(
          "--explicit sums 2^(n-1) products per coefficient and is capped "
          "at order " +
          std::to_string(kExplicitOrderCap) + "; pass --force to override");
    }
    return miller_explicit(f, a, cfg.force ? f.order() : kExplicitOrderCap);
  }();
  emit(cfg,
       cfg.format == OutputFormat::Json ? series_to_json(result)
                                        : series_to_csv(result, cfg.digits),
       out);
}

void run_compose_binomial_multi(const CliConfig& cfg, std::ostream& out) {
  if (cfg.input_path.empty()) throw UsageError("--input is required");
  const MultiSeries f = multiseries_from_json(read_text_file(cfg.input_path));
  if (!cfg.force && (f.vars() > kMultiVarsCap || f.order() > kMultiOrderCap)) {
    throw UsageError("input exceeds the default caps q <= " +
                     std::to_string(kMultiVarsCap) + ", order <= " +
                     std::to_string(kMultiOrderCap) +
                     "; pass --force to override");
  }
  const BinomialExponent r(Complex(cfg.a_re, cfg.a_im));
  const MultiSeries result = multivar_miller_recursive(f, r);
  emit(cfg,
       cfg.format == OutputFormat::Json
           ? multiseries_to_json(result)
           : multiseries_to_csv(result, cfg.digits),
       out);
}

void run_invert(const CliConfig& cfg, std::ostream& out) {
  if (cfg.input_path.empty()) throw UsageError("--input is required");
  const Series f = series_from_json(read_text_file(cfg.input_path));
  const Series result =
      cfg.explicit_path ? invert_series_explicit(f) : invert_series_recursive(f);
  emit(cfg,
       cfg.format == OutputFormat::Json ? series_to_json(result)
                                        : series_to_csv(result, cfg.digits),
       out);
}

void run_det_hessenberg(const CliConfig& cfg, std::ostream& out) {
  if (cfg.input_path.empty()) throw UsageError("--input is required");
  const HessenbergMatrix A =
      hessenberg_from_json(read_text_file(cfg.input_path));
  const TrudiEvaluation ev = trudi_det_terms(A);
  std::ostringstream body;
  if (cfg.format == OutputFormat::Json) {
    body << "{\n  \"n\": " << A.size() << ",\n  \"det\": ["
         << format_significant(ev.value.real(), 17) << ", "
         << format_significant(ev.value.imag(), 17) << "],\n  \"terms\": "
         << ev.terms << "\n}";
  } else {
    body << "re,im,terms\n"
         << format_significant(ev.value.real(), cfg.digits) << ','
         << format_significant(ev.value.imag(), cfg.digits) << ',' << ev.terms
         << '\n';
  }
  emit(cfg, body.str(), out);
}

void run_monomial_shift(const CliConfig& cfg, std::ostream& out) {
  if (cfg.order < 0) throw UsageError("--order is required");
  const Series result = monomial_shift_coeffs(
      Complex(cfg.b0_re, cfg.b0_im), cfg.nbar, Complex(cfg.a_re, cfg.a_im),
      cfg.order);
  emit(cfg,
       cfg.format == OutputFormat::Json ? series_to_json(result)
                                        : series_to_csv(result, cfg.digits),
       out);
}

// Table layouts: coefficients with 16 decimals, solution values with 14,
// defects with 16, so rows can be diffed against transcribed references.
std::string ode_coeffs_csv(const OdeSolution& s) {
  std::ostringstream body;
  body << "n,c_n,a_n\n";
  for (int n = 0; n <= s.degree; ++n) {
    body << n << ',' << fixed(s.c_coeffs[n].real(), 16) << ','
         << fixed(s.a_coeffs[n].real(), 16) << '\n';
  }
  return body.str();
}

std::string ode_grid_csv(const OdeSolution& s) {
  std::ostringstream body;
  body << "x,y,difference\n";
  for (const OdeGridRow& row : s.grid) {
    body << format_significant(row.x, 16) << ',' << fixed(row.y, 14) << ','
         << fixed(row.residual, 16) << '\n';
  }
  return body.str();
}

void run_ode_demo(const CliConfig& cfg, std::ostream& out) {
  const OdeSolution s = ode_epsilon_solution(cfg.degree, cfg.step, cfg.x_max);
  if (cfg.format == OutputFormat::Json) {
    std::ostringstream body;
    body << "{\n  \"degree\": " << s.degree << ",\n  \"c\": [";
    for (int n = 0; n <= s.degree; ++n) {
      body << (n ? ", " : "") << format_significant(s.c_coeffs[n].real(), 17);
    }
    body << "],\n  \"a\": [";
    for (int n = 0; n <= s.degree; ++n) {
      body << (n ? ", " : "") << format_significant(s.a_coeffs[n].real(), 17);
    }
    body << "],\n  \"grid\": [";
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
      body << (i ? ", " : "") << "{\"x\": " << format_significant(s.grid[i].x, 17)
           << ", \"y\": " << format_significant(s.grid[i].y, 17)
           << ", \"difference\": "
           << format_significant(s.grid[i].residual, 17) << "}";
    }
    body << "]\n}";
    emit(cfg, body.str(), out);
    return;
  }
  const std::string coeffs = ode_coeffs_csv(s);
  const std::string grid = ode_grid_csv(s);
  if (cfg.coeffs_output.empty()) {
    out << coeffs;
  } else {
    write_text_file(cfg.coeffs_output, coeffs);
  }
  if (cfg.grid_output.empty()) {
    if (cfg.coeffs_output.empty()) out << '\n';
    out << grid;
  } else {
    write_text_file(cfg.grid_output, grid);
  }
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::ComposeBinomial:
        run_compose_binomial(config, out);
        break;
      case Subcommand::ComposeBinomialMulti:
        run_compose_binomial_multi(config, out);
        break;
      case Subcommand::Invert:
        run_invert(config, out);
        break;
      case Subcommand::DetHessenberg:
        run_det_hessenberg(config, out);
        break;
      case Subcommand::MonomialShift:
        run_monomial_shift(config, out);
        break;
      case Subcommand::OdeDemo:
        run_ode_demo(config, out);
        break;
    }
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace fps
