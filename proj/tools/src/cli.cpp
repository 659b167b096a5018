#include "cuspbif_cli/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "cuspbif/cusp_pipeline.hpp"
#include "cuspbif/errors.hpp"
#include "cuspbif/exprparse.hpp"
#include "cuspbif/report_io.hpp"

namespace cuspbif::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Poly parse_component(const std::string& text, const char* name) {
  try {
    return parse_poly(text);
  } catch (const ParseError& e) {
    throw ParseError(std::string("in ") + name + " \"" + text + "\": " + e.what(), e.position());
  }
}

int exit_code_for(ErrorKind kind) {
  if (is_hypothesis_failure(kind)) return kExitHypothesis;
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidArgument:
      return kExitUsage;
    default:
      return kExitInternal;
  }
}

}  // namespace

InputFile parse_input_file(std::string_view contents) {
  InputFile file;
  std::size_t line_no = 0;
  while (!contents.empty()) {
    ++line_no;
    const auto nl = contents.find('\n');
    std::string_view line = trim(contents.substr(0, nl));
    contents = nl == std::string_view::npos ? std::string_view{} : contents.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    const std::string where = "line " + std::to_string(line_no);
    if (eq == std::string_view::npos) throw std::invalid_argument(where + ": expected key=value");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto seen = [&](const auto& slot) {
      if (slot) throw std::invalid_argument(where + ": duplicate key '" + std::string(key) + "'");
    };
    if (key == "f1") {
      seen(file.f1);
      file.f1 = std::string(value);
    } else if (key == "f2") {
      seen(file.f2);
      file.f2 = std::string(value);
    } else if (key == "seed") {
      seen(file.seed);
      std::uint64_t seed = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
      if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw std::invalid_argument(where + ": seed must be a non-negative integer");
      }
      file.seed = seed;
    } else {
      throw std::invalid_argument(where + ": unknown key '" + std::string(key) + "'");
    }
  }
  return file;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts cusps bifurcating from the origin in a one-parameter family of plane map germs."};
  app.require_subcommand(1);

  RunConfig config;
  std::string input_path;
  bool json = false;
  CLI::App* analyze = app.add_subcommand("analyze", "Analyze the family f(t, x1, x2) = (f1, f2)");
  CLI::Option* f1_opt = analyze->add_option("--f1", config.f1_text, "First component, e.g. \"x1^3+x2^2+t*x1\"");
  CLI::Option* f2_opt = analyze->add_option("--f2", config.f2_text, "Second component");
  CLI::Option* seed_opt = analyze->add_option("--seed", config.seed, "Seed for random combinations")
                              ->default_val(0);
  analyze->add_option("--input", input_path, "key=value file with f1, f2 and seed")->check(CLI::ExistingFile);
  analyze->add_flag("--json", json, "Print the report as JSON");
  analyze->add_option("--xi-cap", config.xi_cap, "Upper bound in the search for xi")
      ->default_val(64)
      ->check(CLI::PositiveNumber);
  analyze->add_option("--attempts", config.matrix_attempts, "Maximal number of combination matrices")
      ->default_val(32)
      ->check(CLI::PositiveNumber);
  analyze->add_flag("-v,--verbose", config.verbosity, "Print stage progress to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  config.output_format = json ? OutputFormat::Json : OutputFormat::Text;

  if (!input_path.empty()) {
    std::ifstream in(input_path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      InputFile file = parse_input_file(buf.str());
      if (file.f1 && f1_opt->count() == 0) config.f1_text = *file.f1;
      if (file.f2 && f2_opt->count() == 0) config.f2_text = *file.f2;
      if (file.seed && seed_opt->count() == 0) config.seed = *file.seed;
    } catch (const std::invalid_argument& e) {
      err << "error: " << input_path << ": " << e.what() << '\n';
      return kExitUsage;
    }
  }
  if (config.f1_text.empty() || config.f2_text.empty()) {
    err << "error: both f1 and f2 are required (--f1/--f2 or --input)\n";
    return kExitUsage;
  }

  try {
    Poly f1 = parse_component(config.f1_text, "f1");
    Poly f2 = parse_component(config.f2_text, "f2");
    if (config.verbosity > 0) err << "running analysis (seed " << config.seed << ")\n";
    BifurcationReport report =
        run(f1, f2, RunOptions{.seed = config.seed, .xi_cap = config.xi_cap, .matrix_attempts = config.matrix_attempts});
    if (config.output_format == OutputFormat::Json) {
      out << report_to_json(report) << '\n';
    } else {
      out << report_to_text(report);
    }
    if (!report.parity_ok) err << "warning: cusp counts violate the parity bound by dim Q\n";
    if (report.symmetry_detected && !report.symmetry_ok) {
      err << "warning: cusp counts for t and -t differ although f(-t, -x) = +-f(t, x)\n";
    }
    return kExitOk;
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    const char* label = code == kExitHypothesis ? "hypothesis failed" : code == kExitUsage ? "error" : "internal error";
    err << label << " [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return code;
  }
}

}  // namespace cuspbif::cli
