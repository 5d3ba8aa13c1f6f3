#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "owa/cli/commands.hpp"
#include "owa/cli/scheme.hpp"
#include "owa/errors.hpp"

namespace {

using namespace owa::cli;

struct Options {
  std::string scheme;
  std::optional<std::size_t> n;
  std::size_t panel = 9;
  std::string input;
  std::string output;
  std::string format = "csv";
  std::size_t grid = 100;
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  double magnitude = 10.0;
};

std::vector<std::vector<double>> load_rows(const std::string& path) {
  if (path.empty() || path == "-") return read_rows(std::cin);
  std::ifstream in(path);
  if (!in) throw owa::ValidationError("cannot open input file " + path);
  return read_rows(in);
}

template <class Write>
void emit(const std::string& path, Write&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw owa::ValidationError("cannot open output file " + path);
  write(out);
}

SchemeSpec require_scheme(const Options& opt) {
  if (opt.scheme.empty()) throw owa::ValidationError("--scheme is required");
  return load_scheme(opt.scheme);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered weighted averaging: weights, aggregation and measures"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", opt.output, "Output file (default stdout)");
    sub->add_option("--format", opt.format, "csv or records")
        ->check(CLI::IsMember({"csv", "records"}));
  };

  auto* weights = app.add_subcommand("weights", "Weight vector and its measures for a scheme");
  weights->add_option("--scheme", opt.scheme, "Scheme file")->required();
  weights->add_option("--n", opt.n, "Dimension");
  add_common(weights);

  auto* aggregate = app.add_subcommand("aggregate", "Aggregate each row of an input file");
  aggregate->add_option("--scheme", opt.scheme, "Scheme file")->required();
  aggregate->add_option("--input", opt.input, "Comma-separated rows (default stdin)");
  add_common(aggregate);

  auto* orness_cmd =
      app.add_subcommand("orness", "Orness, andness and dispersion of explicit weight vectors");
  orness_cmd->add_option("--input", opt.input, "Weight vectors, one per row");
  orness_cmd->add_option("--scheme", opt.scheme, "Scheme file (instead of --input)");
  orness_cmd->add_option("--n", opt.n, "Dimension when using --scheme");
  add_common(orness_cmd);

  auto* quantifier = app.add_subcommand("quantifier", "Tabulate Q(x) on a uniform grid");
  quantifier->add_option("--scheme", opt.scheme, "Scheme file")->required();
  quantifier->add_option("--grid", opt.grid, "Number of grid intervals")->default_val(100);
  add_common(quantifier);

  auto* demo = app.add_subcommand("demo-bias", "Outlier robustness of centered weights");
  demo->add_option("--n", opt.panel, "Panel size")->default_val(9);
  demo->add_option("--magnitude", opt.magnitude, "Outlier shift in band widths")->default_val(10);
  demo->add_option("--trials", opt.trials, "Number of panels")->default_val(1000);
  demo->add_option("--seed", opt.seed, "Generator seed")->default_val(42);
  add_common(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const OutputFormat format = parse_format(opt.format);
    if (weights->parsed()) {
      const SchemeSpec scheme = require_scheme(opt);
      const WeightsReport report = cmd_weights(scheme, opt.n);
      emit(opt.output, [&](std::ostream& out) { write_weights(out, scheme, report, format); });
    } else if (aggregate->parsed()) {
      const SchemeSpec scheme = require_scheme(opt);
      const RunReport report = cmd_aggregate(scheme, load_rows(opt.input));
      emit(opt.output, [&](std::ostream& out) { write_run_report(out, report, format); });
    } else if (orness_cmd->parsed()) {
      std::vector<RowReport> rows;
      if (!opt.input.empty()) {
        rows = cmd_orness(load_rows(opt.input));
      } else if (!opt.scheme.empty()) {
        const WeightsReport report = cmd_weights(require_scheme(opt), opt.n);
        rows.push_back({1, 0.0, report.weights, report.measures});
      } else {
        throw owa::ValidationError("orness needs --input or --scheme");
      }
      emit(opt.output, [&](std::ostream& out) { write_measures(out, rows, format); });
    } else if (quantifier->parsed()) {
      const SchemeSpec scheme = require_scheme(opt);
      const auto table = cmd_quantifier(scheme, opt.grid);
      emit(opt.output,
           [&](std::ostream& out) { write_quantifier_table(out, scheme, table, format); });
    } else if (demo->parsed()) {
      BiasDemoConfig config;
      config.n = opt.panel;
      config.magnitude = opt.magnitude;
      config.trials = opt.trials;
      config.seed = opt.seed;
      const auto rows = cmd_demo_bias(config);
      emit(opt.output, [&](std::ostream& out) { write_bias_demo(out, config, rows, format); });
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return 0;
}
