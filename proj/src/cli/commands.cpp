#include "owa/cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <string_view>

#include "owa/elliptical.hpp"
#include "owa/errors.hpp"

namespace owa::cli {

using nlohmann::json;

namespace {

constexpr double kBandLow = 0.4;
constexpr double kBandHigh = 0.6;

json rounded(double value) { return std::stod(format_number(value)); }

json rounded(const WeightVector& w) {
  json out = json::array();
  for (double v : w) out.push_back(rounded(v));
  return out;
}

json measures_json(const Measures& m) {
  return {{"orness", rounded(m.orness)},
          {"andness", rounded(m.andness)},
          {"dispersion", rounded(m.dispersion)}};
}

std::string joined(const WeightVector& w, char separator) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += separator;
    out += format_number(w[i]);
  }
  return out;
}

void write_preamble(std::ostream& out, const json& scheme) {
  out << "# " << kToolName << ' ' << kToolVersion << '\n';
  if (!scheme.is_null()) out << "# scheme " << scheme.dump() << '\n';
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Top 53 bits of a 64-bit draw, uniform on [0,1).
double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "records") return OutputFormat::records;
  throw ValidationError("unknown output format '" + name + "' (expected csv or records)");
}

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const ValidationError*>(&error)) return 2;
  if (dynamic_cast<const DimensionError*>(&error)) return 3;
  if (dynamic_cast<const ConvergenceError*>(&error)) return 4;
  return 1;
}

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  std::string text = buffer;
  if (text == "-0") text = "0";
  return text;
}

Measures measures_of(const WeightVector& w) { return {orness(w), andness(w), dispersion(w)}; }

WeightsReport cmd_weights(const SchemeSpec& scheme, std::optional<std::size_t> n) {
  if (!is_position_based(scheme.kind)) {
    throw ValidationError("elliptical-argument scheme requires data: use the aggregate command");
  }
  WeightVector w = scheme_weights(scheme, resolve_dimension(scheme, n));
  const Measures m = measures_of(w);
  return {std::move(w), m};
}

RunReport cmd_aggregate(const SchemeSpec& scheme, const std::vector<std::vector<double>>& rows) {
  RunReport report{scheme.source, kToolVersion, {}};
  if (rows.empty()) return report;

  std::optional<WeightVector> shared;
  if (is_position_based(scheme.kind)) {
    const std::size_t n = rows.front().size();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != n) {
        throw DimensionError("row " + std::to_string(r + 1) + " has " +
                             std::to_string(rows[r].size()) + " values, expected " +
                             std::to_string(n));
      }
    }
    shared = scheme_weights(scheme, n);
  }

  for (std::size_t r = 0; r < rows.size(); ++r) {
    const ArgumentVector args(rows[r]);
    if (shared) {
      report.rows.push_back(
          {r + 1, owa_aggregate(args, *shared), *shared, measures_of(*shared)});
    } else {
      WeightVector w = argument_weights(*scheme.generator, args);
      const double value = weighted_average(args, w);
      const Measures m = measures_of(w);
      report.rows.push_back({r + 1, value, std::move(w), m});
    }
  }
  return report;
}

std::vector<RowReport> cmd_orness(const std::vector<std::vector<double>>& rows) {
  std::vector<RowReport> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    try {
      WeightVector w(rows[r]);
      const Measures m = measures_of(w);
      out.push_back({r + 1, 0.0, std::move(w), m});
    } catch (const ValidationError& e) {
      throw ValidationError("row " + std::to_string(r + 1) + ": " + e.what());
    }
  }
  return out;
}

std::vector<QuantifierSample> cmd_quantifier(const SchemeSpec& scheme, std::size_t grid) {
  if (!scheme.quantifier) {
    throw ValidationError("a " + to_string(scheme.kind) + " scheme has no quantifier to tabulate");
  }
  if (grid < 1) throw ValidationError("--grid must be at least 1");
  std::vector<QuantifierSample> table;
  table.reserve(grid + 1);
  const double nd = static_cast<double>(grid);
  for (std::size_t k = 0; k <= grid; ++k) {
    const double x = static_cast<double>(k) / nd;
    table.push_back({x, (*scheme.quantifier)(x)});
  }
  return table;
}

std::vector<BiasDemoRow> cmd_demo_bias(const BiasDemoConfig& config) {
  if (config.n < 5) throw ValidationError("demo-bias needs n >= 5");
  if (config.trials < 1) throw ValidationError("demo-bias needs at least one trial");
  if (!std::isfinite(config.magnitude)) throw ValidationError("magnitude must be finite");

  const std::size_t n = config.n;
  const double width = kBandHigh - kBandLow;
  const WeightVector mean_weights = WeightVector::uniform(n);
  const WeightVector normal_weights = position_weights(DensityGenerator::normal(), n);
  const WeightVector cauchy_weights = position_weights(DensityGenerator::cauchy(), n);
  const DensityGenerator normal = DensityGenerator::normal();

  std::mt19937_64 rng(config.seed);
  double dev_mean = 0.0;
  double dev_normal = 0.0;
  double dev_cauchy = 0.0;
  double dev_argument = 0.0;
  std::vector<double> panel(n);
  for (std::size_t t = 0; t < config.trials; ++t) {
    double clean_total = 0.0;
    for (double& score : panel) {
      score = kBandLow + width * unit_uniform(rng);
      clean_total += score;
    }
    const double clean_mean = clean_total / static_cast<double>(n);
    const std::size_t biased = static_cast<std::size_t>(rng() % n);
    panel[biased] += config.magnitude * width;

    const ArgumentVector args(panel);
    dev_mean += std::abs(owa_aggregate(args, mean_weights) - clean_mean);
    dev_normal += std::abs(owa_aggregate(args, normal_weights) - clean_mean);
    dev_cauchy += std::abs(owa_aggregate(args, cauchy_weights) - clean_mean);
    dev_argument +=
        std::abs(weighted_average(args, argument_weights(normal, args)) - clean_mean);
  }
  const double trials = static_cast<double>(config.trials);
  return {
      {"arithmetic-mean", dev_mean / trials},
      {"normal-position-owa", dev_normal / trials},
      {"cauchy-position-owa", dev_cauchy / trials},
      {"normal-argument-weights", dev_argument / trials},
  };
}

std::vector<std::vector<double>> read_rows(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string_view content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    std::vector<double> row;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = content.find(',', start);
      const std::string_view field =
          trim(content.substr(start, comma == std::string_view::npos ? content.npos
                                                                      : comma - start));
      double value = 0.0;
      const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc{} || end != field.data() + field.size() ||
          !std::isfinite(value)) {
        throw ValidationError("input line " + std::to_string(line_number) + ": '" +
                              std::string(field) + "' is not a number");
      }
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_weights(std::ostream& out, const SchemeSpec& scheme, const WeightsReport& report,
                   OutputFormat format) {
  if (format == OutputFormat::records) {
    json doc = {{"tool", kToolName},
                {"version", kToolVersion},
                {"scheme", scheme.source},
                {"n", report.weights.size()},
                {"weights", rounded(report.weights)}};
    doc.update(measures_json(report.measures));
    out << doc.dump() << '\n';
    return;
  }
  write_preamble(out, scheme.source);
  out << "quantity,index,value\n";
  for (std::size_t i = 0; i < report.weights.size(); ++i) {
    out << "weight," << i + 1 << ',' << format_number(report.weights[i]) << '\n';
  }
  out << "orness,," << format_number(report.measures.orness) << '\n';
  out << "andness,," << format_number(report.measures.andness) << '\n';
  out << "dispersion,," << format_number(report.measures.dispersion) << '\n';
}

void write_run_report(std::ostream& out, const RunReport& report, OutputFormat format) {
  if (format == OutputFormat::records) {
    json rows = json::array();
    for (const RowReport& row : report.rows) {
      json record = {{"row", row.row},
                     {"aggregate", rounded(row.aggregate)},
                     {"weights", rounded(row.weights)}};
      record.update(measures_json(row.measures));
      rows.push_back(std::move(record));
    }
    const json doc = {
        {"tool", kToolName}, {"version", report.version}, {"scheme", report.scheme}, {"rows", rows}};
    out << doc.dump() << '\n';
    return;
  }
  write_preamble(out, report.scheme);
  out << "row,aggregate,orness,andness,dispersion,weights\n";
  for (const RowReport& row : report.rows) {
    out << row.row << ',' << format_number(row.aggregate) << ','
        << format_number(row.measures.orness) << ',' << format_number(row.measures.andness)
        << ',' << format_number(row.measures.dispersion) << ',' << joined(row.weights, ';')
        << '\n';
  }
}

void write_measures(std::ostream& out, const std::vector<RowReport>& rows, OutputFormat format) {
  if (format == OutputFormat::records) {
    json list = json::array();
    for (const RowReport& row : rows) {
      json record = {{"row", row.row}, {"n", row.weights.size()}};
      record.update(measures_json(row.measures));
      list.push_back(std::move(record));
    }
    out << json{{"tool", kToolName}, {"version", kToolVersion}, {"rows", list}}.dump() << '\n';
    return;
  }
  write_preamble(out, json());
  out << "row,n,orness,andness,dispersion\n";
  for (const RowReport& row : rows) {
    out << row.row << ',' << row.weights.size() << ',' << format_number(row.measures.orness)
        << ',' << format_number(row.measures.andness) << ','
        << format_number(row.measures.dispersion) << '\n';
  }
}

void write_quantifier_table(std::ostream& out, const SchemeSpec& scheme,
                            const std::vector<QuantifierSample>& table, OutputFormat format) {
  if (format == OutputFormat::records) {
    json points = json::array();
    for (const QuantifierSample& s : table) {
      points.push_back({{"x", rounded(s.x)}, {"q", rounded(s.q)}});
    }
    out << json{{"tool", kToolName},
                {"version", kToolVersion},
                {"scheme", scheme.source},
                {"points", points}}
               .dump()
        << '\n';
    return;
  }
  write_preamble(out, scheme.source);
  out << "x,q\n";
  for (const QuantifierSample& s : table) {
    out << format_number(s.x) << ',' << format_number(s.q) << '\n';
  }
}

void write_bias_demo(std::ostream& out, const BiasDemoConfig& config,
                     const std::vector<BiasDemoRow>& rows, OutputFormat format) {
  const json parameters = {{"n", config.n},
                           {"magnitude", rounded(config.magnitude)},
                           {"trials", config.trials},
                           {"seed", config.seed},
                           {"band", {kBandLow, kBandHigh}},
                           {"rng", "mt19937_64"}};
  if (format == OutputFormat::records) {
    json list = json::array();
    for (const BiasDemoRow& row : rows) {
      list.push_back(
          {{"scheme", row.scheme}, {"mean_abs_deviation", rounded(row.mean_abs_deviation)}});
    }
    out << json{{"tool", kToolName},
                {"version", kToolVersion},
                {"parameters", parameters},
                {"results", list}}
               .dump()
        << '\n';
    return;
  }
  out << "# " << kToolName << ' ' << kToolVersion << '\n';
  out << "# demo-bias " << parameters.dump() << '\n';
  out << "scheme,mean_abs_deviation\n";
  for (const BiasDemoRow& row : rows) {
    out << row.scheme << ',' << format_number(row.mean_abs_deviation) << '\n';
  }
}

}  // namespace owa::cli
