#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "owa/cli/scheme.hpp"
#include "owa/core.hpp"

namespace owa::cli {

inline constexpr const char* kToolName = "owa";
inline constexpr const char* kToolVersion = "1.0.0";

enum class OutputFormat { csv, records };

OutputFormat parse_format(const std::string& name);

/// Exit status for an exception escaping a command: 2 validation,
/// 3 dimension, 4 convergence, 1 anything else.
int exit_code_for(const std::exception& error);

/// 12 significant digits, the precision of every number the tool prints.
std::string format_number(double value);

struct Measures {
  double orness;
  double andness;
  double dispersion;
};

Measures measures_of(const WeightVector& w);

struct WeightsReport {
  WeightVector weights;
  Measures measures;
};

WeightsReport cmd_weights(const SchemeSpec& scheme, std::optional<std::size_t> n);

struct RowReport {
  std::size_t row;  // 1-based
  double aggregate;
  WeightVector weights;
  Measures measures;
};

struct RunReport {
  nlohmann::json scheme;
  std::string version;
  std::vector<RowReport> rows;
};

/// Aggregates each row. Position-based schemes apply one weight vector to
/// all rows (ragged rows are a DimensionError naming the row); the
/// elliptical-argument scheme computes WAA weights from each row's values.
RunReport cmd_aggregate(const SchemeSpec& scheme, const std::vector<std::vector<double>>& rows);

/// Measures of explicit weight vectors, one per row.
std::vector<RowReport> cmd_orness(const std::vector<std::vector<double>>& rows);

struct QuantifierSample {
  double x;
  double q;
};

/// Q(k/grid) for k = 0..grid; the scheme must carry a quantifier.
std::vector<QuantifierSample> cmd_quantifier(const SchemeSpec& scheme, std::size_t grid);

struct BiasDemoConfig {
  std::size_t n = 9;
  double magnitude = 10.0;  // in band widths
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
};

struct BiasDemoRow {
  std::string scheme;
  double mean_abs_deviation;
};

/// Panels of n scores drawn uniformly from [0.4, 0.6]; one randomly chosen
/// panelist is shifted up by magnitude * 0.2. Reports, per scheme, the mean
/// over trials of |aggregate(biased panel) - mean(clean panel)|.
///
/// Randomness comes from std::mt19937_64 seeded with the given seed; uniforms
/// take the top 53 bits of each draw and the biased index is draw % n, so
/// the output is identical on every platform.
std::vector<BiasDemoRow> cmd_demo_bias(const BiasDemoConfig& config);

/// Comma-separated rows, one vector per line. Blank lines and lines starting
/// with '#' are skipped.
std::vector<std::vector<double>> read_rows(std::istream& in);

void write_weights(std::ostream& out, const SchemeSpec& scheme, const WeightsReport& report,
                   OutputFormat format);
void write_run_report(std::ostream& out, const RunReport& report, OutputFormat format);
void write_measures(std::ostream& out, const std::vector<RowReport>& rows, OutputFormat format);
void write_quantifier_table(std::ostream& out, const SchemeSpec& scheme,
                            const std::vector<QuantifierSample>& table, OutputFormat format);
void write_bias_demo(std::ostream& out, const BiasDemoConfig& config,
                     const std::vector<BiasDemoRow>& rows, OutputFormat format);

}  // namespace owa::cli
