#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "owa/core.hpp"
#include "owa/density_generator.hpp"
#include "owa/quantifier.hpp"
#include "owa/weightgen.hpp"

namespace owa::cli {

enum class SchemeKind {
  quantifier,
  dual_quantifier,
  wowa,
  dual_wowa,
  elliptical_position,
  elliptical_argument,
  explicit_weights,
};

std::string to_string(SchemeKind kind);

/// Everything except elliptical-argument yields one weight vector per n.
bool is_position_based(SchemeKind kind);

/// A parsed scheme file. Only the fields the kind needs are populated.
///
/// Scheme files are JSON objects:
///
///   {"kind": "dual-wowa",
///    "quantifier": {"type": "power", "r": 2},
///    "p": [0.5, 0.3, 0.2]}
///
/// Quantifier types: identity, all, exists, threshold {t},
/// trimmed-linear {lo, hi}, power {r}, mixture {components, alphas},
/// rank-mixture {n, k, alphas}, density {generator, scale = 0.2}.
/// Generators: {"family": cauchy | laplace | logistic | normal |
/// exponential-power (r, s) | student-t (m)}.
struct SchemeSpec {
  SchemeKind kind = SchemeKind::explicit_weights;
  std::optional<Quantifier> quantifier;
  std::optional<DensityGenerator> generator;
  std::optional<ProbabilityVector> probabilities;
  std::optional<WeightVector> weights;
  std::optional<std::size_t> n;
  nlohmann::json source;
};

/// Validation errors name the offending field, e.g.
/// "scheme.quantifier.components[1].r: expected a number".
SchemeSpec parse_scheme(const nlohmann::json& doc);
SchemeSpec parse_scheme_text(std::string_view text);
SchemeSpec load_scheme(const std::filesystem::path& path);

Quantifier parse_quantifier(const nlohmann::json& doc, const std::string& path);
DensityGenerator parse_generator(const nlohmann::json& doc, const std::string& path);

/// Resolves the dimension from the scheme and an optional request; they must
/// agree when both are present.
std::size_t resolve_dimension(const SchemeSpec& scheme, std::optional<std::size_t> requested);

/// Weight vector of a position-based scheme at dimension n. Throws
/// ValidationError for elliptical-argument ("requires data").
WeightVector scheme_weights(const SchemeSpec& scheme, std::size_t n);

}  // namespace owa::cli
