#include "owa/cli/scheme.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "owa/elliptical.hpp"
#include "owa/errors.hpp"

namespace owa::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ValidationError(path + ": " + message);
}

// Reads fields from one JSON object and rejects any it was not asked about.
class ObjectReader {
 public:
  ObjectReader(const json& doc, std::string path) : doc_(doc), path_(std::move(path)) {
    if (!doc_.is_object()) fail(path_, "expected an object");
  }

  const std::string& path() const { return path_; }
  std::string child(const std::string& key) const { return path_ + "." + key; }

  bool has(const std::string& key) const { return doc_.contains(key); }

  const json& require(const std::string& key) {
    if (!doc_.contains(key)) fail(child(key), "missing required field");
    seen_.insert(key);
    return doc_.at(key);
  }

  const json* optional(const std::string& key) {
    if (!doc_.contains(key)) return nullptr;
    seen_.insert(key);
    return &doc_.at(key);
  }

  double number(const std::string& key) { return as_number(require(key), child(key)); }

  std::string string(const std::string& key) {
    const json& v = require(key);
    if (!v.is_string()) fail(child(key), "expected a string");
    return v.get<std::string>();
  }

  std::size_t count(const std::string& key) { return as_count(require(key), child(key)); }

  std::vector<double> numbers(const std::string& key) {
    const json& v = require(key);
    if (!v.is_array()) fail(child(key), "expected an array of numbers");
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      out.push_back(as_number(v[i], child(key) + "[" + std::to_string(i) + "]"));
    }
    return out;
  }

  void finish() const {
    for (const auto& [key, value] : doc_.items()) {
      if (!seen_.count(key)) fail(child(key), "unexpected field");
    }
  }

  static double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, "expected a number");
    return v.get<double>();
  }

  static std::size_t as_count(const json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<long long>() < 1) fail(path, "expected a positive integer");
    return static_cast<std::size_t>(v.get<long long>());
  }

 private:
  const json& doc_;
  std::string path_;
  std::set<std::string> seen_;
};

template <class F>
auto with_path(const std::string& path, F&& build) {
  try {
    return build();
  } catch (const ValidationError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw ValidationError(path + ": " + what);
  } catch (const DimensionError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

SchemeKind parse_kind(const std::string& name, const std::string& path) {
  if (name == "quantifier") return SchemeKind::quantifier;
  if (name == "dual-quantifier") return SchemeKind::dual_quantifier;
  if (name == "wowa") return SchemeKind::wowa;
  if (name == "dual-wowa") return SchemeKind::dual_wowa;
  if (name == "elliptical-position") return SchemeKind::elliptical_position;
  if (name == "elliptical-argument") return SchemeKind::elliptical_argument;
  if (name == "explicit") return SchemeKind::explicit_weights;
  fail(path, "unknown scheme kind '" + name + "'");
}

}  // namespace

std::string to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::quantifier: return "quantifier";
    case SchemeKind::dual_quantifier: return "dual-quantifier";
    case SchemeKind::wowa: return "wowa";
    case SchemeKind::dual_wowa: return "dual-wowa";
    case SchemeKind::elliptical_position: return "elliptical-position";
    case SchemeKind::elliptical_argument: return "elliptical-argument";
    case SchemeKind::explicit_weights: return "explicit";
  }
  return "unknown";
}

bool is_position_based(SchemeKind kind) { return kind != SchemeKind::elliptical_argument; }

DensityGenerator parse_generator(const json& doc, const std::string& path) {
  ObjectReader in(doc, path);
  const std::string family = in.string("family");
  DensityGenerator g = with_path(path, [&]() -> DensityGenerator {
    if (family == "cauchy") return DensityGenerator::cauchy();
    if (family == "laplace") return DensityGenerator::laplace();
    if (family == "logistic") return DensityGenerator::logistic();
    if (family == "normal") return DensityGenerator::normal();
    if (family == "exponential-power") {
      const double r = in.number("r");
      const double s = in.number("s");
      return DensityGenerator::exponential_power(r, s);
    }
    if (family == "student-t") {
      const json& m = in.require("m");
      if (!m.is_number_integer()) fail(in.child("m"), "expected an integer");
      return DensityGenerator::student_t(m.get<int>());
    }
    fail(in.child("family"), "unknown generator family '" + family + "'");
  });
  in.finish();
  return g;
}

Quantifier parse_quantifier(const json& doc, const std::string& path) {
  ObjectReader in(doc, path);
  const std::string type = in.string("type");
  Quantifier q = with_path(path, [&]() -> Quantifier {
    if (type == "identity") return Quantifier::identity();
    if (type == "all") return Quantifier::all();
    if (type == "exists") return Quantifier::exists();
    if (type == "threshold") return Quantifier::threshold_step(in.number("t"));
    if (type == "trimmed-linear") {
      const double lo = in.number("lo");
      const double hi = in.number("hi");
      return Quantifier::trimmed_linear(lo, hi);
    }
    if (type == "power") return Quantifier::power(in.number("r"));
    if (type == "mixture") {
      const json& parts = in.require("components");
      if (!parts.is_array() || parts.empty()) {
        fail(in.child("components"), "expected a non-empty array");
      }
      std::vector<Quantifier> components;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        components.push_back(
            parse_quantifier(parts[i], in.child("components") + "[" + std::to_string(i) + "]"));
      }
      return Quantifier::mixture(std::move(components), in.numbers("alphas"));
    }
    if (type == "rank-mixture") {
      const std::size_t n = in.count("n");
      const json& k = in.require("k");
      if (!k.is_number_integer() || k.get<long long>() < 0) {
        fail(in.child("k"), "expected a nonnegative integer");
      }
      const std::vector<double> alphas = in.numbers("alphas");
      return rank_mixture(n, static_cast<std::size_t>(k.get<long long>()), alphas);
    }
    if (type == "density") {
      const DensityGenerator g = parse_generator(in.require("generator"), in.child("generator"));
      const json* scale = in.optional("scale");
      const double s = scale ? ObjectReader::as_number(*scale, in.child("scale"))
                             : UnitDensity::kDefaultScale;
      return quantifier_from_density(UnitDensity(g, s));
    }
    fail(in.child("type"), "unknown quantifier type '" + type + "'");
  });
  in.finish();
  return q;
}

SchemeSpec parse_scheme(const json& doc) {
  ObjectReader in(doc, "scheme");
  SchemeSpec spec;
  spec.source = doc;
  spec.kind = parse_kind(in.string("kind"), in.child("kind"));

  if (const json* n = in.optional("n")) {
    if (spec.kind == SchemeKind::elliptical_argument) {
      fail(in.child("n"), "elliptical-argument weights take their size from the data");
    }
    spec.n = ObjectReader::as_count(*n, in.child("n"));
  }

  switch (spec.kind) {
    case SchemeKind::quantifier:
    case SchemeKind::dual_quantifier:
      spec.quantifier = parse_quantifier(in.require("quantifier"), in.child("quantifier"));
      break;
    case SchemeKind::wowa:
    case SchemeKind::dual_wowa: {
      spec.quantifier = parse_quantifier(in.require("quantifier"), in.child("quantifier"));
      std::vector<double> p = in.numbers("p");
      spec.probabilities = with_path(in.child("p"), [&] { return ProbabilityVector(p); });
      if (spec.n && *spec.n != spec.probabilities->size()) {
        fail(in.child("n"), "does not match the length of p");
      }
      spec.n = spec.probabilities->size();
      break;
    }
    case SchemeKind::elliptical_position:
    case SchemeKind::elliptical_argument:
      spec.generator = parse_generator(in.require("generator"), in.child("generator"));
      break;
    case SchemeKind::explicit_weights: {
      std::vector<double> w = in.numbers("weights");
      spec.weights = with_path(in.child("weights"), [&] { return WeightVector(w); });
      if (spec.n && *spec.n != spec.weights->size()) {
        fail(in.child("n"), "does not match the length of weights");
      }
      spec.n = spec.weights->size();
      break;
    }
  }
  in.finish();
  return spec;
}

SchemeSpec parse_scheme_text(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("scheme: not valid JSON: ") + e.what());
  }
  return parse_scheme(doc);
}

SchemeSpec load_scheme(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open scheme file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scheme_text(text.str());
}

std::size_t resolve_dimension(const SchemeSpec& scheme, std::optional<std::size_t> requested) {
  if (requested && *requested == 0) throw ValidationError("--n must be at least 1");
  if (scheme.n && requested && *scheme.n != *requested) {
    throw DimensionError("scheme fixes n = " + std::to_string(*scheme.n) + " but n = " +
                         std::to_string(*requested) + " was requested");
  }
  if (scheme.n) return *scheme.n;
  if (requested) return *requested;
  throw ValidationError("n is required for a " + to_string(scheme.kind) + " scheme");
}

WeightVector scheme_weights(const SchemeSpec& scheme, std::size_t n) {
  if (scheme.n && *scheme.n != n) {
    throw DimensionError("scheme has dimension " + std::to_string(*scheme.n) +
                         " but the data has " + std::to_string(n) + " arguments");
  }
  switch (scheme.kind) {
    case SchemeKind::quantifier: return weights_from_quantifier(*scheme.quantifier, n);
    case SchemeKind::dual_quantifier: return dual_weights_from_quantifier(*scheme.quantifier, n);
    case SchemeKind::wowa: return wowa_weights(*scheme.quantifier, *scheme.probabilities);
    case SchemeKind::dual_wowa: return dual_wowa_weights(*scheme.quantifier, *scheme.probabilities);
    case SchemeKind::elliptical_position: return position_weights(*scheme.generator, n);
    case SchemeKind::explicit_weights: return *scheme.weights;
    case SchemeKind::elliptical_argument:
      throw ValidationError("elliptical-argument scheme requires data: its weights depend on "
                            "the argument values");
  }
  throw ValidationError("unknown scheme kind");
}

}  // namespace owa::cli
