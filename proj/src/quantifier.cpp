#include "owa/quantifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>
#include <variant>

#include "owa/errors.hpp"
#include "owa/numerics.hpp"

namespace owa {

namespace {

constexpr std::size_t kValidationGrid = 1000;
constexpr double kEndpointTolerance = 1e-9;
constexpr double kMonotoneSlack = 1e-12;
constexpr double kMassTolerance = 1e-6;
constexpr double kAlphaTolerance = 1e-12;

// Inner integrals Q(x) = int_0^x f are computed well below the 1e-8 used for
// orness so that the outer quadrature sees a smooth integrand.
constexpr numerics::QuadratureSpec kGeneratorSpec{1e-11, 40};
constexpr numerics::QuadratureSpec kPanelSpec{1e-14, 40};
// Density quantifiers tabulate int_0^x h on fixed panels; 0.5 is a panel
// boundary so a cusp of h at the center never falls inside one.
constexpr std::size_t kDensityPanels = 1000;
constexpr numerics::QuadratureSpec kOrnessSpec{1e-8, 30};

struct IdentityRep {};
struct AllRep {};
struct ExistsRep {};
struct ThresholdRep {
  double t;
};
struct TrimmedRep {
  double lo, hi;
};
struct PowerRep {
  double r;
};
struct MixtureRep {
  std::vector<Quantifier> components;
  std::vector<double> alphas;
};
struct GeneratorRep {
  GeneratingFunction f;
  double total;
};
struct DensityRep {
  UnitDensity d;
  std::vector<double> cumulative;  // int_0^{k/kDensityPanels} h
};

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::array<double, 12> nodes;
  std::array<double, 12> weights;
};

const GaussRule& gauss_rule() {
  static const GaussRule rule = [] {
    GaussRule r{};
    const std::size_t m = r.nodes.size();
    for (std::size_t i = 0; i < m; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (m + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = x;
        for (std::size_t k = 2; k <= m; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = m * (x * p1 - p0) / (x * x - 1.0);
        const double step = p1 / dp;
        x -= step;
        if (std::abs(step) < 1e-16) break;
      }
      r.nodes[i] = x;
      r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

// Positive weights keep the result nonnegative and smooth in b, so Q stays
// monotone inside a panel.
double gauss_integral(const UnitDensity& h, double a, double b) {
  const GaussRule& rule = gauss_rule();
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    total += rule.weights[i] * h(mid + half * rule.nodes[i]);
  }
  return total * half;
}

double density_cdf(const DensityRep& s, double x) {
  const std::vector<double>& c = s.cumulative;
  if (x >= 1.0) return 1.0;
  const std::size_t k =
      std::min(static_cast<std::size_t>(x * kDensityPanels), kDensityPanels - 1);
  const double lo = static_cast<double>(k) / kDensityPanels;
  const double partial = std::min(gauss_integral(s.d, lo, x), c[k + 1] - c[k]);
  return (c[k] + std::max(partial, 0.0)) / c.back();
}

}  // namespace

struct Quantifier::Rep {
  std::variant<IdentityRep, AllRep, ExistsRep, ThresholdRep, TrimmedRep, PowerRep, MixtureRep,
               GeneratorRep, DensityRep>
      value;
};

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double evaluate(const Quantifier::Rep& rep, double x) {
  return std::visit(
      Overloaded{
          [&](const IdentityRep&) { return x; },
          [&](const AllRep&) { return x == 1.0 ? 1.0 : 0.0; },
          [&](const ExistsRep&) { return x == 0.0 ? 0.0 : 1.0; },
          [&](const ThresholdRep& s) { return x >= s.t ? 1.0 : 0.0; },
          [&](const TrimmedRep& s) {
            if (x < s.lo) return 0.0;
            if (x >= s.hi) return 1.0;
            return (x - s.lo) / (s.hi - s.lo);
          },
          [&](const PowerRep& s) { return std::pow(x, s.r); },
          [&](const MixtureRep& s) {
            double total = 0.0;
            for (std::size_t i = 0; i < s.components.size(); ++i) {
              total += s.alphas[i] * s.components[i](x);
            }
            return total;
          },
          [&](const GeneratorRep& s) {
            return numerics::integrate([&](double t) { return s.f(t); }, 0.0, x,
                                       kGeneratorSpec) /
                   s.total;
          },
          [&](const DensityRep& s) { return density_cdf(s, x); },
      },
      rep.value);
}

std::optional<double> closed_form_orness(const Quantifier::Rep& rep) {
  return std::visit(
      Overloaded{
          [](const IdentityRep&) -> std::optional<double> { return 0.5; },
          [](const AllRep&) -> std::optional<double> { return 0.0; },
          [](const ExistsRep&) -> std::optional<double> { return 1.0; },
          [](const ThresholdRep& s) -> std::optional<double> { return 1.0 - s.t; },
          [](const TrimmedRep& s) -> std::optional<double> {
            return (1.0 - s.hi) + 0.5 * (s.hi - s.lo);
          },
          [](const PowerRep& s) -> std::optional<double> { return 1.0 / (1.0 + s.r); },
          [](const MixtureRep& s) -> std::optional<double> {
            double total = 0.0;
            for (std::size_t i = 0; i < s.components.size(); ++i) {
              const std::optional<double> part = s.components[i].closed_form_orness();
              if (!part) return std::nullopt;
              total += s.alphas[i] * *part;
            }
            return total;
          },
          [](const GeneratorRep&) -> std::optional<double> { return std::nullopt; },
          [](const DensityRep&) -> std::optional<double> { return std::nullopt; },
      },
      rep.value);
}

void check_rim(const Quantifier& q, const std::string& name) {
  const double at0 = q(0.0);
  const double at1 = q(1.0);
  if (std::abs(at0) > kEndpointTolerance || std::abs(at1 - 1.0) > kEndpointTolerance) {
    throw ValidationError(name + " is not a RIM quantifier: Q(0) = " + std::to_string(at0) +
                          ", Q(1) = " + std::to_string(at1));
  }
  double previous = at0;
  for (std::size_t k = 1; k <= kValidationGrid; ++k) {
    const double x = static_cast<double>(k) / static_cast<double>(kValidationGrid);
    const double value = k == kValidationGrid ? at1 : q(x);
    if (!std::isfinite(value) || value < previous - kMonotoneSlack) {
      throw ValidationError(name + " is not nondecreasing near x = " + std::to_string(x));
    }
    previous = value;
  }
}

}  // namespace

GeneratingFunction::GeneratingFunction(std::function<double(double)> density,
                                       Smoothness smoothness)
    : density_(std::move(density)), smoothness_(smoothness) {
  if (!density_) throw ValidationError("generating function is empty");
  for (std::size_t k = 0; k <= kValidationGrid; ++k) {
    const double x = static_cast<double>(k) / static_cast<double>(kValidationGrid);
    const double v = density_(x);
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("generating function is negative or not finite at x = " +
                            std::to_string(x));
    }
  }
  mass_ = numerics::integrate(density_, 0.0, 1.0, kGeneratorSpec);
  if (std::abs(mass_ - 1.0) > kMassTolerance) {
    throw ValidationError("generating function integrates to " + std::to_string(mass_) +
                          ", expected 1");
  }
}

GeneratingFunction reflect_generator(const GeneratingFunction& f) {
  return GeneratingFunction([f](double x) { return f(1.0 - x); },
                            f.differentiable() ? GeneratingFunction::Smoothness::differentiable
                                               : GeneratingFunction::Smoothness::unknown);
}

double orness_via_generator(const GeneratingFunction& f) {
  return 1.0 - numerics::integrate([&](double t) { return t * f(t); }, 0.0, 1.0, kOrnessSpec);
}

Quantifier::Quantifier(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

Quantifier Quantifier::identity() {
  return Quantifier(std::make_shared<const Rep>(Rep{IdentityRep{}}));
}

Quantifier Quantifier::all() { return Quantifier(std::make_shared<const Rep>(Rep{AllRep{}})); }

Quantifier Quantifier::exists() {
  return Quantifier(std::make_shared<const Rep>(Rep{ExistsRep{}}));
}

Quantifier Quantifier::threshold_step(double t) {
  if (!(t > 0.0 && t <= 1.0)) throw ValidationError("threshold must lie in (0,1]");
  return Quantifier(std::make_shared<const Rep>(Rep{ThresholdRep{t}}));
}

Quantifier Quantifier::trimmed_linear(double lo, double hi) {
  if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) {
    throw ValidationError("trimmed-linear bounds must satisfy 0 <= lo < hi <= 1");
  }
  return Quantifier(std::make_shared<const Rep>(Rep{TrimmedRep{lo, hi}}));
}

Quantifier Quantifier::power(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw ValidationError("power exponent must be > 0");
  return Quantifier(std::make_shared<const Rep>(Rep{PowerRep{r}}));
}

Quantifier Quantifier::mixture(std::vector<Quantifier> components, std::vector<double> alphas) {
  if (components.empty()) throw ValidationError("mixture needs at least one component");
  if (components.size() != alphas.size()) {
    throw DimensionError("mixture has " + std::to_string(components.size()) +
                         " components but " + std::to_string(alphas.size()) + " alphas");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] >= 0.0) || !std::isfinite(alphas[i])) {
      throw ValidationError("mixture alpha " + std::to_string(i + 1) + " is negative");
    }
    total += alphas[i];
  }
  if (std::abs(total - 1.0) > kAlphaTolerance) {
    throw ValidationError("mixture alphas sum to " + std::to_string(total) + ", expected 1");
  }
  Quantifier q(
      std::make_shared<const Rep>(Rep{MixtureRep{std::move(components), std::move(alphas)}}));
  check_rim(q, "mixture");
  return q;
}

Quantifier Quantifier::from_generator(GeneratingFunction f) {
  const double total = f.mass();
  Quantifier q(std::make_shared<const Rep>(Rep{GeneratorRep{std::move(f), total}}));
  check_rim(q, "generator quantifier");
  return q;
}

Quantifier Quantifier::from_density(UnitDensity d) {
  std::vector<double> cumulative(kDensityPanels + 1, 0.0);
  for (std::size_t k = 0; k < kDensityPanels; ++k) {
    const double lo = static_cast<double>(k) / kDensityPanels;
    const double hi = static_cast<double>(k + 1) / kDensityPanels;
    const double panel = numerics::integrate([&](double y) { return d(y); }, lo, hi, kPanelSpec);
    cumulative[k + 1] = cumulative[k] + std::max(panel, 0.0);
  }
  if (!(cumulative.back() > 0.0)) throw ValidationError("unit density has no mass on [0,1]");
  Quantifier q(std::make_shared<const Rep>(Rep{DensityRep{d, std::move(cumulative)}}));
  check_rim(q, "density quantifier");
  return q;
}

double Quantifier::operator()(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("quantifier evaluated outside [0,1] at x = " + std::to_string(x));
  }
  return evaluate(*rep_, x);
}

Quantifier::Kind Quantifier::kind() const noexcept {
  return static_cast<Kind>(rep_->value.index());
}

std::optional<double> Quantifier::closed_form_orness() const { return owa::closed_form_orness(*rep_); }

std::string Quantifier::describe() const {
  std::ostringstream out;
  std::visit(Overloaded{
                 [&](const IdentityRep&) { out << "identity"; },
                 [&](const AllRep&) { out << "all"; },
                 [&](const ExistsRep&) { out << "exists"; },
                 [&](const ThresholdRep& s) { out << "threshold(t=" << s.t << ")"; },
                 [&](const TrimmedRep& s) {
                   out << "trimmed-linear(lo=" << s.lo << ", hi=" << s.hi << ")";
                 },
                 [&](const PowerRep& s) { out << "power(r=" << s.r << ")"; },
                 [&](const MixtureRep& s) {
                   out << "mixture(";
                   for (std::size_t i = 0; i < s.components.size(); ++i) {
                     if (i) out << " + ";
                     out << s.alphas[i] << "*" << s.components[i].describe();
                   }
                   out << ")";
                 },
                 [&](const GeneratorRep&) { out << "generator"; },
                 [&](const DensityRep& s) {
                   out << "density(" << s.d.generator().describe() << ", scale=" << s.d.scale()
                       << ")";
                 },
             },
             rep_->value);
  return out.str();
}

Quantifier rank_mixture(std::size_t n, std::size_t k, std::span<const double> alphas) {
  if (n < 3) throw ValidationError("rank mixture needs n >= 3");
  if (k >= n) throw ValidationError("rank mixture needs k < n");
  if (alphas.size() != 5) throw DimensionError("rank mixture takes exactly five alphas");
  const double nd = static_cast<double>(n);
  std::vector<Quantifier> components{
      Quantifier::identity(),
      Quantifier::all(),
      Quantifier::exists(),
      Quantifier::threshold_step(static_cast<double>(n - k) / nd),
      Quantifier::trimmed_linear(1.0 / nd, static_cast<double>(n - 1) / nd),
  };
  return Quantifier::mixture(std::move(components), {alphas.begin(), alphas.end()});
}

double quantifier_orness(const Quantifier& q) {
  if (const std::optional<double> exact = q.closed_form_orness()) return *exact;
  return numerics::integrate([&](double r) { return q(r); }, 0.0, 1.0, kOrnessSpec);
}

double dual_quantifier_orness(const Quantifier& q) { return 1.0 - quantifier_orness(q); }

bool dominates(const Quantifier& q1, const Quantifier& q2, std::size_t gridsize) {
  if (gridsize < 2) throw ValidationError("dominance grid needs at least 2 intervals");
  const double nd = static_cast<double>(gridsize);
  for (std::size_t k = 0; k <= gridsize; ++k) {
    const double x = static_cast<double>(k) / nd;
    if (q1(x) < q2(x) - 1e-12) return false;
  }
  return true;
}

std::string to_string(Convexity c) {
  switch (c) {
    case Convexity::convex: return "convex";
    case Convexity::concave: return "concave";
    case Convexity::both: return "both";
    case Convexity::neither: return "neither";
  }
  return "neither";
}

Convexity convexity_class(const Quantifier& q, std::size_t gridsize) {
  if (gridsize < 3) throw ValidationError("convexity grid needs at least 3 intervals");
  constexpr double kTolerance = 1e-10;
  const double nd = static_cast<double>(gridsize);
  std::vector<double> values(gridsize + 1);
  for (std::size_t k = 0; k <= gridsize; ++k) values[k] = q(static_cast<double>(k) / nd);

  bool convex = true;
  bool concave = true;
  for (std::size_t k = 1; k < gridsize; ++k) {
    const double second = values[k + 1] + values[k - 1] - 2.0 * values[k];
    if (second < -kTolerance) convex = false;
    if (second > kTolerance) concave = false;
  }
  if (convex && concave) return Convexity::both;
  if (convex) return Convexity::convex;
  if (concave) return Convexity::concave;
  return Convexity::neither;
}

}  // namespace owa
