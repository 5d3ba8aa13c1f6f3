#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "owa/density_generator.hpp"

namespace owa {

/// Density f >= 0 on [0,1] with unit mass; Q(x) = int_0^x f is a RIM
/// quantifier.
class GeneratingFunction {
 public:
  enum class Smoothness { unknown, differentiable };

  /// Checks f >= 0 on a 1001-point grid and |int_0^1 f - 1| <= 1e-6.
  explicit GeneratingFunction(std::function<double(double)> density,
                              Smoothness smoothness = Smoothness::unknown);

  double operator()(double x) const { return density_(x); }
  bool differentiable() const noexcept { return smoothness_ == Smoothness::differentiable; }
  /// int_0^1 f as computed at construction.
  double mass() const noexcept { return mass_; }

 private:
  std::function<double(double)> density_;
  Smoothness smoothness_;
  double mass_ = 1.0;
};

/// g(x) = f(1 - x). Quantifiers built from f and g have ornesses summing to 1.
GeneratingFunction reflect_generator(const GeneratingFunction& f);

/// 1 - int_0^1 t f(t) dt.
double orness_via_generator(const GeneratingFunction& f);

/// A regular increasing monotone quantifier: nondecreasing on [0,1] with
/// Q(0) = 0 and Q(1) = 1.
///
/// Values are immutable and cheap to copy (shared representation). The RIM
/// conditions are checked at construction: endpoints within 1e-9 and
/// monotonicity on a 1001-point grid with slack 1e-12.
class Quantifier {
 public:
  enum class Kind {
    identity,
    all,
    exists,
    threshold_step,
    trimmed_linear,
    power,
    mixture,
    from_generator,
    from_density
  };

  /// Q_A(x) = x.
  static Quantifier identity();
  /// Q_*(x) = 1 iff x = 1.
  static Quantifier all();
  /// Q^*(x) = 1 iff x > 0.
  static Quantifier exists();
  /// 0 below t, 1 from t on; t in (0,1].
  static Quantifier threshold_step(double t);
  /// 0 below lo, linear on [lo,hi], 1 from hi on; 0 <= lo < hi <= 1.
  static Quantifier trimmed_linear(double lo, double hi);
  /// x^r, r > 0.
  static Quantifier power(double r);
  /// sum_i alphas[i] * components[i]; alphas >= 0 summing to 1 within 1e-12.
  static Quantifier mixture(std::vector<Quantifier> components, std::vector<double> alphas);
  /// Q(x) = int_0^x f / int_0^1 f (the denominator is 1 up to quadrature error).
  static Quantifier from_generator(GeneratingFunction f);
  /// Q(x) = K int_0^x h with K = 1 / int_0^1 h.
  static Quantifier from_density(UnitDensity d);

  /// Q(x); throws DomainError outside [0,1].
  double operator()(double x) const;

  Kind kind() const noexcept;
  /// Exact int_0^1 Q for kinds with a known antiderivative. Empty for
  /// generator- and density-backed quantifiers and mixtures containing them.
  std::optional<double> closed_form_orness() const;
  std::string describe() const;

  struct Rep;

 private:
  explicit Quantifier(std::shared_ptr<const Rep> rep);
  std::shared_ptr<const Rep> rep_;
};

/// Free-function spelling of Quantifier::operator().
inline double eval(const Quantifier& q, double x) { return q(x); }

inline Quantifier mixture(std::vector<Quantifier> components, std::vector<double> alphas) {
  return Quantifier::mixture(std::move(components), std::move(alphas));
}

inline Quantifier from_generator(GeneratingFunction f) {
  return Quantifier::from_generator(std::move(f));
}

/// Mixture of the five rank quantifiers
///   identity, all, exists, threshold_step((n-k)/n), trimmed_linear(1/n, (n-1)/n)
/// with the given alphas. Depending on the alphas, its weight vectors cover
/// the arithmetic mean, min, max, a single order statistic, and the olympic
/// (drop best and worst) average. Requires n >= 3 and k < n.
Quantifier rank_mixture(std::size_t n, std::size_t k, std::span<const double> alphas);

/// orness(Q) = int_0^1 Q(r) dr. Closed form where available, otherwise
/// adaptive Simpson with absolute tolerance 1e-8.
double quantifier_orness(const Quantifier& q);

/// 1 - int_0^1 Q(r) dr, the orness of the dual weights generated by Q.
double dual_quantifier_orness(const Quantifier& q);

/// q1(x) >= q2(x) - 1e-12 at x = k/gridsize for k = 0..gridsize.
bool dominates(const Quantifier& q1, const Quantifier& q2, std::size_t gridsize = 1000);

enum class Convexity { convex, concave, both, neither };

std::string to_string(Convexity c);

/// Sampled classification from second differences Q(x+h) + Q(x-h) - 2Q(x)
/// on the grid x = k/gridsize, tolerance 1e-10.
Convexity convexity_class(const Quantifier& q, std::size_t gridsize = 1000);

}  // namespace owa
