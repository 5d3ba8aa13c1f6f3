#pragma once

#include <string>

namespace owa {

/// Radial density generators g(u), u >= 0, of common elliptical families.
///
/// An elliptical density is C/sigma * g(((x - mu)/sigma)^2). The constant C
/// is never needed here: every weight formula divides g by a sum or integral
/// of g, so C cancels.
///
///   cauchy               1 / (1 + u)
///   exponential-power    exp(-r u^s),            r, s > 0
///   laplace              exp(-|u|)
///   logistic             exp(-u) / (1 + exp(-u))^2
///   normal               exp(-u / 2)
///   student-t            (1 + u/m)^(-(m + 1)/2),  m >= 1 integer
///
/// All six are positive and strictly decreasing on [0, inf).
class DensityGenerator {
 public:
  enum class Family { cauchy, exponential_power, laplace, logistic, normal, student_t };

  static DensityGenerator cauchy() { return DensityGenerator(Family::cauchy, 0.0, 0.0); }
  static DensityGenerator exponential_power(double r, double s);
  static DensityGenerator laplace() { return DensityGenerator(Family::laplace, 0.0, 0.0); }
  static DensityGenerator logistic() { return DensityGenerator(Family::logistic, 0.0, 0.0); }
  static DensityGenerator normal() { return DensityGenerator(Family::normal, 0.0, 0.0); }
  static DensityGenerator student_t(int m);

  /// g(u); throws DomainError for u < 0.
  double operator()(double u) const;

  Family family() const noexcept { return family_; }
  /// Exponential-power r.
  double rate() const noexcept { return first_; }
  /// Exponential-power s.
  double shape() const noexcept { return second_; }
  /// Student-t degrees of freedom.
  int degrees_of_freedom() const noexcept { return static_cast<int>(first_); }

  /// Canonical family name as used in scheme files ("student-t", ...).
  std::string family_name() const;
  std::string describe() const;

 private:
  DensityGenerator(Family family, double first, double second)
      : family_(family), first_(first), second_(second) {}

  Family family_;
  double first_;
  double second_;
};

/// h(y) = g(((y - 0.5)/scale)^2) on [0,1]; symmetric about 0.5 by construction.
class UnitDensity {
 public:
  static constexpr double kCenter = 0.5;
  static constexpr double kDefaultScale = 0.2;

  explicit UnitDensity(DensityGenerator generator, double scale = kDefaultScale);

  double operator()(double y) const;

  const DensityGenerator& generator() const noexcept { return generator_; }
  double center() const noexcept { return kCenter; }
  double scale() const noexcept { return scale_; }

 private:
  DensityGenerator generator_;
  double scale_;
};

}  // namespace owa
