#include "owa/density_generator.hpp"

#include <cmath>

#include "owa/errors.hpp"

namespace owa {

DensityGenerator DensityGenerator::exponential_power(double r, double s) {
  if (!(r > 0.0) || !std::isfinite(r)) throw ValidationError("exponential-power r must be > 0");
  if (!(s > 0.0) || !std::isfinite(s)) throw ValidationError("exponential-power s must be > 0");
  return DensityGenerator(Family::exponential_power, r, s);
}

DensityGenerator DensityGenerator::student_t(int m) {
  if (m < 1) throw ValidationError("student-t degrees of freedom must be an integer >= 1");
  return DensityGenerator(Family::student_t, static_cast<double>(m), 0.0);
}

double DensityGenerator::operator()(double u) const {
  if (!(u >= 0.0)) throw DomainError("density generator evaluated at negative u");
  switch (family_) {
    case Family::cauchy:
      return 1.0 / (1.0 + u);
    case Family::exponential_power:
      return std::exp(-first_ * std::pow(u, second_));
    case Family::laplace:
      return std::exp(-std::abs(u));
    case Family::logistic: {
      const double e = std::exp(-u);
      return e / ((1.0 + e) * (1.0 + e));
    }
    case Family::normal:
      return std::exp(-0.5 * u);
    case Family::student_t:
      // Negative exponent: the positive one grows without bound and is not a
      // density generator.
      return std::pow(1.0 + u / first_, -0.5 * (first_ + 1.0));
  }
  return 0.0;
}

std::string DensityGenerator::family_name() const {
  switch (family_) {
    case Family::cauchy: return "cauchy";
    case Family::exponential_power: return "exponential-power";
    case Family::laplace: return "laplace";
    case Family::logistic: return "logistic";
    case Family::normal: return "normal";
    case Family::student_t: return "student-t";
  }
  return "unknown";
}

std::string DensityGenerator::describe() const {
  switch (family_) {
    case Family::exponential_power:
      return family_name() + "(r=" + std::to_string(first_) + ", s=" + std::to_string(second_) +
             ")";
    case Family::student_t:
      return family_name() + "(m=" + std::to_string(degrees_of_freedom()) + ")";
    default:
      return family_name();
  }
}

UnitDensity::UnitDensity(DensityGenerator generator, double scale)
    : generator_(generator), scale_(scale) {
  if (!(scale_ > 0.0) || !std::isfinite(scale_)) {
    throw ValidationError("unit density scale must be > 0");
  }
}

double UnitDensity::operator()(double y) const {
  const double z = (y - kCenter) / scale_;
  return generator_(z * z);
}

}  // namespace owa
