#include "owa/elliptical.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "owa/errors.hpp"

namespace owa {

PositionStats position_stats(std::size_t n) {
  if (n == 0) throw ValidationError("n must be at least 1");
  const double nd = static_cast<double>(n);
  return {(nd + 1.0) / 2.0, (nd * nd - 1.0) / 12.0};
}

WeightVector position_weights(const std::function<double(double)>& g, std::size_t n) {
  const PositionStats stats = position_stats(n);
  if (n == 1) return WeightVector{1.0};
  std::vector<double> raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double centred = static_cast<double>(i + 1) - stats.mean;
    raw[i] = g(centred * centred / stats.variance);
  }
  return WeightVector::normalized(std::move(raw));
}

WeightVector position_weights(const DensityGenerator& g, std::size_t n) {
  return position_weights([&](double u) { return g(u); }, n);
}

WeightVector argument_weights(const DensityGenerator& g, const ArgumentVector& args) {
  const std::size_t n = args.size();
  const double nd = static_cast<double>(n);
  const double mean = std::accumulate(args.begin(), args.end(), 0.0) / nd;
  double ss = 0.0;
  for (double a : args) ss += (a - mean) * (a - mean);
  const double variance = ss / nd;
  if (!(variance > 0.0)) return WeightVector::uniform(n);

  std::vector<double> raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double centred = args[i] - mean;
    raw[i] = g(centred * centred / variance);
  }
  return WeightVector::normalized(std::move(raw));
}

WeightVector gaussian_argument_weights(const ArgumentVector& args) {
  return argument_weights(DensityGenerator::normal(), args);
}

Quantifier quantifier_from_density(const UnitDensity& d) { return Quantifier::from_density(d); }

bool is_centered(const WeightVector& w) {
  constexpr double kSymmetryTolerance = 1e-9;
  constexpr double kStrictness = 1e-12;
  const std::size_t n = w.size();
  for (double v : w) {
    if (!(v > 0.0)) return false;
  }
  if (!is_symmetric(w, kSymmetryTolerance)) return false;
  // 1-based pairs (i, i+1) with i+1 <= (n+1)/2 rise, pairs with i >= (n+1)/2
  // fall; for even n the middle pair is tied by symmetry and left alone.
  for (std::size_t i = 1; i < n; ++i) {
    const double step = w[i] - w[i - 1];
    if (2 * (i + 1) <= n + 1) {
      if (!(step > kStrictness)) return false;
    } else if (2 * i >= n + 1) {
      if (!(-step > kStrictness)) return false;
    }
  }
  return true;
}

}  // namespace owa
