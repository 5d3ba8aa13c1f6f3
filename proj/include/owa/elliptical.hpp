#pragma once

#include <cstddef>
#include <functional>

#include "owa/core.hpp"
#include "owa/density_generator.hpp"
#include "owa/quantifier.hpp"

namespace owa {

struct PositionStats {
  double mean;      // (n + 1) / 2
  double variance;  // (n^2 - 1) / 12, population variance of 1..n
};

PositionStats position_stats(std::size_t n);

/// w_i proportional to g(((i - mu_n)/sigma_n)^2), i = 1..n.
///
/// Symmetric for every g; unimodal with the peak in the middle whenever g is
/// non-increasing. n = 1 yields (1).
WeightVector position_weights(const DensityGenerator& g, std::size_t n);

/// Same construction for an arbitrary positive generator. Scaling g by a
/// constant does not change the result.
WeightVector position_weights(const std::function<double(double)>& g, std::size_t n);

/// WAA weights w_i proportional to g(((a_i - mu)/sigma)^2) with mu the mean
/// and sigma the population standard deviation of the arguments.
///
/// The weights follow the original argument order, not the sorted order;
/// combine them with weighted_average(), not owa_aggregate(). If all
/// arguments are equal the result is uniform.
WeightVector argument_weights(const DensityGenerator& g, const ArgumentVector& args);

/// argument_weights() with the normal generator.
WeightVector gaussian_argument_weights(const ArgumentVector& args);

/// Q(x) = K int_0^x h with K = 1 / int_0^1 h. Q(1/2 + x) + Q(1/2 - x) = 1 and
/// the weights it generates are centered for every strictly decreasing g.
Quantifier quantifier_from_density(const UnitDensity& d);

/// Centered weight vector test:
///   symmetric within 1e-9,
///   strictly increasing (by more than 1e-12) up to the middle and strictly
///   decreasing after it; for even n the two middle weights are equal,
///   every weight > 0.
bool is_centered(const WeightVector& w);

}  // namespace owa
