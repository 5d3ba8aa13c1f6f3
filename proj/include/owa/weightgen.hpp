#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "owa/core.hpp"
#include "owa/quantifier.hpp"

namespace owa {

/// Importance vector p of a WOWA operator: p_i >= 0, sum within 1e-9 of 1.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> probs);
  ProbabilityVector(std::initializer_list<double> probs)
      : ProbabilityVector(std::vector<double>(probs)) {}

  static ProbabilityVector uniform(std::size_t n);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> values() const noexcept { return probs_; }

  /// s_0 = 0, s_i = p_1 + ... + p_i, accumulated left to right and divided by
  /// the total so that s_n is exactly 1. Size n + 1.
  const std::vector<double>& partial_sums() const noexcept { return partial_sums_; }

 private:
  std::vector<double> probs_;
  std::vector<double> partial_sums_;
};

/// w_i = Q(i/n) - Q((i-1)/n).
WeightVector weights_from_quantifier(const Quantifier& q, std::size_t n);

/// w~_i = Q(1 - (i-1)/n) - Q(1 - i/n). The abscissae are formed as
/// (n-i+1)/n, so the result is exactly the reversal of
/// weights_from_quantifier(q, n).
WeightVector dual_weights_from_quantifier(const Quantifier& q, std::size_t n);

/// q_i = Q(s_i) - Q(s_{i-1}) over the partial sums of p.
WeightVector wowa_weights(const Quantifier& q, const ProbabilityVector& p);

/// q~_i = Q(1 - s_{i-1}) - Q(1 - s_i).
WeightVector dual_wowa_weights(const Quantifier& q, const ProbabilityVector& p);

/// Telescoped dual-WOWA:
///   a_(1) + sum_{i>=2} Q(1 - s_{i-1}) (a_(i) - a_(i-1)).
/// Agrees with owa_aggregate(args, dual_wowa_weights(q, p)) up to rounding.
double dual_wowa_aggregate(const Quantifier& q, const ProbabilityVector& p,
                           const ArgumentVector& args);

}  // namespace owa
