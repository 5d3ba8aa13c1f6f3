#include "owa/weightgen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "owa/errors.hpp"

namespace owa {

namespace {

// Differences of a nondecreasing Q can come out a few ulps negative; anything
// larger means the evaluator is not monotone.
constexpr double kRoundingSlack = 1e-12;

WeightVector from_differences(std::vector<double> w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0.0) {
      if (w[i] < -kRoundingSlack) {
        throw ValidationError("quantifier produced negative weight " + std::to_string(w[i]) +
                              " at position " + std::to_string(i + 1));
      }
      w[i] = 0.0;
    }
  }
  return WeightVector(std::move(w));
}

// 1 - s for s in [0,1], kept inside the unit interval.
double complement(double s) { return std::clamp(1.0 - s, 0.0, 1.0); }

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("probability vector must not be empty");
  double total = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (!std::isfinite(probs_[i]) || probs_[i] < 0.0) {
      throw ValidationError("probability " + std::to_string(i + 1) + " is negative");
    }
    total += probs_[i];
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw ValidationError("probabilities sum to " + std::to_string(total) + ", expected 1");
  }
  partial_sums_.reserve(probs_.size() + 1);
  partial_sums_.push_back(0.0);
  double running = 0.0;
  for (std::size_t i = 0; i + 1 < probs_.size(); ++i) {
    running += probs_[i];
    partial_sums_.push_back(std::min(running / total, 1.0));
  }
  partial_sums_.push_back(1.0);
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
  if (n == 0) throw ValidationError("probability vector must not be empty");
  return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

WeightVector weights_from_quantifier(const Quantifier& q, std::size_t n) {
  if (n == 0) throw ValidationError("n must be at least 1");
  const double nd = static_cast<double>(n);
  std::vector<double> w(n);
  double previous = q(0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    const double current = q(static_cast<double>(i) / nd);
    w[i - 1] = current - previous;
    previous = current;
  }
  return from_differences(std::move(w));
}

WeightVector dual_weights_from_quantifier(const Quantifier& q, std::size_t n) {
  if (n == 0) throw ValidationError("n must be at least 1");
  const double nd = static_cast<double>(n);
  std::vector<double> w(n);
  double upper = q(1.0);
  for (std::size_t i = 1; i <= n; ++i) {
    const double lower = q(static_cast<double>(n - i) / nd);
    w[i - 1] = upper - lower;
    upper = lower;
  }
  return from_differences(std::move(w));
}

WeightVector wowa_weights(const Quantifier& q, const ProbabilityVector& p) {
  const std::vector<double>& s = p.partial_sums();
  std::vector<double> w(p.size());
  for (std::size_t i = 1; i < s.size(); ++i) w[i - 1] = q(s[i]) - q(s[i - 1]);
  return from_differences(std::move(w));
}

WeightVector dual_wowa_weights(const Quantifier& q, const ProbabilityVector& p) {
  const std::vector<double>& s = p.partial_sums();
  std::vector<double> w(p.size());
  for (std::size_t i = 1; i < s.size(); ++i) {
    w[i - 1] = q(complement(s[i - 1])) - q(complement(s[i]));
  }
  return from_differences(std::move(w));
}

double dual_wowa_aggregate(const Quantifier& q, const ProbabilityVector& p,
                           const ArgumentVector& args) {
  if (args.size() != p.size()) {
    throw DimensionError("argument vector has length " + std::to_string(args.size()) +
                         " but probability vector has length " + std::to_string(p.size()));
  }
  const std::vector<double> sorted = args.descending();
  const std::vector<double>& s = p.partial_sums();
  double total = sorted.front();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    total += q(complement(s[i])) * (sorted[i] - sorted[i - 1]);
  }
  return total;
}

}  // namespace owa
