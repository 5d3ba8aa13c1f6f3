#include "owa/core.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "owa/errors.hpp"

namespace owa {

namespace {

void require_same_size(std::size_t args, std::size_t weights) {
  if (args != weights) {
    throw DimensionError("argument vector has length " + std::to_string(args) +
                         " but weight vector has length " + std::to_string(weights));
  }
}

}  // namespace

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw ValidationError("weight vector must not be empty");
  double sum = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    double& w = weights_[i];
    if (!std::isfinite(w) || w < -kEntryTolerance || w > 1.0 + kEntryTolerance) {
      throw ValidationError("weight " + std::to_string(i + 1) + " = " + std::to_string(w) +
                            " is outside [0,1]");
    }
    w = std::clamp(w, 0.0, 1.0);
    sum += w;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw ValidationError("weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

WeightVector WeightVector::normalized(std::vector<double> raw) {
  double total = 0.0;
  for (double v : raw) {
    if (!std::isfinite(v) || v < 0.0) throw ValidationError("cannot normalize a negative weight");
    total += v;
  }
  if (!(total > 0.0)) throw ValidationError("cannot normalize weights that sum to zero");
  for (double& v : raw) v /= total;
  return WeightVector(std::move(raw));
}

WeightVector WeightVector::uniform(std::size_t n) {
  if (n == 0) throw ValidationError("weight vector must not be empty");
  return WeightVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

WeightVector WeightVector::max(std::size_t n) {
  if (n == 0) throw ValidationError("weight vector must not be empty");
  std::vector<double> w(n, 0.0);
  w.front() = 1.0;
  return WeightVector(std::move(w));
}

WeightVector WeightVector::min(std::size_t n) {
  if (n == 0) throw ValidationError("weight vector must not be empty");
  std::vector<double> w(n, 0.0);
  w.back() = 1.0;
  return WeightVector(std::move(w));
}

ArgumentVector::ArgumentVector(std::vector<double> values, Range range)
    : values_(std::move(values)), range_(range) {
  if (values_.empty()) throw ValidationError("argument vector must not be empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double a = values_[i];
    if (!std::isfinite(a)) {
      throw ValidationError("argument " + std::to_string(i + 1) + " is not finite");
    }
    if (range_ == Range::unit_interval && (a < 0.0 || a > 1.0)) {
      throw ValidationError("argument " + std::to_string(i + 1) + " = " + std::to_string(a) +
                            " is outside [0,1]");
    }
  }
}

std::vector<double> ArgumentVector::descending() const {
  std::vector<double> sorted = values_;
  std::stable_sort(sorted.begin(), sorted.end(), std::greater<>{});
  return sorted;
}

double owa_aggregate(const ArgumentVector& args, const WeightVector& w) {
  require_same_size(args.size(), w.size());
  const std::vector<double> sorted = args.descending();
  double total = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) total += w[i] * sorted[i];
  return total;
}

double weighted_average(const ArgumentVector& args, const WeightVector& w) {
  require_same_size(args.size(), w.size());
  double total = 0.0;
  for (std::size_t i = 0; i < args.size(); ++i) total += w[i] * args[i];
  return total;
}

WeightVector dual(const WeightVector& w) {
  return WeightVector(std::vector<double>(w.values().rbegin(), w.values().rend()));
}

bool is_symmetric(const WeightVector& w, double tolerance) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (std::abs(w[i] - w[n - 1 - i]) > tolerance) return false;
  }
  return true;
}

double orness(const WeightVector& w) {
  const std::size_t n = w.size();
  if (n == 1) return 0.5;
  const double denom = static_cast<double>(n - 1);
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    total += static_cast<double>(n - 1 - j) / denom * w[j];
  }
  return total;
}

double andness(const WeightVector& w) { return 1.0 - orness(w); }

double dispersion(const WeightVector& w) {
  double h = 0.0;
  for (double v : w) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

}  // namespace owa
