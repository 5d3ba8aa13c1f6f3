#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace owa {

/// Nonnegative weights summing to one. Immutable once constructed.
///
/// Construction accepts entries within 1e-12 of [0,1] (and snaps them into
/// the interval) and a sum within 1e-9 of one. Anything else throws
/// ValidationError; there is no implicit renormalization, use normalized()
/// for that.
class WeightVector {
 public:
  static constexpr double kEntryTolerance = 1e-12;
  static constexpr double kSumTolerance = 1e-9;

  explicit WeightVector(std::vector<double> weights);
  WeightVector(std::initializer_list<double> weights)
      : WeightVector(std::vector<double>(weights)) {}

  /// Scales nonnegative raw values so they sum to one.
  static WeightVector normalized(std::vector<double> raw);

  static WeightVector uniform(std::size_t n);
  /// W* = (1,0,...,0), the max operator.
  static WeightVector max(std::size_t n);
  /// W_* = (0,...,0,1), the min operator.
  static WeightVector min(std::size_t n);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> values() const noexcept { return weights_; }
  auto begin() const noexcept { return weights_.begin(); }
  auto end() const noexcept { return weights_.end(); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<double> weights_;
};

/// The collection a_1..a_n to aggregate.
class ArgumentVector {
 public:
  enum class Range { real_line, unit_interval };

  explicit ArgumentVector(std::vector<double> values, Range range = Range::real_line);
  ArgumentVector(std::initializer_list<double> values)
      : ArgumentVector(std::vector<double>(values)) {}

  static ArgumentVector unit_interval(std::vector<double> values) {
    return ArgumentVector(std::move(values), Range::unit_interval);
  }

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  bool is_unit_interval() const noexcept { return range_ == Range::unit_interval; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  /// Order statistics a_(1) >= ... >= a_(n) (stable on ties).
  std::vector<double> descending() const;

 private:
  std::vector<double> values_;
  Range range_;
};

/// sum_i w_i * a_(i) with a_(1) the largest argument.
double owa_aggregate(const ArgumentVector& args, const WeightVector& w);

/// sum_i w_i * a_i in argument order (weighted arithmetic aggregation).
double weighted_average(const ArgumentVector& args, const WeightVector& w);

/// Index reversal, w^_i = w_{n-i+1}.
WeightVector dual(const WeightVector& w);

bool is_symmetric(const WeightVector& w, double tolerance = 0.0);

/// sum_j (n-j)/(n-1) w_j. A single weight has orness 0.5.
double orness(const WeightVector& w);
double andness(const WeightVector& w);

/// Shannon entropy -sum w_i ln w_i, with 0 ln 0 = 0.
double dispersion(const WeightVector& w);

}  // namespace owa
