#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "owa/elliptical.hpp"
#include "owa/errors.hpp"
#include "owa/weightgen.hpp"

namespace owa {
namespace {

using testing::Sampler;

std::vector<DensityGenerator> families() {
  return {DensityGenerator::cauchy(),   DensityGenerator::exponential_power(1.0, 1.0),
          DensityGenerator::laplace(),  DensityGenerator::logistic(),
          DensityGenerator::normal(),   DensityGenerator::student_t(3)};
}

std::vector<DensityGenerator> decreasing_generators() {
  std::vector<DensityGenerator> out = families();
  out.push_back(DensityGenerator::exponential_power(0.5, 0.75));
  out.push_back(DensityGenerator::exponential_power(2.0, 1.5));
  out.push_back(DensityGenerator::student_t(1));
  out.push_back(DensityGenerator::student_t(10));
  return out;
}

void expect_weights(const WeightVector& w, const std::vector<double>& expected, double tol) {
  ASSERT_EQ(w.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(w[i], expected[i], tol) << i;
}

const double kNormalMiddle = 1.0 / (1.0 + 2.0 * std::exp(-0.75));
const double kNormalSide = std::exp(-0.75) * kNormalMiddle;

TEST(DensityGenerator, Examples) {
  EXPECT_DOUBLE_EQ(DensityGenerator::cauchy()(1.0), 0.5);
  EXPECT_DOUBLE_EQ(DensityGenerator::normal()(2.0), std::exp(-1.0));
  EXPECT_DOUBLE_EQ(DensityGenerator::laplace()(0.5), std::exp(-0.5));
  EXPECT_DOUBLE_EQ(DensityGenerator::logistic()(0.0), 0.25);
  EXPECT_DOUBLE_EQ(DensityGenerator::exponential_power(2.0, 0.5)(4.0), std::exp(-4.0));
  EXPECT_NEAR(DensityGenerator::student_t(3)(3.0), std::pow(2.0, -2.0), 1e-15);
  for (double u : {0.0, 0.3, 1.0, 7.5, 100.0}) {
    EXPECT_NEAR(DensityGenerator::student_t(1)(u), DensityGenerator::cauchy()(u), 1e-15);
  }
}

TEST(DensityGenerator, Validation) {
  EXPECT_THROW(DensityGenerator::normal()(-0.1), DomainError);
  EXPECT_THROW(DensityGenerator::exponential_power(0.0, 1.0), ValidationError);
  EXPECT_THROW(DensityGenerator::exponential_power(1.0, -1.0), ValidationError);
  EXPECT_THROW(DensityGenerator::student_t(0), ValidationError);
  EXPECT_THROW(UnitDensity(DensityGenerator::normal(), 0.0), ValidationError);
  EXPECT_EQ(DensityGenerator::student_t(4).family_name(), "student-t");
  EXPECT_EQ(DensityGenerator::student_t(4).degrees_of_freedom(), 4);
}

TEST(DensityGenerator, PositiveAndStrictlyDecreasing) {
  for (const DensityGenerator& g : decreasing_generators()) {
    double prev = g(0.0);
    EXPECT_GT(prev, 0.0);
    for (int k = 1; k <= 200; ++k) {
      const double cur = g(0.05 * k);
      EXPECT_GT(cur, 0.0) << g.describe();
      EXPECT_LT(cur, prev) << g.describe() << " u=" << 0.05 * k;
      prev = cur;
    }
  }
}

TEST(PositionStats, Examples) {
  EXPECT_EQ(position_stats(3).mean, 2.0);
  EXPECT_NEAR(position_stats(3).variance, 2.0 / 3.0, 1e-15);
  EXPECT_EQ(position_stats(1).mean, 1.0);
  EXPECT_EQ(position_stats(1).variance, 0.0);
  EXPECT_EQ(position_stats(5).mean, 3.0);
  EXPECT_EQ(position_stats(5).variance, 2.0);
}

TEST(PositionStats, MatchesDirectSum) {
  for (std::size_t n = 1; n <= 40; ++n) {
    double mean = 0.0;
    for (std::size_t i = 1; i <= n; ++i) mean += static_cast<double>(i);
    mean /= n;
    double var = 0.0;
    for (std::size_t i = 1; i <= n; ++i) var += (i - mean) * (i - mean);
    var /= n;
    EXPECT_NEAR(position_stats(n).mean, mean, 1e-12);
    EXPECT_NEAR(position_stats(n).variance, var, 1e-10);
  }
}

TEST(PositionWeights, Examples) {
  expect_weights(position_weights(DensityGenerator::normal(), 3), {kNormalSide, kNormalMiddle, kNormalSide},
                 1e-15);
  expect_weights(position_weights(DensityGenerator::normal(), 3), {0.242896, 0.514209, 0.242896}, 1e-6);
  expect_weights(position_weights(DensityGenerator::cauchy(), 3), {2.0 / 9, 5.0 / 9, 2.0 / 9}, 1e-15);
  for (const DensityGenerator& g : families()) {
    EXPECT_EQ(position_weights(g, 1), WeightVector{1.0});
  }
}

TEST(PositionWeights, MatchesDirectFormula) {
  for (const DensityGenerator& g : families()) {
    for (std::size_t n = 2; n <= 20; ++n) {
      const double mu = (n + 1.0) / 2.0;
      const double sigma = std::sqrt((n * n - 1.0) / 12.0);
      std::vector<double> raw(n);
      for (std::size_t i = 1; i <= n; ++i) {
        const double z = (i - mu) / sigma;
        raw[i - 1] = g(z * z);
      }
      const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
      for (double& x : raw) x /= total;
      expect_weights(position_weights(g, n), raw, 1e-14);
    }
  }
}

TEST(PositionWeights, SymmetricUnimodalHalfOrness) {
  for (const DensityGenerator& g : decreasing_generators()) {
    for (std::size_t n = 1; n <= 50; ++n) {
      const WeightVector w = position_weights(g, n);
      EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-12);
      for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(w[i], w[n - 1 - i], 1e-12);
      const std::size_t half = (n + 1) / 2;
      for (std::size_t i = 1; i < half; ++i) EXPECT_GE(w[i], w[i - 1]) << g.describe() << " n=" << n;
      for (std::size_t i = half; i < n; ++i) EXPECT_LE(w[i], w[i - 1]) << g.describe() << " n=" << n;
      const double peak = *std::max_element(w.begin(), w.end());
      EXPECT_EQ(w[(n - 1) / 2], peak);
      EXPECT_EQ(w[n / 2], peak);
      EXPECT_NEAR(orness(w), 0.5, 1e-12);
    }
  }
}

TEST(PositionWeights, ScaleInvariance) {
  Sampler s(4);
  for (const DensityGenerator& g : families()) {
    for (int t = 0; t < 20; ++t) {
      const double c = std::exp(s.uniform(-10.0, 10.0));
      const std::size_t n = s.index(1, 30);
      const WeightVector base = position_weights(g, n);
      const WeightVector scaled = position_weights([&](double u) { return c * g(u); }, n);
      for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(scaled[i], base[i], 1e-15);
    }
  }
}

TEST(ArgumentWeights, Examples) {
  expect_weights(gaussian_argument_weights({4.0, 4.0, 4.0}), {1.0 / 3, 1.0 / 3, 1.0 / 3}, 1e-15);
  expect_weights(gaussian_argument_weights({1.0, 2.0, 3.0}), {0.242896, 0.514209, 0.242896}, 1e-6);
  const WeightVector w = gaussian_argument_weights({5.0, 1.0, 5.0});
  EXPECT_EQ(w[0], w[2]);
  EXPECT_GT(w[0], w[1]);
  for (const DensityGenerator& g : families()) {
    expect_weights(argument_weights(g, {7.0, 7.0}), {0.5, 0.5}, 0.0);
  }
}

TEST(ArgumentWeights, GaussianAliasIsIdentical) {
  Sampler s(9);
  for (int t = 0; t < 100; ++t) {
    const ArgumentVector args(s.values(s.index(1, 12), -4.0, 4.0));
    EXPECT_EQ(gaussian_argument_weights(args), argument_weights(DensityGenerator::normal(), args));
  }
}

TEST(ArgumentWeights, FollowsArgumentOrderAndPopulationSigma) {
  Sampler s(10);
  for (int t = 0; t < 100; ++t) {
    const std::vector<double> a = s.values(s.index(2, 10), -4.0, 4.0);
    const double n = static_cast<double>(a.size());
    const double mu = std::accumulate(a.begin(), a.end(), 0.0) / n;
    double var = 0.0;
    for (double x : a) var += (x - mu) * (x - mu);
    const double sigma = std::sqrt(var / n);
    std::vector<double> raw;
    for (double x : a) raw.push_back(std::exp(-0.5 * ((x - mu) / sigma) * ((x - mu) / sigma)));
    const double total = std::accumulate(raw.begin(), raw.end(), 0.0);
    for (double& x : raw) x /= total;
    expect_weights(gaussian_argument_weights(ArgumentVector(a)), raw, 1e-13);
  }
}

TEST(QuantifierFromDensity, Examples) {
  for (const DensityGenerator& g : families()) {
    const Quantifier q = quantifier_from_density(UnitDensity(g));
    EXPECT_EQ(q(0.0), 0.0);
    EXPECT_NEAR(q(1.0), 1.0, 1e-12);
    EXPECT_NEAR(q(0.5), 0.5, 1e-8) << g.describe();
  }
  const WeightVector w = weights_from_quantifier(quantifier_from_density(UnitDensity(DensityGenerator::normal())), 5);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(w[i], w[4 - i], 1e-9);
  EXPECT_GT(w[2], w[1]);
  EXPECT_GT(w[1], w[0]);
}

TEST(QuantifierFromDensity, MatchesFixedGridOracle) {
  for (const DensityGenerator& g : families()) {
    for (double scale : {0.1, 0.2, 0.5}) {
      const UnitDensity h(g, scale);
      const Quantifier q = quantifier_from_density(h);
      const auto f = [&](double y) { return g(((y - 0.5) / scale) * ((y - 0.5) / scale)); };
      const double total = testing::composite_simpson(f, 0.0, 1.0);
      for (double x : {0.05, 0.2, 0.37, 0.5, 0.81, 0.99}) {
        EXPECT_NEAR(q(x), testing::composite_simpson(f, 0.0, x) / total, 1e-8)
            << g.describe() << " scale=" << scale << " x=" << x;
      }
    }
  }
}

TEST(QuantifierFromDensity, SymmetricAboutHalf) {
  Sampler s(66);
  for (const DensityGenerator& g : families()) {
    const Quantifier q = quantifier_from_density(UnitDensity(g, s.uniform(0.05, 1.0)));
    for (int t = 0; t < 50; ++t) {
      const double x = s.uniform(0.0, 0.5);
      EXPECT_NEAR(q(0.5 + x) + q(0.5 - x), 1.0, 1e-8);
    }
  }
}

TEST(QuantifierFromDensity, SelfDual) {
  Sampler s(42);
  for (const DensityGenerator& g : decreasing_generators()) {
    const Quantifier q = quantifier_from_density(UnitDensity(g));
    for (std::size_t n = 1; n <= 12; ++n) {
      const WeightVector w = weights_from_quantifier(q, n);
      const WeightVector dw = dual_weights_from_quantifier(q, n);
      for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(w[i], dw[i], 1e-8);
    }
    for (int t = 0; t < 30; ++t) {
      const ProbabilityVector p(s.simplex(s.index(1, 10), 0.2));
      const WeightVector w = wowa_weights(q, p);
      const WeightVector dw = dual_wowa_weights(q, p);
      for (std::size_t i = 0; i < w.size(); ++i) EXPECT_NEAR(w[i], dw[i], 1e-8);
    }
  }
}

TEST(IsCentered, Examples) {
  EXPECT_TRUE(is_centered(WeightVector{0.2, 0.6, 0.2}));
  EXPECT_FALSE(is_centered(WeightVector{0.6, 0.2, 0.2}));
  EXPECT_TRUE(is_centered(position_weights(DensityGenerator::normal(), 7)));
  EXPECT_TRUE(is_centered(WeightVector{1.0}));
  EXPECT_TRUE(is_centered(WeightVector{0.5, 0.5}));
  EXPECT_TRUE(is_centered(WeightVector{0.1, 0.4, 0.4, 0.1}));
  EXPECT_FALSE(is_centered(WeightVector{0.0, 1.0, 0.0}));
  EXPECT_FALSE(is_centered(WeightVector::uniform(3)));
  EXPECT_FALSE(is_centered(WeightVector{0.3, 0.2, 0.2, 0.3}));
  EXPECT_FALSE(is_centered(WeightVector{0.1, 0.1, 0.3, 0.3, 0.1, 0.1}));
}

TEST(IsCentered, DensityQuantifiersGenerateCenteredWeights) {
  for (const DensityGenerator& g : decreasing_generators()) {
    for (double scale : {0.2, 0.35, 0.7}) {
      const Quantifier q = quantifier_from_density(UnitDensity(g, scale));
      for (std::size_t n = 3; n <= 15; ++n) {
        EXPECT_TRUE(is_centered(weights_from_quantifier(q, n)))
            << g.describe() << " scale=" << scale << " n=" << n;
      }
    }
  }
}

TEST(IsCentered, PositionWeightsAreCentered) {
  for (const DensityGenerator& g : decreasing_generators()) {
    for (std::size_t n = 1; n <= 25; ++n) {
      EXPECT_TRUE(is_centered(position_weights(g, n))) << g.describe() << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace owa
