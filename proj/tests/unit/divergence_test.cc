// Copyright 2026 The ldpcpd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ldpcpd/divergence.h"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "ldpcpd/error.h"
#include "test_util.h"

namespace ldpcpd {
namespace {

using ::ldpcpd::testing::RandomPmf;

// Direct evaluation of psi on a lambda grid; the minimizer oracle.
double GridChernoff(const Distribution& p, const Distribution& q, int points) {
  double best = kInfinity;
  for (int i = 1; i < points; ++i) {
    const double lambda = static_cast<double>(i) / points;
    double s = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (p[x] > 0 && q[x] > 0) {
        s += std::pow(p[x], lambda) * std::pow(q[x], 1 - lambda);
      }
    }
    best = std::min(best, std::log(s));
  }
  return -best;
}

TEST(DistributionTest, RenormalizesWithinTolerance) {
  Distribution d({0.5, 0.5 + 5e-10});
  EXPECT_NEAR(d[0] + d[1], 1.0, 1e-15);
  EXPECT_THROW(Distribution({0.5, 0.6}), DomainError);
  EXPECT_THROW(Distribution({-0.1, 1.1}), DomainError);
  EXPECT_THROW(Distribution(std::vector<double>{}), DomainError);
}

TEST(DistributionTest, BernoulliPutsThetaOnSymbolOne) {
  const auto b = Distribution::Bernoulli(0.3);
  EXPECT_DOUBLE_EQ(b[0], 0.7);
  EXPECT_DOUBLE_EQ(b[1], 0.3);
}

TEST(TvTest, Examples) {
  EXPECT_EQ(TvDistance(Distribution::Bernoulli(0.2),
                       Distribution::Bernoulli(0.2)),
            0.0);
  EXPECT_NEAR(TvDistance(Distribution::Bernoulli(0.1),
                         Distribution::Bernoulli(0.4)),
              0.3, 1e-15);
  EXPECT_DOUBLE_EQ(TvDistance(Distribution::PointMass(2, 0),
                              Distribution::PointMass(2, 1)),
                   1.0);
  EXPECT_THROW(TvDistance(Distribution::Uniform(2), Distribution::Uniform(3)),
               DimensionError);
}

TEST(KlTest, Examples) {
  const auto p = Distribution::Bernoulli(0.5);
  EXPECT_EQ(KlDivergence(p, p), 0.0);
  EXPECT_NEAR(KlDivergence(p, Distribution::Bernoulli(0.25)),
              0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0), 1e-15);
  EXPECT_NEAR(KlDivergence(p, Distribution::Bernoulli(0.25)), 0.14384, 1e-5);
  EXPECT_EQ(KlDivergence(p, Distribution::Bernoulli(0.0)), kInfinity);
  // 0 ln(0 / q) contributes nothing.
  EXPECT_NEAR(KlDivergence(Distribution::PointMass(2, 0), p), std::log(2.0),
              1e-15);
}

TEST(RenyiTest, OrderOneDelegatesToKl) {
  CounterRng rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto p = RandomPmf(rng, 5);
    const auto q = RandomPmf(rng, 5);
    EXPECT_NEAR(RenyiDivergence(RenyiOrder(1.0), p, q), KlDivergence(p, q),
                1e-10);
  }
}

TEST(RenyiTest, InfiniteOrderUsesMaxRatio) {
  EXPECT_NEAR(RenyiDivergence(RenyiOrder::Infinity(),
                              Distribution::Bernoulli(0.5),
                              Distribution::Bernoulli(0.25)),
              std::log(2.0), 1e-15);
  const auto p = Distribution::Bernoulli(0.3);
  EXPECT_NEAR(RenyiDivergence(RenyiOrder(2.0), p, p), 0.0, 1e-15);
  EXPECT_THROW(RenyiOrder(0.5), DomainError);
  EXPECT_EQ(RenyiDivergence(RenyiOrder(2.0), p, Distribution::PointMass(2, 0)),
            kInfinity);
}

TEST(RenyiTest, FiniteOrderMatchesDefinition) {
  const auto p = Distribution({0.2, 0.5, 0.3});
  const auto q = Distribution({0.4, 0.4, 0.2});
  double s = 0.0;
  for (std::size_t x = 0; x < 3; ++x) s += p[x] * p[x] / q[x];
  EXPECT_NEAR(RenyiDivergence(RenyiOrder(2.0), p, q), std::log(s), 1e-14);
}

TEST(RenyiTest, MonotoneInOrder) {
  CounterRng rng(12);
  const std::vector<double> orders = {1.0, 1.2, 1.5, 2.0, 3.0, 10.0, kInfinity};
  for (int i = 0; i < 200; ++i) {
    const auto p = RandomPmf(rng, 4);
    const auto q = RandomPmf(rng, 4);
    for (std::size_t j = 1; j < orders.size(); ++j) {
      EXPECT_LE(RenyiDivergence(RenyiOrder(orders[j - 1]), p, q),
                RenyiDivergence(RenyiOrder(orders[j]), p, q) + 1e-9);
    }
  }
}

TEST(JeffreysTest, Examples) {
  const auto p = Distribution::Bernoulli(0.1);
  const auto q = Distribution::Bernoulli(0.4);
  const double expect = std::log(0.4 / 0.1) + std::log(0.9 / 0.6);
  EXPECT_NEAR(JeffreysRenyi(RenyiOrder::Infinity(), p, q), expect, 1e-14);
  EXPECT_NEAR(expect, 1.79176, 1e-5);
  EXPECT_NEAR(JeffreysRenyi(RenyiOrder(3.0), p, p), 0.0, 1e-15);
  CounterRng rng(13);
  for (int i = 0; i < 50; ++i) {
    const auto a = RandomPmf(rng, 3);
    const auto b = RandomPmf(rng, 3);
    EXPECT_DOUBLE_EQ(JeffreysRenyi(RenyiOrder(2.0), a, b),
                     JeffreysRenyi(RenyiOrder(2.0), b, a));
  }
}

TEST(ChernoffTest, SymmetricBernoulliPair) {
  const auto c = Chernoff(Distribution::Bernoulli(0.1),
                          Distribution::Bernoulli(0.9));
  EXPECT_NEAR(c.lambda, 0.5, 1e-8);
  EXPECT_NEAR(c.value, -std::log(0.6), 1e-12);
  EXPECT_NEAR(c.value,
              GridChernoff(Distribution::Bernoulli(0.1),
                           Distribution::Bernoulli(0.9), 10000),
              1e-8);
}

TEST(ChernoffTest, IdenticalAndDisjoint) {
  const auto p = Distribution({0.2, 0.3, 0.5});
  const auto c = Chernoff(p, p);
  EXPECT_NEAR(c.value, 0.0, 1e-15);
  EXPECT_GT(c.lambda, 0.0);
  EXPECT_LT(c.lambda, 1.0);
  EXPECT_EQ(Chernoff(Distribution::PointMass(2, 0),
                     Distribution::PointMass(2, 1))
                .value,
            kInfinity);
}

TEST(ChernoffTest, SymmetricInArguments) {
  CounterRng rng(14);
  for (int i = 0; i < 100; ++i) {
    const auto p = RandomPmf(rng, 4);
    const auto q = RandomPmf(rng, 4);
    EXPECT_NEAR(Chernoff(p, q).value, Chernoff(q, p).value, 1e-9);
  }
}

TEST(ChernoffTest, MatchesDenseLambdaGrid) {
  CounterRng rng(15);
  for (int i = 0; i < 10; ++i) {
    const auto p = RandomPmf(rng, 5);
    const auto q = RandomPmf(rng, 5);
    // The grid can only undershoot the true minimum of psi.
    const double grid = GridChernoff(p, q, 100000);
    EXPECT_NEAR(Chernoff(p, q).value, grid, 1e-8);
  }
}

TEST(FLambdaTest, Examples) {
  const auto p = Distribution::Bernoulli(0.1);
  const auto q = Distribution::Bernoulli(0.9);
  EXPECT_NEAR(FLambdaDivergence(0.5, p, q), 0.4, 1e-15);
  EXPECT_NEAR(FLambdaDivergence(0.3, p, p), 0.0, 1e-15);
  EXPECT_THROW(FLambdaDivergence(0.0, p, q), DomainError);
  EXPECT_THROW(FLambdaDivergence(1.0, p, q), DomainError);
}

TEST(FLambdaTest, RecoversChernoffInformation) {
  CounterRng rng(16);
  for (int i = 0; i < 20; ++i) {
    const auto p = RandomPmf(rng, 4);
    const auto q = RandomPmf(rng, 4);
    double best = 0.0;
    for (int k = 1; k < 10000; ++k) {
      best = std::max(best, FLambdaDivergence(k / 10000.0, p, q));
    }
    EXPECT_NEAR(-std::log(1.0 - best), Chernoff(p, q).value, 1e-6);
  }
}

TEST(InequalityTest, PinskerAndChernoffTv) {
  CounterRng rng(17);
  for (int i = 0; i < 2000; ++i) {
    const auto p = RandomPmf(rng, 2 + i % 6);
    const auto q = RandomPmf(rng, 2 + i % 6);
    const double tv = TvDistance(p, q);
    EXPECT_LE(tv, std::sqrt(0.5 * KlDivergence(p, q)) + 1e-12);
    EXPECT_GE(Chernoff(p, q).value, -0.5 * std::log(1.0 - tv * tv) - 1e-9);
  }
}

}  // namespace
}  // namespace ldpcpd
