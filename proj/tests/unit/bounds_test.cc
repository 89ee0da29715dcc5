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

#include "ldpcpd/bounds.h"

#include <cmath>

#include <gtest/gtest.h>

#include "ldpcpd/divergence.h"
#include "ldpcpd/error.h"
#include "ldpcpd/families.h"
#include "ldpcpd/mechanisms.h"
#include "test_util.h"

namespace ldpcpd {
namespace {

using ::ldpcpd::testing::RandomPmf;

BoundInputs Basic(std::size_t n, double alpha, double s, double c,
                  double ich) {
  BoundInputs in;
  in.n = n;
  in.alpha = alpha;
  in.s = s;
  in.c = c;
  in.ich = ich;
  return in;
}

TEST(SensitivityTest, Examples) {
  const auto p = Distribution({0.3, 0.7});
  EXPECT_EQ(Sensitivity(p, p), 0.0);
  EXPECT_NEAR(Sensitivity(Distribution::Bernoulli(0.1),
                          Distribution::Bernoulli(0.4)),
              1.79176, 1e-5);
  EXPECT_EQ(Sensitivity(Distribution({0.5, 0.5}), Distribution({1.0, 0.0})),
            kInfinity);
}

TEST(SensitivityTest, EqualsLogRatioSpread) {
  CounterRng rng(51);
  for (int i = 0; i < 50; ++i) {
    const auto p0 = RandomPmf(rng, 5);
    const auto p1 = RandomPmf(rng, 5);
    double hi = -kInfinity;
    double lo = kInfinity;
    for (std::size_t x = 0; x < 5; ++x) {
      hi = std::max(hi, std::log(p1[x] / p0[x]));
      lo = std::min(lo, std::log(p1[x] / p0[x]));
    }
    EXPECT_NEAR(Sensitivity(p0, p1), hi - lo, 1e-12);
  }
}

TEST(SeriesLengthTest, Examples) {
  EXPECT_EQ(SeriesLength(2000, 5), 9);
  EXPECT_EQ(SeriesLength(2000, 1999), 1);
  EXPECT_EQ(SeriesLength(2000, 2000), 1);
  EXPECT_EQ(SeriesLength(2, 1), 1);
}

TEST(TheoremNonPrivateTest, ChernoffTerm) {
  const auto r = TheoremNonPrivate(Basic(2000, 5, 1.0, 0.0, 0.51083));
  EXPECT_NEAR(2 * r.bound_b, 2 * std::exp(-5 * 0.51083), 1e-15);
  EXPECT_NEAR(2 * r.bound_b, 0.1556, 1e-4);
  EXPECT_EQ(r.regime, BoundRegime::kSecond);
}

TEST(TheoremNonPrivateTest, ZeroSeparationIsVacuous) {
  const auto r = TheoremNonPrivate(Basic(2000, 5, 1.0, 0.0, 0.0));
  EXPECT_DOUBLE_EQ(r.bound_a, 9.0);
  EXPECT_EQ(r.beta, 1.0);
}

TEST(TheoremNonPrivateTest, InfiniteSensitivityFallsBackToChernoff) {
  const auto p0 = Distribution({0.5, 0.5});
  BoundInputs in = InputsFromPair(p0, Distribution({1.0, 0.0}), 100, 10);
  EXPECT_EQ(in.s, kInfinity);
  const auto r = TheoremNonPrivate(in);
  EXPECT_GE(r.bound_a, 1.0);
  EXPECT_EQ(r.regime, BoundRegime::kSecond);
  EXPECT_NEAR(r.beta, std::min(1.0, 2 * std::exp(-10 * in.ich)), 1e-15);
}

TEST(TheoremNonPrivateTest, BetaIsClippedMin) {
  const auto r = TheoremNonPrivate(Basic(500, 20, 1.5, 0.4, 0.05));
  EXPECT_DOUBLE_EQ(r.beta, std::min(1.0, 2 * std::min(r.bound_a, r.bound_b)));
  EXPECT_THROW(TheoremNonPrivate(Basic(10, 11, 1, 1, 1)), DomainError);
  EXPECT_THROW(TheoremNonPrivate(Basic(10, 0.5, 1, 1, 1)), DomainError);
}

TEST(CorollaryTest, RelaxesTheorem) {
  CounterRng rng(52);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.Uniform() * 5000);
    const double alpha = 1 + rng.Uniform() * (n - 1);
    const auto in = Basic(n, alpha, 0.1 + 5 * rng.Uniform(),
                          2 * rng.Uniform(), rng.Uniform());
    const auto r = TheoremNonPrivate(in);
    EXPECT_GE(r.bound_a_closed, r.bound_a - 1e-12);
    EXPECT_GE(CorollaryNonPrivateClosed(in), r.beta - 1e-12);
  }
}

TEST(CorollaryTest, SingleTermAndLargeN) {
  // alpha close to n gives M = 1.
  const auto in = Basic(100, 60, 1.0, 0.1, 0.2);
  const double t = std::exp(-60 * 0.01);
  EXPECT_NEAR(CorollaryNonPrivateClosed(in),
              std::min(1.0, 2 * std::min(t, std::exp(-60 * 0.2))), 1e-15);
  const auto big = Basic(1000000000, 5, 1.0, 0.5, 0.0);
  const double tb = std::exp(-5 * 0.25);
  EXPECT_NEAR(TheoremNonPrivate(big).bound_a_closed, tb / (1 - tb), 1e-12);
  EXPECT_EQ(CorollaryNonPrivateClosed(Basic(100, 5, 1.0, 0.0, 0.0)), 1.0);
}

TEST(BoundsTest, NonIncreasingInAlpha) {
  const auto p0 = MakeFamily(TruncatedPoissonFamily{1, 10});
  const auto p1 = MakeFamily(TruncatedPoissonFamily{4, 10});
  const double gap = QuantizerGap(
      p0, p1, SelectTauStar(p0, p1, PrivacyBudget(1)).quantizer);
  double prev[4] = {2, 2, 2, 2};
  for (int a = 1; a <= 2000; ++a) {
    BoundInputs in = InputsFromPair(p0, p1, 2000, a);
    const double np = TheoremNonPrivate(in).beta;
    const double cor = CorollaryNonPrivateClosed(in);
    in.epsilon = 1.0;
    in.s_tau_gap = gap;
    const double rr = TheoremRandomizedResponse(in).beta;
    const double bm = TheoremBinaryMechanism(in).beta;
    const double now[4] = {np, cor, rr, bm};
    for (int k = 0; k < 4; ++k) {
      EXPECT_LE(now[k], prev[k] + 1e-15) << "alpha=" << a << " k=" << k;
      prev[k] = now[k];
    }
  }
}

TEST(TheoremRrTest, Constants) {
  const auto p0 = Distribution::Bernoulli(0.1);
  const auto p1 = Distribution::Bernoulli(0.4);
  BoundInputs in = InputsFromPair(p0, p1, 2000, 50);
  in.epsilon = 60.0;
  const auto r = TheoremRandomizedResponse(in);
  EXPECT_NEAR(r.c_eff, 2 * 0.09, 1e-12);
  EXPECT_NEAR(r.s_eff, in.s, 1e-12);
  in.epsilon = 1.3;
  EXPECT_NEAR(TheoremRandomizedResponse(in).c_eff,
              2 * PrivacyCostFactor(1.3) * 0.09, 1e-15);
  in.epsilon = 0.2;
  EXPECT_NEAR(TheoremRandomizedResponse(in).s_eff,
              std::min(0.4, std::tanh(0.1) * in.s), 1e-15);
  BoundInputs missing = InputsFromPair(p0, p1, 2000, 50);
  missing.q.reset();
  missing.epsilon = 1.0;
  EXPECT_THROW(TheoremRandomizedResponse(missing), DomainError);
}

TEST(TheoremBmTest, BinaryGapIsTotalVariation) {
  const auto p0 = Distribution::Bernoulli(0.1);
  const auto p1 = Distribution::Bernoulli(0.4);
  const auto sel = SelectTauStar(p0, p1, PrivacyBudget(1));
  EXPECT_NEAR(QuantizerGap(p0, p1, sel.quantizer), TvDistance(p0, p1), 1e-15);
}

TEST(TheoremBmTest, VanishingBudgetIsVacuous) {
  const auto p0 = MakeFamily(TruncatedPoissonFamily{1, 10});
  const auto p1 = MakeFamily(TruncatedPoissonFamily{4, 10});
  BoundInputs in = InputsFromPair(p0, p1, 2000, 50);
  in.epsilon = 1e-6;
  in.s_tau_gap = 0.5;
  const auto r = TheoremBinaryMechanism(in);
  EXPECT_LT(*r.c_second, 1e-11);
  EXPECT_EQ(r.beta, 1.0);
}

TEST(TheoremBmTest, SquaredVariantMatchesRrOnBinaryInputs) {
  const auto p0 = Distribution::Bernoulli(0.15);
  const auto p1 = Distribution::Bernoulli(0.55);
  for (double e : {0.3, 1.0, 3.0}) {
    for (double alpha : {5.0, 40.0, 300.0}) {
      BoundInputs in = InputsFromPair(p0, p1, 2000, alpha);
      in.epsilon = e;
      in.s_tau_gap = QuantizerGap(
          p0, p1, SelectTauStar(p0, p1, PrivacyBudget(e)).quantizer);
      const auto rr = TheoremRandomizedResponse(in);
      const auto sq = TheoremBinaryMechanism(in, CtildeForm::kSquared);
      EXPECT_NEAR(rr.bound_a, sq.bound_a, 1e-12);
      EXPECT_NEAR(rr.bound_b, sq.bound_b, 1e-12);
      EXPECT_NEAR(rr.beta, sq.beta, 1e-12);
      EXPECT_NEAR(rr.s_eff, sq.s_eff, 1e-12);
      // The verbatim form shares only the second term.
      const auto verbatim = TheoremBinaryMechanism(in);
      EXPECT_NEAR(rr.bound_b, verbatim.bound_b, 1e-12);
      EXPECT_NEAR(verbatim.c_eff, 2 * PrivacyCostFactor(e) * *in.s_tau_gap,
                  1e-15);
    }
  }
}

TEST(PrivacyCostTest, Examples) {
  EXPECT_NEAR(PrivacyCostFactor(2.0), 0.58003, 1e-5);
  EXPECT_NEAR(PrivacyCostFactor(100.0), 1.0, 1e-15);
  EXPECT_LT(PrivacyCostFactor(1e-8), 1e-16);
  EXPECT_THROW(PrivacyCostFactor(0.0), DomainError);
}

TEST(ErrorExponentTest, Examples) {
  EXPECT_NEAR(ErrorExponent(7.0, 2 * std::exp(-7.0)), 1.0, 1e-14);
  EXPECT_EQ(ErrorExponent(3.0, 2.0), 0.0);
  EXPECT_NEAR(ErrorExponent(50, 0.1), 0.05991, 1e-5);
  EXPECT_THROW(ErrorExponent(50, 0.0), DomainError);
  EXPECT_DOUBLE_EQ(FloorBeta(0.0, 10000), 5e-5);
  EXPECT_DOUBLE_EQ(FloorBeta(0.3, 10000), 0.3);
}

}  // namespace
}  // namespace ldpcpd
