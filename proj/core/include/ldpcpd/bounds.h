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

// Finite-sample upper bounds on the miss probability beta of the offline
// change-point estimators at tolerance alpha, and the privacy-cost helpers
// built on them.
//
// Every bound has the shape
//
//   beta <= 2 min{ sum_{i=1}^{i*} exp(-2^{i-1} alpha C^2 / s^2),  B }
//
// with i* = max(1, ceil(log2((n - 1) / alpha))), where (s, C) and the second
// term B depend on the estimator. All reported betas are clipped to [0, 1].

#ifndef LDPCPD_BOUNDS_H_
#define LDPCPD_BOUNDS_H_

#include <cstddef>
#include <optional>

#include "ldpcpd/distribution.h"
#include "ldpcpd/mechanisms.h"

namespace ldpcpd {

struct BoundInputs {
  std::size_t n = 2;
  double alpha = 1.0;
  double s = 0.0;    // sensitivity, nats (may be +inf)
  double c = 0.0;    // min of the two KL divergences, nats
  double ich = 0.0;  // Chernoff information, nats
  std::optional<double> epsilon;
  std::optional<std::size_t> q;
  std::optional<double> dtv;
  std::optional<double> s_tau_gap;  // sum over S_tau* of |p0(x) - p1(x)|

  void Validate() const;
};

// Builds the non-private inputs (s, C, I_ch, d_TV) for a pmf pair.
BoundInputs InputsFromPair(const Distribution& p0, const Distribution& p1,
                           std::size_t n, double alpha);

enum class BoundRegime { kSeries, kSecond };

struct BoundReport {
  double bound_a = 0.0;         // the exponential series
  double bound_a_closed = 0.0;  // its geometric-sum relaxation
  double bound_b = 0.0;         // the second term
  double beta = 1.0;            // min(1, 2 min(bound_a, bound_b))
  BoundRegime regime = BoundRegime::kSeries;
  // Effective constants entering the series. For the non-private bound these
  // are (s, C); for the private ones (s_r, C_r) or (s_b, C~_b).
  double s_eff = 0.0;
  double c_eff = 0.0;
  // C_b for the binary mechanism (drives the second term); unset otherwise.
  std::optional<double> c_second;
};

// The constant in the binary-mechanism series term. kVerbatim uses the
// unsquared gap sum; kSquared squares it, for sensitivity analysis only.
enum class CtildeForm { kVerbatim, kSquared };

double Sensitivity(const Distribution& p0, const Distribution& p1);

// max(1, ceil(log2((n - 1) / alpha))).
int SeriesLength(std::size_t n, double alpha);

// sum_{i=1}^{i*} exp(-2^{i-1} alpha c^2 / s^2); +inf when s == 0.
double ExponentialSeries(std::size_t n, double alpha, double c, double s);

BoundReport TheoremNonPrivate(const BoundInputs& in);

// 2 min{ t (1 - t^M) / (1 - t), exp(-alpha I_ch) } with
// t = exp(-alpha C^2 / s^2), M = max(1, floor((n - 1) / alpha)); 1 when
// t >= 1. Clipped to [0, 1].
double CorollaryNonPrivateClosed(const BoundInputs& in);

// Randomized response: s_r = min(2 eps, tanh(eps/2) s),
// C_r = 2 ((e^eps - 1) / (e^eps + q - 1))^2 d_TV^2, second term
// (1 - C_r / 2)^(alpha / 2). Requires epsilon, q and dtv.
BoundReport TheoremRandomizedResponse(const BoundInputs& in);

// Binary mechanism: s_b = min(2 eps, tanh(eps/2) s),
// C_b = 2 tanh^2(eps/2) d_TV^2, C~_b = 2 tanh^2(eps/2) * gap. The series
// uses C~_b, the second term (1 - C_b / 2)^(alpha / 2). Requires epsilon,
// dtv and s_tau_gap.
BoundReport TheoremBinaryMechanism(const BoundInputs& in,
                                   CtildeForm form = CtildeForm::kVerbatim);

// Sum over S of |p0(x) - p1(x)| for the quantizer's set S.
double QuantizerGap(const Distribution& p0, const Distribution& p1,
                    const Quantizer& quantizer);

// tanh^2(eps / 2).
double PrivacyCostFactor(double epsilon);

// Error exponent -ln(beta / 2) / alpha.
double ErrorExponent(double alpha, double beta);

// Empirical beta with zero cells raised to 1 / (2 trials).
double FloorBeta(double beta, std::size_t trials);

}  // namespace ldpcpd

#endif  // LDPCPD_BOUNDS_H_
