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

// Divergences between pmfs on a common finite alphabet.
//
// Every value is in nats. A divergence is +infinity exactly when an
// absolute-continuity violation occurs on the support that matters for it;
// such values are represented by std::numeric_limits<double>::infinity().
// Terms with p(x) = q(x) = 0 are skipped and 0^a * t^b is taken as 0.

#ifndef LDPCPD_DIVERGENCE_H_
#define LDPCPD_DIVERGENCE_H_

#include <limits>

#include "ldpcpd/distribution.h"

namespace ldpcpd {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Order of a Renyi divergence, rho in [1, inf]. Order 1 is KL.
class RenyiOrder {
 public:
  explicit RenyiOrder(double value);
  static RenyiOrder Infinity() { return RenyiOrder(kInfinity); }

  double value() const { return value_; }
  bool is_infinite() const { return value_ == kInfinity; }
  bool is_kl() const { return value_ == 1.0; }

 private:
  double value_;
};

double TvDistance(const Distribution& p, const Distribution& q);

double KlDivergence(const Distribution& p, const Distribution& q);

// D_rho(p || q). Order infinity is ln max_{p(x)>0} p(x)/q(x).
double RenyiDivergence(RenyiOrder rho, const Distribution& p,
                       const Distribution& q);

// D_rho(p || q) + D_rho(q || p). At order infinity this is the projective
// distance, which also equals the GLRT sensitivity.
double JeffreysRenyi(RenyiOrder rho, const Distribution& p,
                     const Distribution& q);

// psi(lambda) = ln sum_x p(x)^lambda q(x)^(1-lambda); -inf when p and q have
// disjoint supports. Convex in lambda.
double ChernoffLogMoment(double lambda, const Distribution& p,
                         const Distribution& q);

struct ChernoffInformation {
  double value;   // -min psi, nats
  double lambda;  // the minimizer
};

// Golden-section search of psi on [1e-9, 1 - 1e-9] down to a bracket of
// 1e-10. Disjoint supports give +infinity.
ChernoffInformation Chernoff(const Distribution& p, const Distribution& q);

// D_{f_lambda}(p || q) with f_lambda(t) = 1 - t^lambda, lambda in (0, 1).
double FLambdaDivergence(double lambda, const Distribution& p,
                         const Distribution& q);

}  // namespace ldpcpd

#endif  // LDPCPD_DIVERGENCE_H_
