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

// Strong data processing (contraction) coefficients
//
//   eta_D(W) = sup_{P0, P1} D(P0 W, P1 W) / D(P0, P1).
//
// Closed forms are provided for q-ary symmetric channels. For a general
// channel, EtaNumeric searches pairs supported on two input atoms, where the
// supremum is attained for Renyi orders in [1, inf] and for the order-inf
// Jeffreys divergence. EtaBruteforceOracle samples the whole simplex and is
// meant for validating the binary-support search on small channels.

#ifndef LDPCPD_SDPI_H_
#define LDPCPD_SDPI_H_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "ldpcpd/channel.h"
#include "ldpcpd/distribution.h"
#include "ldpcpd/divergence.h"

namespace ldpcpd {

struct SdpiWitness {
  Distribution p0;
  Distribution p1;
};

struct SdpiEstimate {
  double eta = 0.0;
  // Best input pair found by a numeric search; empty for closed forms.
  std::optional<SdpiWitness> witness;
  double achieved_ratio = 0.0;
  bool is_closed_form = false;
  // Every candidate ratio was 0/0 (e.g. all rows of W identical).
  bool degenerate = false;
};

// Which divergence the coefficient is taken for.
struct SdpiTarget {
  RenyiOrder rho{1.0};
  bool jeffreys = false;  // only supported with rho = inf
};

// Grid-then-refine parameters for EtaNumeric. The searched domain is
// (offset, 1 - offset)^2 per atom pair, so the result is a lower estimate of
// suprema that are only reached at the simplex boundary.
struct SearchParams {
  double boundary_offset = 1e-4;
  int resolution = 200;
  int refine_rounds = 3;
  double shrink = 10.0;
};

// Divergence used by the search, dispatching on `target`.
double TargetDivergence(const SdpiTarget& target, const Distribution& p,
                        const Distribution& q);

// Dobrushin coefficient |v - u|.
SdpiEstimate EtaTvSymmetric(const SymmetricChannelParams& params);
// Dobrushin coefficient of an arbitrary channel: the largest total
// variation between two rows. Exact, witnessed by a pair of point masses.
SdpiEstimate EtaTvDobrushin(const Channel& w);
// |v - u| / max(u, v).
SdpiEstimate EtaRenyiInfSymmetric(const SymmetricChannelParams& params);
// |v - u| / (v + u); tanh(eps / 2) for binary randomized response.
SdpiEstimate EtaJeffreysInfSymmetric(const SymmetricChannelParams& params);

SdpiEstimate EtaNumeric(const Channel& w, const SdpiTarget& target,
                        const SearchParams& search = {});

// Largest ratio over `samples` Dirichlet(1, ..., 1) pairs plus the points of
// a coarse simplex lattice. Ratios whose input divergence is below 1e-12 or
// infinite are skipped. Input alphabets larger than 4 are rejected.
double EtaBruteforceOracle(const Channel& w, const SdpiTarget& target,
                           std::size_t samples, std::uint64_t seed);

}  // namespace ldpcpd

#endif  // LDPCPD_SDPI_H_
