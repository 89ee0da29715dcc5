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

// Locally differentially private mechanisms: q-ary randomized response and
// the likelihood-ratio binary mechanism.

#ifndef LDPCPD_MECHANISMS_H_
#define LDPCPD_MECHANISMS_H_

#include <cstddef>
#include <vector>

#include "ldpcpd/channel.h"
#include "ldpcpd/distribution.h"

namespace ldpcpd {

// Diagonal e^eps / (e^eps + q - 1), off-diagonal 1 / (e^eps + q - 1).
Channel RandomizedResponseChannel(std::size_t q, PrivacyBudget eps);

// Deterministic map of the input alphabet onto one bit. Symbols in
// S_tau = {x : p0(x) >= tau * p1(x)} go to bit 0, the rest to bit 1.
struct Quantizer {
  double tau;
  std::vector<bool> in_s;

  std::size_t Bit(std::size_t x) const { return in_s[x] ? 0 : 1; }
  std::size_t SetSize() const;
  // The 0/1 channel Z_tau from the input alphabet to {0, 1}.
  Channel AsChannel() const;
};

Quantizer MakeQuantizer(const Distribution& p0, const Distribution& p1,
                        double tau);

// Z_tau followed by binary randomized response at budget eps.
Channel BinaryMechanism(const Quantizer& quantizer, PrivacyBudget eps);
Channel BinaryMechanism(const Distribution& p0, const Distribution& p1,
                        double tau, PrivacyBudget eps);

struct TauSelection {
  double tau;
  Quantizer quantizer;
  double ich;  // Chernoff information of the induced binary pair
};

// Maximizes the post-privatization Chernoff information over tau > 0.
//
// The objective only changes where tau crosses a likelihood ratio
// p0(x)/p1(x), so every distinct partition is enumerated exactly. Ties go to
// the smallest |S_tau|, then the smallest tau. The returned tau is an
// interior representative of its partition (geometric midpoint between
// neighbouring ratios). Throws DomainError when p0 == p1.
TauSelection SelectTauStar(const Distribution& p0, const Distribution& p1,
                           PrivacyBudget eps);

// Entrywise check W(y|x) <= e^eps W(y|x') + 1e-12 for all x, x', y.
bool VerifyLdp(const Channel& w, PrivacyBudget eps);

// Whether the projective distance of the outputs stays within 2 eps + 1e-9.
bool LdpDivergenceCapHolds(const Distribution& p0, const Distribution& p1,
                           const Channel& w, PrivacyBudget eps);

}  // namespace ldpcpd

#endif  // LDPCPD_MECHANISMS_H_
