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

#include "ldpcpd/mechanisms.h"

#include <algorithm>
#include <cmath>
#include <optional>

#include "ldpcpd/divergence.h"
#include "ldpcpd/error.h"

namespace ldpcpd {
namespace {

// Likelihood ratio p0/p1 for atoms with mass; nullopt for null atoms.
std::optional<double> Ratio(double a, double b) {
  if (a == 0.0 && b == 0.0) return std::nullopt;
  if (b == 0.0) return kInfinity;
  return a / b;
}

}  // namespace

Channel RandomizedResponseChannel(std::size_t q, PrivacyBudget eps) {
  return SymmetricChannelParams::RandomizedResponse(q, eps).ToChannel();
}

std::size_t Quantizer::SetSize() const {
  return static_cast<std::size_t>(std::count(in_s.begin(), in_s.end(), true));
}

Channel Quantizer::AsChannel() const {
  std::vector<double> entries(in_s.size() * 2, 0.0);
  for (std::size_t x = 0; x < in_s.size(); ++x) entries[2 * x + Bit(x)] = 1.0;
  return Channel(in_s.size(), 2, std::move(entries));
}

Quantizer MakeQuantizer(const Distribution& p0, const Distribution& p1,
                        double tau) {
  RequireSameAlphabet(p0, p1);
  if (!(tau > 0.0)) throw DomainError("quantizer: tau must be positive");
  Quantizer out{tau, std::vector<bool>(p0.size())};
  for (std::size_t x = 0; x < p0.size(); ++x) {
    out.in_s[x] = p0[x] >= tau * p1[x];
  }
  return out;
}

Channel BinaryMechanism(const Quantizer& quantizer, PrivacyBudget eps) {
  const double e = std::exp(eps.epsilon());
  const double keep = e / (e + 1.0);
  const double flip = 1.0 / (e + 1.0);
  std::vector<double> entries(quantizer.in_s.size() * 2);
  for (std::size_t x = 0; x < quantizer.in_s.size(); ++x) {
    const bool zero = quantizer.in_s[x];
    entries[2 * x] = zero ? keep : flip;
    entries[2 * x + 1] = zero ? flip : keep;
  }
  return Channel(quantizer.in_s.size(), 2, std::move(entries));
}

Channel BinaryMechanism(const Distribution& p0, const Distribution& p1,
                        double tau, PrivacyBudget eps) {
  return BinaryMechanism(MakeQuantizer(p0, p1, tau), eps);
}

TauSelection SelectTauStar(const Distribution& p0, const Distribution& p1,
                           PrivacyBudget eps) {
  RequireSameAlphabet(p0, p1);
  if (p0 == p1) {
    throw DomainError("tau selection: p0 == p1 has no informative quantizer");
  }

  std::vector<double> ratios;
  for (std::size_t x = 0; x < p0.size(); ++x) {
    if (auto r = Ratio(p0[x], p1[x])) ratios.push_back(*r);
  }
  std::sort(ratios.begin(), ratios.end());
  ratios.erase(std::unique(ratios.begin(), ratios.end()), ratios.end());

  double largest_finite = 0.0;
  for (double r : ratios) {
    if (std::isfinite(r)) largest_finite = std::max(largest_finite, r);
  }

  std::optional<TauSelection> best;
  for (std::size_t j = 0; j < ratios.size(); ++j) {
    const double r = ratios[j];
    // Ratio-zero atoms never enter S_tau for tau > 0.
    if (r == 0.0) continue;
    // Partition S = {x : ratio(x) >= r}, realized by any tau in
    // (previous ratio, r]; pick a point strictly inside.
    Quantizer quantizer{0.0, std::vector<bool>(p0.size())};
    for (std::size_t x = 0; x < p0.size(); ++x) {
      const auto rx = Ratio(p0[x], p1[x]);
      quantizer.in_s[x] = !rx || *rx >= r;
    }
    const double prev = j > 0 ? ratios[j - 1] : 0.0;
    if (std::isinf(r)) {
      quantizer.tau = largest_finite > 0.0 ? 2.0 * largest_finite : 1.0;
    } else if (prev > 0.0) {
      quantizer.tau = std::sqrt(prev * r);
    } else {
      quantizer.tau = 0.5 * r;
    }

    const Channel w = BinaryMechanism(quantizer, eps);
    const double ich = Chernoff(Pushforward(p0, w), Pushforward(p1, w)).value;
    const bool better =
        !best || ich > best->ich ||
        (ich == best->ich &&
         (quantizer.SetSize() < best->quantizer.SetSize() ||
          (quantizer.SetSize() == best->quantizer.SetSize() &&
           quantizer.tau < best->tau)));
    if (better) best = TauSelection{quantizer.tau, quantizer, ich};
  }
  // p0 != p1 guarantees at least one positive ratio.
  return *best;
}

bool VerifyLdp(const Channel& w, PrivacyBudget eps) {
  const double bound = std::exp(eps.epsilon());
  for (std::size_t y = 0; y < w.output_size(); ++y) {
    double lo = w(0, y);
    double hi = w(0, y);
    for (std::size_t x = 1; x < w.input_size(); ++x) {
      lo = std::min(lo, w(x, y));
      hi = std::max(hi, w(x, y));
    }
    if (hi > bound * lo + 1e-12) return false;
  }
  return true;
}

bool LdpDivergenceCapHolds(const Distribution& p0, const Distribution& p1,
                           const Channel& w, PrivacyBudget eps) {
  const double d = JeffreysRenyi(RenyiOrder::Infinity(), Pushforward(p0, w),
                                 Pushforward(p1, w));
  return d <= 2.0 * eps.epsilon() + 1e-9;
}

}  // namespace ldpcpd
