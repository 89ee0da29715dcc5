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

#include "ldpcpd/distribution.h"

#include <cmath>
#include <numeric>
#include <string>

#include "ldpcpd/error.h"

namespace ldpcpd {
namespace {

constexpr double kRenormalizeTolerance = 1e-9;

}  // namespace

Distribution::Distribution(std::vector<double> mass) : mass_(std::move(mass)) {
  if (mass_.empty()) {
    throw DomainError("distribution: alphabet must have at least one symbol");
  }
  for (std::size_t x = 0; x < mass_.size(); ++x) {
    if (!std::isfinite(mass_[x]) || mass_[x] < 0.0) {
      throw DomainError("distribution: mass[" + std::to_string(x) +
                        "] is negative or not finite");
    }
  }
  const double total = std::accumulate(mass_.begin(), mass_.end(), 0.0);
  if (std::abs(total - 1.0) > kRenormalizeTolerance) {
    throw DomainError("distribution: masses sum to " + std::to_string(total) +
                      ", expected 1");
  }
  for (double& m : mass_) m /= total;
}

Distribution Distribution::Bernoulli(double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw DomainError("bernoulli: theta must lie in [0, 1]");
  }
  return Distribution({1.0 - theta, theta});
}

Distribution Distribution::PointMass(std::size_t size, std::size_t at) {
  if (at >= size) throw DomainError("point mass: atom outside alphabet");
  std::vector<double> mass(size, 0.0);
  mass[at] = 1.0;
  return Distribution(std::move(mass));
}

Distribution Distribution::Uniform(std::size_t size) {
  if (size == 0) throw DomainError("uniform: empty alphabet");
  return Distribution(
      std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

void RequireSameAlphabet(const Distribution& p, const Distribution& q) {
  if (p.size() != q.size()) {
    throw DimensionError("alphabet mismatch: " + std::to_string(p.size()) +
                         " vs " + std::to_string(q.size()) + " symbols");
  }
}

}  // namespace ldpcpd
