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

#ifndef LDPCPD_DISTRIBUTION_H_
#define LDPCPD_DISTRIBUTION_H_

#include <cstddef>
#include <span>
#include <vector>

namespace ldpcpd {

// A probability mass function over the finite alphabet {0, ..., size()-1}.
//
// The constructor accepts masses whose total is within 1e-9 of one and
// renormalizes them; anything further off, negative, or non-finite is
// rejected with DomainError.
class Distribution {
 public:
  explicit Distribution(std::vector<double> mass);

  // Ber(theta) is [1 - theta, theta]: theta is the mass on symbol 1.
  static Distribution Bernoulli(double theta);
  static Distribution PointMass(std::size_t size, std::size_t at);
  static Distribution Uniform(std::size_t size);

  std::size_t size() const { return mass_.size(); }
  double operator[](std::size_t x) const { return mass_[x]; }
  std::span<const double> mass() const { return mass_; }

  bool operator==(const Distribution&) const = default;

 private:
  std::vector<double> mass_;
};

// Throws DimensionError unless p and q live on the same alphabet.
void RequireSameAlphabet(const Distribution& p, const Distribution& q);

}  // namespace ldpcpd

#endif  // LDPCPD_DISTRIBUTION_H_
