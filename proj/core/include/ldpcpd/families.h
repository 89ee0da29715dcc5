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

#ifndef LDPCPD_FAMILIES_H_
#define LDPCPD_FAMILIES_H_

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "ldpcpd/distribution.h"

namespace ldpcpd {

struct BernoulliFamily {
  double theta;
};
struct BinomialFamily {
  std::size_t trials;
  double p;
};
// Poisson(lambda) restricted to {0, ..., m} and renormalized.
struct TruncatedPoissonFamily {
  double lambda;
  std::size_t m;
};
// Geometric (1 - p)^k p restricted to {0, ..., m} and renormalized.
struct TruncatedGeometricFamily {
  double p;
  std::size_t m;
};
struct ExplicitFamily {
  std::vector<double> pmf;
};

using FamilySpec =
    std::variant<BernoulliFamily, BinomialFamily, TruncatedPoissonFamily,
                 TruncatedGeometricFamily, ExplicitFamily>;

Distribution MakeFamily(const FamilySpec& spec);

// Short human label, e.g. "TPois(1,10)".
std::string FamilyLabel(const FamilySpec& spec);

}  // namespace ldpcpd

#endif  // LDPCPD_FAMILIES_H_
