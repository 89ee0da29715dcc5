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

#ifndef LDPCPD_TESTS_TEST_UTIL_H_
#define LDPCPD_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <vector>

#include "ldpcpd/channel.h"
#include "ldpcpd/distribution.h"
#include "ldpcpd/rng.h"

namespace ldpcpd::testing {

// Dirichlet(1, ..., 1) draw via normalized exponentials.
inline Distribution RandomPmf(CounterRng& rng, std::size_t size) {
  std::vector<double> w(size);
  double total = 0.0;
  for (double& v : w) {
    v = -std::log(1.0 - rng.Uniform());
    total += v;
  }
  for (double& v : w) v /= total;
  return Distribution(std::move(w));
}

inline Channel RandomChannel(CounterRng& rng, std::size_t in,
                             std::size_t out) {
  std::vector<std::vector<double>> rows;
  for (std::size_t x = 0; x < in; ++x) {
    const Distribution r = RandomPmf(rng, out);
    rows.emplace_back(r.mass().begin(), r.mass().end());
  }
  return Channel(rows);
}

}  // namespace ldpcpd::testing

#endif  // LDPCPD_TESTS_TEST_UTIL_H_
