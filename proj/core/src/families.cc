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

#include "ldpcpd/families.h"

#include <cmath>
#include <numeric>
#include <sstream>

#include "ldpcpd/error.h"

namespace ldpcpd {
namespace {

Distribution Normalized(std::vector<double> weights) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw DomainError("family: weights do not normalize");
  }
  for (double& w : weights) w /= total;
  return Distribution(std::move(weights));
}

// Log-space weights keep large lambda or m from overflowing.
Distribution FromLogWeights(std::vector<double> log_w) {
  double top = -INFINITY;
  for (double v : log_w) top = std::max(top, v);
  for (double& v : log_w) v = std::exp(v - top);
  return Normalized(std::move(log_w));
}

struct Maker {
  Distribution operator()(const BernoulliFamily& f) const {
    return Distribution::Bernoulli(f.theta);
  }

  Distribution operator()(const BinomialFamily& f) const {
    if (!(f.p >= 0.0 && f.p <= 1.0)) {
      throw DomainError("binomial: p must lie in [0, 1]");
    }
    if (f.p == 0.0) return Distribution::PointMass(f.trials + 1, 0);
    if (f.p == 1.0) return Distribution::PointMass(f.trials + 1, f.trials);
    const double n = static_cast<double>(f.trials);
    std::vector<double> log_w(f.trials + 1);
    for (std::size_t k = 0; k <= f.trials; ++k) {
      const double kk = static_cast<double>(k);
      log_w[k] = std::lgamma(n + 1) - std::lgamma(kk + 1) -
                 std::lgamma(n - kk + 1) + kk * std::log(f.p) +
                 (n - kk) * std::log1p(-f.p);
    }
    return FromLogWeights(std::move(log_w));
  }

  Distribution operator()(const TruncatedPoissonFamily& f) const {
    if (!(f.lambda > 0.0) || !std::isfinite(f.lambda)) {
      throw DomainError("truncated poisson: lambda must be positive");
    }
    std::vector<double> log_w(f.m + 1);
    for (std::size_t k = 0; k <= f.m; ++k) {
      const double kk = static_cast<double>(k);
      log_w[k] = kk * std::log(f.lambda) - std::lgamma(kk + 1);
    }
    return FromLogWeights(std::move(log_w));
  }

  Distribution operator()(const TruncatedGeometricFamily& f) const {
    if (!(f.p > 0.0 && f.p <= 1.0)) {
      throw DomainError("truncated geometric: p must lie in (0, 1]");
    }
    if (f.p == 1.0) return Distribution::PointMass(f.m + 1, 0);
    std::vector<double> log_w(f.m + 1);
    for (std::size_t k = 0; k <= f.m; ++k) {
      log_w[k] = static_cast<double>(k) * std::log1p(-f.p) + std::log(f.p);
    }
    return FromLogWeights(std::move(log_w));
  }

  Distribution operator()(const ExplicitFamily& f) const {
    return Distribution(f.pmf);
  }
};

struct Labeler {
  std::string operator()(const BernoulliFamily& f) const {
    std::ostringstream s;
    s << "Ber(" << f.theta << ")";
    return s.str();
  }
  std::string operator()(const BinomialFamily& f) const {
    std::ostringstream s;
    s << "Bin(" << f.trials << "," << f.p << ")";
    return s.str();
  }
  std::string operator()(const TruncatedPoissonFamily& f) const {
    std::ostringstream s;
    s << "TPois(" << f.lambda << "," << f.m << ")";
    return s.str();
  }
  std::string operator()(const TruncatedGeometricFamily& f) const {
    std::ostringstream s;
    s << "TGeom(" << f.p << "," << f.m << ")";
    return s.str();
  }
  std::string operator()(const ExplicitFamily& f) const {
    return "Explicit(" + std::to_string(f.pmf.size()) + ")";
  }
};

}  // namespace

Distribution MakeFamily(const FamilySpec& spec) {
  return std::visit(Maker{}, spec);
}

std::string FamilyLabel(const FamilySpec& spec) {
  return std::visit(Labeler{}, spec);
}

}  // namespace ldpcpd
