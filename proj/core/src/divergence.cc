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

#include "ldpcpd/divergence.h"

#include <algorithm>
#include <cmath>
#include <span>

#include "divergence_kernels.h"
#include "ldpcpd/error.h"

namespace ldpcpd {
namespace {

constexpr double kLambdaLow = 1e-9;
constexpr double kLambdaHigh = 1.0 - 1e-9;
constexpr double kLambdaTolerance = 1e-10;

}  // namespace

namespace internal {

double TvKernel(std::span<const double> p, std::span<const double> q) {
  double sum = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) sum += std::abs(p[x] - q[x]);
  return std::clamp(0.5 * sum, 0.0, 1.0);
}

double KlKernel(std::span<const double> p, std::span<const double> q) {
  double sum = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] == 0.0) continue;
    if (q[x] == 0.0) return kInfinity;
    sum += p[x] * std::log(p[x] / q[x]);
  }
  return std::max(sum, 0.0);
}

double RenyiKernel(double rho, std::span<const double> p,
                   std::span<const double> q) {
  if (rho == kInfinity) {
    double best = 0.0;
    for (std::size_t x = 0; x < p.size(); ++x) {
      if (p[x] == 0.0) continue;
      if (q[x] == 0.0) return kInfinity;
      best = std::max(best, p[x] / q[x]);
    }
    return std::max(std::log(best), 0.0);
  }
  // Log-sum-exp over the support of p.
  double top = -kInfinity;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] == 0.0) continue;
    if (q[x] == 0.0) return kInfinity;
    top = std::max(top, rho * std::log(p[x]) + (1.0 - rho) * std::log(q[x]));
  }
  double acc = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] == 0.0) continue;
    acc += std::exp(rho * std::log(p[x]) + (1.0 - rho) * std::log(q[x]) - top);
  }
  return std::max((top + std::log(acc)) / (rho - 1.0), 0.0);
}

double LogMomentKernel(double lambda, std::span<const double> p,
                       std::span<const double> q) {
  double top = -kInfinity;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] == 0.0 || q[x] == 0.0) continue;
    top = std::max(top,
                   lambda * std::log(p[x]) + (1.0 - lambda) * std::log(q[x]));
  }
  if (top == -kInfinity) return -kInfinity;
  double acc = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] == 0.0 || q[x] == 0.0) continue;
    acc += std::exp(lambda * std::log(p[x]) + (1.0 - lambda) * std::log(q[x]) -
                    top);
  }
  return top + std::log(acc);
}

}  // namespace internal

RenyiOrder::RenyiOrder(double value) : value_(value) {
  if (!(value >= 1.0)) {
    throw DomainError("renyi order must be >= 1");
  }
}

double TvDistance(const Distribution& p, const Distribution& q) {
  RequireSameAlphabet(p, q);
  return internal::TvKernel(p.mass(), q.mass());
}

double KlDivergence(const Distribution& p, const Distribution& q) {
  RequireSameAlphabet(p, q);
  return internal::KlKernel(p.mass(), q.mass());
}

double RenyiDivergence(RenyiOrder rho, const Distribution& p,
                       const Distribution& q) {
  RequireSameAlphabet(p, q);
  if (rho.is_kl()) return internal::KlKernel(p.mass(), q.mass());
  return internal::RenyiKernel(rho.value(), p.mass(), q.mass());
}

double JeffreysRenyi(RenyiOrder rho, const Distribution& p,
                     const Distribution& q) {
  return RenyiDivergence(rho, p, q) + RenyiDivergence(rho, q, p);
}

double ChernoffLogMoment(double lambda, const Distribution& p,
                         const Distribution& q) {
  RequireSameAlphabet(p, q);
  return internal::LogMomentKernel(lambda, p.mass(), q.mass());
}

ChernoffInformation Chernoff(const Distribution& p, const Distribution& q) {
  RequireSameAlphabet(p, q);
  if (ChernoffLogMoment(0.5, p, q) == -kInfinity) {
    return {kInfinity, 0.5};
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = kLambdaLow;
  double hi = kLambdaHigh;
  double a = hi - inv_phi * (hi - lo);
  double b = lo + inv_phi * (hi - lo);
  double fa = ChernoffLogMoment(a, p, q);
  double fb = ChernoffLogMoment(b, p, q);
  while (hi - lo > kLambdaTolerance) {
    if (fa <= fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = ChernoffLogMoment(a, p, q);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = ChernoffLogMoment(b, p, q);
    }
  }
  const double lambda = 0.5 * (lo + hi);
  const double psi = std::min({ChernoffLogMoment(lambda, p, q), fa, fb});
  return {std::max(-psi, 0.0), lambda};
}

double FLambdaDivergence(double lambda, const Distribution& p,
                         const Distribution& q) {
  if (!(lambda > 0.0 && lambda < 1.0)) {
    throw DomainError("f_lambda divergence: lambda must lie in (0, 1)");
  }
  return 1.0 - std::exp(ChernoffLogMoment(lambda, p, q));
}

}  // namespace ldpcpd
