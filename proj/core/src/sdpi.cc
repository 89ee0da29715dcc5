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

#include "ldpcpd/sdpi.h"

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "divergence_kernels.h"
#include "ldpcpd/error.h"
#include "ldpcpd/rng.h"

namespace ldpcpd {
namespace {

constexpr double kMinInputDivergence = 1e-12;
constexpr std::size_t kMaxOracleInputs = 4;
constexpr int kLatticeDenominator = 4;
constexpr int kRefinePoints = 21;

double Kernel(const SdpiTarget& target, std::span<const double> p,
              std::span<const double> q) {
  const double rho = target.rho.value();
  if (target.jeffreys) {
    return internal::RenyiKernel(rho, p, q) + internal::RenyiKernel(rho, q, p);
  }
  if (target.rho.is_kl()) return internal::KlKernel(p, q);
  return internal::RenyiKernel(rho, p, q);
}

void CheckTarget(const SdpiTarget& target) {
  if (target.jeffreys && !target.rho.is_infinite()) {
    throw DomainError(
        "sdpi: the Jeffreys search is only supported at order inf");
  }
}

// Output pmf of the input pmf `p` through `w`, written into `out`.
void Push(const Channel& w, std::span<const double> p, std::span<double> out) {
  std::fill(out.begin(), out.end(), 0.0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] == 0.0) continue;
    const auto r = w.row(x);
    for (std::size_t y = 0; y < out.size(); ++y) out[y] += p[x] * r[y];
  }
}

// Output/input divergence ratio for a pair of pmfs; negative when the pair
// is excluded (input divergence tiny or infinite).
class RatioEvaluator {
 public:
  RatioEvaluator(const Channel& w, const SdpiTarget& target)
      : w_(w),
        target_(target),
        q0_(w.output_size()),
        q1_(w.output_size()) {}

  double operator()(std::span<const double> p0, std::span<const double> p1) {
    const double in = Kernel(target_, p0, p1);
    if (!(in >= kMinInputDivergence) || std::isinf(in)) return -1.0;
    Push(w_, p0, q0_);
    Push(w_, p1, q1_);
    return Kernel(target_, q0_, q1_) / in;
  }

 private:
  const Channel& w_;
  const SdpiTarget& target_;
  std::vector<double> q0_;
  std::vector<double> q1_;
};

SdpiEstimate ClosedForm(double eta) {
  SdpiEstimate out;
  out.eta = eta;
  out.achieved_ratio = eta;
  out.is_closed_form = true;
  return out;
}

// Every composition of `total` into `parts` non-negative integers.
void Compositions(int total, std::size_t parts, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (current.size() + 1 == parts) {
    current.push_back(total);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int k = 0; k <= total; ++k) {
    current.push_back(k);
    Compositions(total - k, parts, current, out);
    current.pop_back();
  }
}

void SampleDirichletOnes(CounterRng& rng, std::span<double> out) {
  double total = 0.0;
  for (double& v : out) {
    // 1 - U lies in (0, 1], so the log is finite.
    v = -std::log(1.0 - rng.Uniform());
    total += v;
  }
  for (double& v : out) v /= total;
}

}  // namespace

double TargetDivergence(const SdpiTarget& target, const Distribution& p,
                        const Distribution& q) {
  CheckTarget(target);
  RequireSameAlphabet(p, q);
  return Kernel(target, p.mass(), q.mass());
}

SdpiEstimate EtaTvSymmetric(const SymmetricChannelParams& params) {
  params.Validate();
  return ClosedForm(std::abs(params.v - params.u));
}

SdpiEstimate EtaTvDobrushin(const Channel& w) {
  SdpiEstimate out = ClosedForm(0.0);
  for (std::size_t a = 0; a < w.input_size(); ++a) {
    for (std::size_t b = a + 1; b < w.input_size(); ++b) {
      const double tv = internal::TvKernel(w.row(a), w.row(b));
      if (tv > out.eta) {
        out.eta = tv;
        out.witness = SdpiWitness{
            Distribution::PointMass(w.input_size(), a),
            Distribution::PointMass(w.input_size(), b)};
      }
    }
  }
  out.achieved_ratio = out.eta;
  return out;
}

SdpiEstimate EtaRenyiInfSymmetric(const SymmetricChannelParams& params) {
  params.Validate();
  return ClosedForm(std::abs(params.v - params.u) /
                    std::max(params.u, params.v));
}

SdpiEstimate EtaJeffreysInfSymmetric(const SymmetricChannelParams& params) {
  params.Validate();
  return ClosedForm(std::abs(params.v - params.u) / (params.v + params.u));
}

SdpiEstimate EtaNumeric(const Channel& w, const SdpiTarget& target,
                        const SearchParams& search) {
  CheckTarget(target);
  if (search.resolution < 2 || !(search.boundary_offset > 0.0) ||
      !(search.boundary_offset < 0.5) || search.refine_rounds < 0 ||
      !(search.shrink > 1.0)) {
    throw DomainError("sdpi: invalid search parameters");
  }
  const std::size_t n_in = w.input_size();
  const double lo = search.boundary_offset;
  const double hi = 1.0 - search.boundary_offset;
  const double step = (hi - lo) / (search.resolution - 1);

  RatioEvaluator ratio(w, target);
  std::vector<double> p0(n_in, 0.0);
  std::vector<double> p1(n_in, 0.0);

  double best = -1.0;
  std::size_t best_x1 = 0;
  std::size_t best_x2 = 0;
  double best_a = 0.5;
  double best_b = 0.5;

  auto eval = [&](std::size_t x1, std::size_t x2, double a, double b) {
    p0[x1] = a;
    p0[x2] = 1.0 - a;
    p1[x1] = b;
    p1[x2] = 1.0 - b;
    const double r = ratio(p0, p1);
    p0[x1] = p0[x2] = p1[x1] = p1[x2] = 0.0;
    return r;
  };

  for (std::size_t x1 = 0; x1 < n_in; ++x1) {
    for (std::size_t x2 = x1 + 1; x2 < n_in; ++x2) {
      for (int i = 0; i < search.resolution; ++i) {
        const double a = lo + i * step;
        for (int j = 0; j < search.resolution; ++j) {
          const double b = lo + j * step;
          const double r = eval(x1, x2, a, b);
          if (r > best) {
            best = r;
            best_x1 = x1;
            best_x2 = x2;
            best_a = a;
            best_b = b;
          }
        }
      }
    }
  }

  SdpiEstimate out;
  if (!(best > 0.0)) {
    out.degenerate = true;
    return out;
  }

  // Coordinate descent around the best grid point, shrinking the window
  // after every round.
  double half_width = step;
  for (int round = 0; round < search.refine_rounds; ++round) {
    for (int axis = 0; axis < 2; ++axis) {
      const double center = axis == 0 ? best_a : best_b;
      for (int k = 0; k < kRefinePoints; ++k) {
        const double t = center - half_width +
                         2.0 * half_width * k / (kRefinePoints - 1);
        const double c = std::clamp(t, lo, hi);
        const double a = axis == 0 ? c : best_a;
        const double b = axis == 0 ? best_b : c;
        const double r = eval(best_x1, best_x2, a, b);
        if (r > best) {
          best = r;
          best_a = a;
          best_b = b;
        }
      }
    }
    half_width /= search.shrink;
  }

  std::vector<double> w0(n_in, 0.0);
  std::vector<double> w1(n_in, 0.0);
  w0[best_x1] = best_a;
  w0[best_x2] = 1.0 - best_a;
  w1[best_x1] = best_b;
  w1[best_x2] = 1.0 - best_b;
  out.eta = best;
  out.achieved_ratio = best;
  out.witness = SdpiWitness{Distribution(std::move(w0)),
                            Distribution(std::move(w1))};
  return out;
}

double EtaBruteforceOracle(const Channel& w, const SdpiTarget& target,
                           std::size_t samples, std::uint64_t seed) {
  CheckTarget(target);
  const std::size_t n_in = w.input_size();
  if (n_in > kMaxOracleInputs) {
    throw DomainError("sdpi oracle: input alphabet larger than 4");
  }
  RatioEvaluator ratio(w, target);
  double best = 0.0;

  std::vector<std::vector<int>> lattice;
  std::vector<int> scratch;
  Compositions(kLatticeDenominator, n_in, scratch, lattice);
  std::vector<double> p0(n_in);
  std::vector<double> p1(n_in);
  for (const auto& a : lattice) {
    for (const auto& b : lattice) {
      for (std::size_t x = 0; x < n_in; ++x) {
        p0[x] = static_cast<double>(a[x]) / kLatticeDenominator;
        p1[x] = static_cast<double>(b[x]) / kLatticeDenominator;
      }
      best = std::max(best, ratio(p0, p1));
    }
  }

  CounterRng rng(seed, 0, StreamTag::kOracle);
  for (std::size_t s = 0; s < samples; ++s) {
    SampleDirichletOnes(rng, p0);
    SampleDirichletOnes(rng, p1);
    best = std::max(best, ratio(p0, p1));
  }
  return best;
}

}  // namespace ldpcpd
