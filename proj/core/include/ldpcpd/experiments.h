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

// Seeded Monte Carlo harness: accuracy curves, epsilon sweeps and
// error-exponent ratios.
//
// Trial t draws its dataset from the stream (master_seed, t, kData) and its
// privatization noise from (master_seed, t, kPrivatize). Sweeps reuse both
// streams for every epsilon and for both mechanisms, so compared columns see
// common random numbers. Results do not depend on the thread count.

#ifndef LDPCPD_EXPERIMENTS_H_
#define LDPCPD_EXPERIMENTS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ldpcpd/bounds.h"
#include "ldpcpd/detector.h"
#include "ldpcpd/distribution.h"
#include "ldpcpd/families.h"
#include "ldpcpd/results.h"
#include "ldpcpd/rng.h"

namespace ldpcpd {

enum class MechanismKind { kNone, kRr, kBm };
enum class ExperimentKind { kAccuracy, kEpsSweep, kExponentRatio };

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kAccuracy;
  FamilySpec p0 = BernoulliFamily{0.1};
  FamilySpec p1 = BernoulliFamily{0.4};
  std::size_t n = 2000;
  std::size_t k_star = 1000;
  std::size_t trials = 1000;
  std::vector<double> alpha_grid = {5.0};
  std::optional<std::vector<double>> epsilon_grid;
  MechanismKind mechanism = MechanismKind::kNone;
  std::uint64_t master_seed = 0;
  CtildeForm ctilde_form = CtildeForm::kVerbatim;
  bool clip_ratio = true;

  // Throws DomainError on out-of-range fields.
  void Validate() const;
};

// JSON schema: see README. Unknown keys are rejected.
ExperimentConfig ConfigFromJson(std::string_view text);
std::string ConfigToJson(const ExperimentConfig& cfg);

// x_1..x_{k*-1} ~ p0, x_{k*}..x_n ~ p1; one uniform per symbol.
Dataset SampleDataset(const Distribution& p0, const Distribution& p1,
                      std::size_t n, std::size_t k_star, CounterRng& rng);

struct RunOptions {
  std::size_t threads = 1;  // 0 picks the hardware concurrency
};

// |k_hat - k*| for each trial, in trial order. `plan` selects a private
// detector; without it the non-private detector runs on the raw data.
std::vector<std::size_t> SimulateDeviations(
    const Distribution& p0, const Distribution& p1, std::size_t n,
    std::size_t k_star, std::size_t trials, std::uint64_t master_seed,
    const std::optional<MechanismPlan>& plan, const RunOptions& options = {});

// Fraction of deviations strictly greater than alpha.
double EmpiricalBeta(const std::vector<std::size_t>& deviations, double alpha);

// Columns: alpha, beta_empirical, beta_theory, trials. Private mechanisms
// need exactly one epsilon in epsilon_grid.
ResultTable RunAccuracyCurve(const ExperimentConfig& cfg,
                             const RunOptions& options = {});

// Columns: epsilon, beta_rr, beta_bm, beta_nonprivate at alpha_grid[0].
ResultTable RunEpsSweep(const ExperimentConfig& cfg,
                        const RunOptions& options = {});

// Columns: epsilon, ratio_rr, ratio_bm, tanh_sq at alpha_grid[0]. Betas are
// floored at 1 / (2 trials) before taking exponents.
ResultTable RunExponentRatio(const ExperimentConfig& cfg,
                             const RunOptions& options = {});

// Dispatches on cfg.kind.
ResultTable RunExperiment(const ExperimentConfig& cfg,
                          const RunOptions& options = {});

}  // namespace ldpcpd

#endif  // LDPCPD_EXPERIMENTS_H_
