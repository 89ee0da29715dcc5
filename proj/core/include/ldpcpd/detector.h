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

// Offline change-point estimators.
//
// The non-private detector maximizes the suffix log-likelihood ratio
//
//   l(D, k) = sum_{i=k}^{n} ln(p1(x_i) / p0(x_i)),   k = 1, ..., n
//
// and returns the smallest maximizing k. The private detectors first pass
// every symbol through an eps-LDP channel (randomized response or the binary
// mechanism) and then run the same scan against the induced output pmfs.
//
// Indices k are 1-based throughout, matching the change-point convention
// that x_{k*}, ..., x_n are post-change.

#ifndef LDPCPD_DETECTOR_H_
#define LDPCPD_DETECTOR_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ldpcpd/channel.h"
#include "ldpcpd/distribution.h"
#include "ldpcpd/mechanisms.h"
#include "ldpcpd/rng.h"

namespace ldpcpd {

class Dataset {
 public:
  Dataset(std::vector<std::uint32_t> symbols, std::size_t alphabet_size,
          std::optional<std::size_t> true_change_point = std::nullopt);

  std::size_t size() const { return symbols_.size(); }
  std::size_t alphabet_size() const { return alphabet_size_; }
  const std::vector<std::uint32_t>& symbols() const { return symbols_; }
  std::uint32_t operator[](std::size_t i) const { return symbols_[i]; }
  std::optional<std::size_t> true_change_point() const { return k_star_; }

  bool operator==(const Dataset&) const = default;

 private:
  std::vector<std::uint32_t> symbols_;
  std::size_t alphabet_size_;
  std::optional<std::size_t> k_star_;
};

// Extended real used for log-likelihood scores: finite, +inf or -inf.
class Score {
 public:
  enum class Kind : std::uint8_t { kNegInf, kFinite, kPosInf };

  constexpr Score() = default;
  static constexpr Score Finite(double v) { return Score(Kind::kFinite, v); }
  static constexpr Score PosInf() { return Score(Kind::kPosInf, 0.0); }
  static constexpr Score NegInf() { return Score(Kind::kNegInf, 0.0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  // Finite value, or +-infinity as a double.
  double value() const;

  // Throws DataError for (+inf) + (-inf).
  Score operator+(const Score& other) const;

  std::partial_ordering operator<=>(const Score& other) const;
  bool operator==(const Score& other) const = default;

 private:
  constexpr Score(Kind kind, double v) : kind_(kind), value_(v) {}
  Kind kind_ = Kind::kFinite;
  double value_ = 0.0;
};

struct DetectionResult {
  std::size_t k_hat = 1;  // 1-based
  std::vector<Score> scores;  // scores[k - 1] = l(D, k)
  std::optional<Dataset> privatized;
};

// Per-symbol log-likelihood ratio ln(p1(x)/p0(x)) for every x. Symbols with
// p0(x) = p1(x) = 0 map to nullopt.
std::vector<std::optional<Score>> LogRatioTable(const Distribution& p0,
                                                const Distribution& p1);

// l(D, k) for k = 1..n by one reverse suffix scan.
// Throws DataError if an observed symbol has zero mass under both pmfs or a
// suffix mixes +inf and -inf terms.
std::vector<Score> GlrtScores(const Dataset& data, const Distribution& p0,
                              const Distribution& p1);

// Smallest 1-based index attaining the maximum score.
std::size_t ArgmaxScore(const std::vector<Score>& scores);

DetectionResult Detect(const Dataset& data, const Distribution& p0,
                       const Distribution& p1);

// Passes every symbol through `w`, one uniform variate per symbol.
Dataset Privatize(const Dataset& data, const Channel& w, CounterRng& rng);

// A privatizing channel with the output pmfs it induces. Building one is
// the data-independent part of the private detectors and can be shared
// across trials.
struct MechanismPlan {
  Channel channel;
  Distribution q0;
  Distribution q1;
  std::optional<TauSelection> tau;  // set for the binary mechanism
};

MechanismPlan PlanRandomizedResponse(const Distribution& p0,
                                     const Distribution& p1,
                                     PrivacyBudget eps);
MechanismPlan PlanBinaryMechanism(const Distribution& p0,
                                  const Distribution& p1, PrivacyBudget eps);

DetectionResult DetectPrivately(const Dataset& data, const MechanismPlan& plan,
                                CounterRng& rng);

// RR-CPD: q-ary randomized response, then the GLRT scan on (Q0, Q1).
DetectionResult RrCpd(const Dataset& data, const Distribution& p0,
                      const Distribution& p1, PrivacyBudget eps,
                      CounterRng& rng);

// BM-CPD: binary mechanism at the Chernoff-optimal threshold, then the GLRT
// scan on the binary outputs. Throws DomainError when p0 == p1.
DetectionResult BmCpd(const Dataset& data, const Distribution& p0,
                      const Distribution& p1, PrivacyBudget eps,
                      CounterRng& rng);

}  // namespace ldpcpd

#endif  // LDPCPD_DETECTOR_H_
