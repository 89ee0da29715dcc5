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

#include "ldpcpd/detector.h"

#include <cmath>
#include <string>

#include "ldpcpd/divergence.h"
#include "ldpcpd/error.h"

namespace ldpcpd {

Dataset::Dataset(std::vector<std::uint32_t> symbols, std::size_t alphabet_size,
                 std::optional<std::size_t> true_change_point)
    : symbols_(std::move(symbols)),
      alphabet_size_(alphabet_size),
      k_star_(true_change_point) {
  if (symbols_.size() < 2) {
    throw DomainError("dataset: need at least two symbols");
  }
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] >= alphabet_size_) {
      throw DomainError("dataset: symbol " + std::to_string(symbols_[i]) +
                        " at position " + std::to_string(i + 1) +
                        " is outside the alphabet of size " +
                        std::to_string(alphabet_size_));
    }
  }
  if (k_star_ && (*k_star_ < 2 || *k_star_ > symbols_.size())) {
    throw DomainError("dataset: change-point must lie in (1, n]");
  }
}

double Score::value() const {
  switch (kind_) {
    case Kind::kPosInf:
      return kInfinity;
    case Kind::kNegInf:
      return -kInfinity;
    case Kind::kFinite:
      break;
  }
  return value_;
}

Score Score::operator+(const Score& other) const {
  if (kind_ == Kind::kFinite && other.kind_ == Kind::kFinite) {
    return Finite(value_ + other.value_);
  }
  if (kind_ != Kind::kFinite && other.kind_ != Kind::kFinite &&
      kind_ != other.kind_) {
    throw DataError("score: indeterminate sum of +inf and -inf");
  }
  return kind_ != Kind::kFinite ? *this : other;
}

std::partial_ordering Score::operator<=>(const Score& other) const {
  if (kind_ != other.kind_) return kind_ <=> other.kind_;
  if (kind_ != Kind::kFinite) return std::partial_ordering::equivalent;
  return value_ <=> other.value_;
}

std::vector<std::optional<Score>> LogRatioTable(const Distribution& p0,
                                                const Distribution& p1) {
  RequireSameAlphabet(p0, p1);
  std::vector<std::optional<Score>> table(p0.size());
  for (std::size_t x = 0; x < p0.size(); ++x) {
    if (p0[x] == 0.0 && p1[x] == 0.0) continue;
    if (p0[x] == 0.0) {
      table[x] = Score::PosInf();
    } else if (p1[x] == 0.0) {
      table[x] = Score::NegInf();
    } else {
      table[x] = Score::Finite(std::log(p1[x] / p0[x]));
    }
  }
  return table;
}

std::vector<Score> GlrtScores(const Dataset& data, const Distribution& p0,
                              const Distribution& p1) {
  RequireSameAlphabet(p0, p1);
  if (data.alphabet_size() > p0.size()) {
    throw DimensionError("glrt: dataset alphabet exceeds the pmf alphabet");
  }
  const auto table = LogRatioTable(p0, p1);
  const std::size_t n = data.size();
  std::vector<Score> scores(n);
  Score suffix = Score::Finite(0.0);
  for (std::size_t i = n; i-- > 0;) {
    const auto& term = table[data[i]];
    if (!term) {
      throw DataError("glrt: symbol " + std::to_string(data[i]) +
                      " at position " + std::to_string(i + 1) +
                      " has zero probability under both pmfs");
    }
    suffix = suffix + *term;
    scores[i] = suffix;
  }
  return scores;
}

std::size_t ArgmaxScore(const std::vector<Score>& scores) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < scores.size(); ++k) {
    if (scores[k] > scores[best]) best = k;
  }
  return best + 1;
}

DetectionResult Detect(const Dataset& data, const Distribution& p0,
                       const Distribution& p1) {
  DetectionResult out;
  out.scores = GlrtScores(data, p0, p1);
  out.k_hat = ArgmaxScore(out.scores);
  return out;
}

Dataset Privatize(const Dataset& data, const Channel& w, CounterRng& rng) {
  if (data.alphabet_size() > w.input_size()) {
    throw DimensionError("privatize: dataset alphabet exceeds channel input");
  }
  std::vector<std::uint32_t> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(w.Sample(data[i], rng.Uniform()));
  }
  return Dataset(std::move(out), w.output_size(), data.true_change_point());
}

MechanismPlan PlanRandomizedResponse(const Distribution& p0,
                                     const Distribution& p1,
                                     PrivacyBudget eps) {
  RequireSameAlphabet(p0, p1);
  Channel w = RandomizedResponseChannel(p0.size(), eps);
  Distribution q0 = Pushforward(p0, w);
  Distribution q1 = Pushforward(p1, w);
  return {std::move(w), std::move(q0), std::move(q1), std::nullopt};
}

MechanismPlan PlanBinaryMechanism(const Distribution& p0,
                                  const Distribution& p1, PrivacyBudget eps) {
  TauSelection tau = SelectTauStar(p0, p1, eps);
  Channel w = BinaryMechanism(tau.quantizer, eps);
  Distribution q0 = Pushforward(p0, w);
  Distribution q1 = Pushforward(p1, w);
  return {std::move(w), std::move(q0), std::move(q1), std::move(tau)};
}

DetectionResult DetectPrivately(const Dataset& data, const MechanismPlan& plan,
                                CounterRng& rng) {
  Dataset privatized = Privatize(data, plan.channel, rng);
  DetectionResult out = Detect(privatized, plan.q0, plan.q1);
  out.privatized = std::move(privatized);
  return out;
}

DetectionResult RrCpd(const Dataset& data, const Distribution& p0,
                      const Distribution& p1, PrivacyBudget eps,
                      CounterRng& rng) {
  return DetectPrivately(data, PlanRandomizedResponse(p0, p1, eps), rng);
}

DetectionResult BmCpd(const Dataset& data, const Distribution& p0,
                      const Distribution& p1, PrivacyBudget eps,
                      CounterRng& rng) {
  return DetectPrivately(data, PlanBinaryMechanism(p0, p1, eps), rng);
}

}  // namespace ldpcpd
