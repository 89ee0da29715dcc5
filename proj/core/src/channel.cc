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

#include "ldpcpd/channel.h"

#include <cmath>
#include <nlohmann/json.hpp>
#include <numeric>

#include "ldpcpd/error.h"

namespace ldpcpd {
namespace {

constexpr double kRowTolerance = 1e-12;

}  // namespace

PrivacyBudget::PrivacyBudget(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("privacy budget must be positive and finite");
  }
}

Channel::Channel(std::size_t input_size, std::size_t output_size,
                 std::vector<double> entries)
    : input_size_(input_size),
      output_size_(output_size),
      entries_(std::move(entries)) {
  if (input_size_ == 0 || output_size_ == 0) {
    throw DomainError("channel: empty alphabet");
  }
  if (entries_.size() != input_size_ * output_size_) {
    throw DimensionError("channel: entry count does not match dimensions");
  }
  for (std::size_t x = 0; x < input_size_; ++x) {
    double total = 0.0;
    for (double w : row(x)) {
      if (!(w >= 0.0 && w <= 1.0)) {
        throw DomainError("channel: row " + std::to_string(x) +
                          " has an entry outside [0, 1]");
      }
      total += w;
    }
    if (std::abs(total - 1.0) > kRowTolerance) {
      throw DomainError("channel: row " + std::to_string(x) +
                        " does not sum to 1");
    }
  }
}

Channel::Channel(const std::vector<std::vector<double>>& rows)
    : Channel(rows.size(), rows.empty() ? 0 : rows.front().size(), [&] {
        std::vector<double> flat;
        for (const auto& r : rows) {
          if (r.size() != rows.front().size()) {
            throw DimensionError("channel: ragged rows");
          }
          flat.insert(flat.end(), r.begin(), r.end());
        }
        return flat;
      }()) {}

Channel Channel::Identity(std::size_t q) {
  std::vector<double> entries(q * q, 0.0);
  for (std::size_t x = 0; x < q; ++x) entries[x * q + x] = 1.0;
  return Channel(q, q, std::move(entries));
}

Channel Channel::Uniform(std::size_t input_size, std::size_t output_size) {
  return Channel(input_size, output_size,
                 std::vector<double>(input_size * output_size,
                                     1.0 / static_cast<double>(output_size)));
}

std::vector<std::vector<double>> Channel::rows() const {
  std::vector<std::vector<double>> out;
  out.reserve(input_size_);
  for (std::size_t x = 0; x < input_size_; ++x) {
    auto r = row(x);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

Channel Channel::Then(const Channel& next) const {
  if (output_size_ != next.input_size_) {
    throw DimensionError("channel composition: inner dimensions differ");
  }
  std::vector<double> entries(input_size_ * next.output_size_, 0.0);
  for (std::size_t x = 0; x < input_size_; ++x) {
    for (std::size_t v = 0; v < output_size_; ++v) {
      const double w = (*this)(x, v);
      if (w == 0.0) continue;
      for (std::size_t y = 0; y < next.output_size_; ++y) {
        entries[x * next.output_size_ + y] += w * next(v, y);
      }
    }
  }
  return Channel(input_size_, next.output_size_, std::move(entries));
}

std::size_t Channel::Sample(std::size_t x, double u) const {
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  const auto r = row(x);
  for (std::size_t y = 0; y < r.size(); ++y) {
    if (r[y] == 0.0) continue;
    cumulative += r[y];
    last_positive = y;
    if (u < cumulative) return y;
  }
  return last_positive;
}

SymmetricChannelParams SymmetricChannelParams::FromOffDiagonal(std::size_t q,
                                                               double u) {
  SymmetricChannelParams params{q, u, 1.0 - static_cast<double>(q - 1) * u};
  params.Validate();
  return params;
}

SymmetricChannelParams SymmetricChannelParams::RandomizedResponse(
    std::size_t q, PrivacyBudget eps) {
  if (q < 2) throw DomainError("randomized response needs q >= 2");
  const double e = std::exp(eps.epsilon());
  const double denom = e + static_cast<double>(q) - 1.0;
  SymmetricChannelParams params{q, 1.0 / denom, e / denom};
  params.Validate();
  return params;
}

void SymmetricChannelParams::Validate() const {
  if (q < 1) throw DomainError("symmetric channel: q must be positive");
  if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0)) {
    throw DomainError("symmetric channel: u, v must lie in [0, 1]");
  }
  if (std::abs(v - (1.0 - static_cast<double>(q - 1) * u)) > kRowTolerance) {
    throw DomainError("symmetric channel: v != 1 - (q - 1) u");
  }
}

Channel SymmetricChannelParams::ToChannel() const {
  Validate();
  std::vector<double> entries(q * q, u);
  for (std::size_t x = 0; x < q; ++x) entries[x * q + x] = v;
  return Channel(q, q, std::move(entries));
}

Distribution Pushforward(const Distribution& p, const Channel& w) {
  if (p.size() != w.input_size()) {
    throw DimensionError("pushforward: pmf has " + std::to_string(p.size()) +
                         " symbols, channel expects " +
                         std::to_string(w.input_size()));
  }
  std::vector<double> out(w.output_size(), 0.0);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] == 0.0) continue;
    const auto r = w.row(x);
    for (std::size_t y = 0; y < out.size(); ++y) out[y] += p[x] * r[y];
  }
  return Distribution(std::move(out));
}

std::string ChannelToJson(const Channel& w, std::optional<double> epsilon) {
  nlohmann::json doc;
  doc["rows"] = w.rows();
  if (epsilon) doc["epsilon"] = *epsilon;
  return doc.dump();
}

ChannelDocument ChannelFromJson(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("channel json: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw DomainError("channel json: missing \"rows\" array");
  }
  std::vector<std::vector<double>> rows;
  try {
    rows = doc["rows"].get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("channel json: ") + e.what());
  }
  std::optional<double> epsilon;
  if (doc.contains("epsilon") && !doc["epsilon"].is_null()) {
    if (!doc["epsilon"].is_number()) {
      throw DomainError("channel json: \"epsilon\" must be a number");
    }
    epsilon = doc["epsilon"].get<double>();
  }
  return {Channel(rows), epsilon};
}

}  // namespace ldpcpd
