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

#ifndef LDPCPD_CHANNEL_H_
#define LDPCPD_CHANNEL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ldpcpd/distribution.h"

namespace ldpcpd {

// Local privacy budget epsilon (nats), strictly positive and finite.
class PrivacyBudget {
 public:
  explicit PrivacyBudget(double epsilon);
  double epsilon() const { return epsilon_; }

 private:
  double epsilon_;
};

// Row-stochastic transition matrix W(y|x), stored row-major.
class Channel {
 public:
  Channel(std::size_t input_size, std::size_t output_size,
          std::vector<double> entries);
  explicit Channel(const std::vector<std::vector<double>>& rows);

  static Channel Identity(std::size_t q);
  static Channel Uniform(std::size_t input_size, std::size_t output_size);

  std::size_t input_size() const { return input_size_; }
  std::size_t output_size() const { return output_size_; }
  double operator()(std::size_t x, std::size_t y) const {
    return entries_[x * output_size_ + y];
  }
  std::span<const double> row(std::size_t x) const {
    return {entries_.data() + x * output_size_, output_size_};
  }
  std::vector<std::vector<double>> rows() const;

  // Matrix product: first this channel, then `next`.
  Channel Then(const Channel& next) const;

  // Inverse-CDF draw from row x using the single uniform u in [0, 1).
  std::size_t Sample(std::size_t x, double u) const;

  bool operator==(const Channel&) const = default;

 private:
  std::size_t input_size_;
  std::size_t output_size_;
  std::vector<double> entries_;
};

// q-ary symmetric channel: v on the diagonal, u elsewhere,
// v = 1 - (q - 1) u.
struct SymmetricChannelParams {
  std::size_t q;
  double u;
  double v;

  static SymmetricChannelParams FromOffDiagonal(std::size_t q, double u);
  // The q-ary randomized response at budget eps.
  static SymmetricChannelParams RandomizedResponse(std::size_t q,
                                                   PrivacyBudget eps);
  void Validate() const;
  Channel ToChannel() const;
};

// Output pmf y -> sum_x p(x) W(y|x).
Distribution Pushforward(const Distribution& p, const Channel& w);

// {"rows": [[...], ...], "epsilon": e}; epsilon is omitted when absent.
std::string ChannelToJson(const Channel& w, std::optional<double> epsilon);

struct ChannelDocument {
  Channel channel;
  std::optional<double> epsilon;
};
ChannelDocument ChannelFromJson(std::string_view text);

}  // namespace ldpcpd

#endif  // LDPCPD_CHANNEL_H_
