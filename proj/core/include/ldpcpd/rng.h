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

// Counter-based random streams.
//
// A stream is a 64-bit key; its i-th output is Mix64(key + i * kGamma), the
// SplitMix64 finalizer applied to a Weyl sequence. Streams for independent
// Monte Carlo trials are obtained by hashing (master seed, trial, stage tag)
// into a key, so any trial can be replayed without running the others.

#ifndef LDPCPD_RNG_H_
#define LDPCPD_RNG_H_

#include <cstdint>
#include <limits>

namespace ldpcpd {

inline constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

enum class StreamTag : std::uint64_t {
  kData = 1,
  kPrivatize = 2,
  kOracle = 3,
};

// key = Mix64(Mix64(Mix64(master) ^ trial) ^ tag), each step offset by
// kGamma so that zero inputs do not collapse.
constexpr std::uint64_t DeriveStreamKey(std::uint64_t master_seed,
                                        std::uint64_t trial, StreamTag tag) {
  std::uint64_t k = Mix64(master_seed + kGamma);
  k = Mix64((k ^ trial) + kGamma);
  return Mix64((k ^ static_cast<std::uint64_t>(tag)) + kGamma);
}

// Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) : key_(key) {}
  CounterRng(std::uint64_t master_seed, std::uint64_t trial, StreamTag tag)
      : key_(DeriveStreamKey(master_seed, trial, tag)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() { return Mix64(key_ + (++counter_) * kGamma); }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace ldpcpd

#endif  // LDPCPD_RNG_H_
