// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace nmeascene::synth {

// Counter-based generator: the k-th draw (k = 0, 1, ...) of stream s under
// seed x is
//
//   key    = mix64(mix64(x) + G * (s + 1))
//   u64(k) = mix64(key + G * (k + 1))
//
// with G = 0x9E3779B97F4A7C15 and mix64 the SplitMix64 finalizer, all
// arithmetic modulo 2^64. Every value depends only on (seed, stream, k),
// so streams can be generated in any order or in parallel.
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_(mix64(mix64(seed) + kGolden * (stream + 1))) {}

  std::uint64_t next_u64() noexcept { return mix64(key_ + kGolden * (++counter_)); }

  /// [0, 1): top 53 bits of one draw times 2^-53.
  double uniform() noexcept;

  /// (0, 1]: (top 53 bits + 1) times 2^-53.
  double uniform_open() noexcept;

  /// Box-Muller, cosine branch only: consumes two draws (u1 from
  /// uniform_open, then u2 from uniform) and returns
  /// mu + sigma * sqrt(-2 ln u1) * cos(2 pi u2).
  double gaussian(double mu, double sigma) noexcept;

  /// floor(uniform() * n); n > 0.
  std::uint64_t below(std::uint64_t n) noexcept;

  std::uint64_t draws() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace nmeascene::synth
