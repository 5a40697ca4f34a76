// Copyright 2026 The nmeascene Authors
// SPDX-License-Identifier: Apache-2.0

#include "counter_rng.hpp"

#include <cmath>
#include <numbers>

namespace nmeascene::synth {

namespace {
constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;
}

double CounterRng::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * kTwoPow53Inv;
}

double CounterRng::uniform_open() noexcept {
  return static_cast<double>((next_u64() >> 11) + 1) * kTwoPow53Inv;
}

double CounterRng::gaussian(double mu, double sigma) noexcept {
  const double u1 = uniform_open();
  const double u2 = uniform();
  return mu + sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t CounterRng::below(std::uint64_t n) noexcept {
  auto v = static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
  return v < n ? v : n - 1;
}

}  // namespace nmeascene::synth
