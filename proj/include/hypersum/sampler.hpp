#pragma once

#include <cstdint>

#include "hypersum/bilateral.hpp"

namespace hypersum {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Counter-based generator: draw i of stream s under seed k is
///   mix64(key + (i + 1) * 0x9E3779B97F4A7C15),
///   key = mix64(k ^ mix64(s + 0x9E3779B97F4A7C15)).
/// Every draw is a pure function of (seed, stream, i), so case i of a run
/// samples the same values regardless of thread scheduling.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept;

  std::uint64_t next() noexcept;
  /// 53-bit uniform in [lo, hi).
  double uniform(double lo, double hi) noexcept;
  std::uint64_t counter() const noexcept { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// a, b in [-0.5, 0.8] + [-0.5, 0.5]i and c, d in [1.0, 2.5] + [-0.5, 0.5]i,
/// drawn in the order a.re, a.im, b.re, b.im, c.re, c.im, d.re, d.im.
ParamSet draw_param_set(CounterRng& rng) noexcept;

/// Distance from z to the nearest nonpositive integer.
double pole_distance(Complex z) noexcept;

}  // namespace hypersum
