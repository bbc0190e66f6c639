#include "hypersum/sampler.hpp"

#include <algorithm>
#include <cmath>

namespace hypersum {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
    : key_(mix64(seed ^ mix64(stream + kGolden))) {}

std::uint64_t CounterRng::next() noexcept {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double CounterRng::uniform(double lo, double hi) noexcept {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

ParamSet draw_param_set(CounterRng& rng) noexcept {
  ParamSet p;
  Complex* slots[] = {&p.a, &p.b, &p.c, &p.d};
  for (int i = 0; i < 4; ++i) {
    const double lo = i < 2 ? -0.5 : 1.0;
    const double hi = i < 2 ? 0.8 : 2.5;
    const double re = rng.uniform(lo, hi);
    const double im = rng.uniform(-0.5, 0.5);
    *slots[i] = {re, im};
  }
  return p;
}

double pole_distance(Complex z) noexcept {
  const double r = std::min(0.0, std::nearbyint(z.real()));
  return std::abs(z - r);
}

}  // namespace hypersum
