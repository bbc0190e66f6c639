#pragma once

#include <cstdint>
#include <vector>

#include "hypersum/complex.hpp"

namespace hypersum {

/// Distance below which an argument counts as sitting on a pole of Gamma.
inline constexpr double kPoleTolerance = 1e-10;

/// True when z lies within kPoleTolerance of 0, -1, -2, ...
bool is_gamma_pole(Complex z) noexcept;

/// Principal-branch log Gamma. Lanczos (g = 607/128, 15 terms) for
/// Re z >= 1/2, reflection otherwise. Throws PoleError at poles.
Complex log_gamma(Complex z);

/// exp(log_gamma(z)). Throws OverflowError when |Gamma(z)| exceeds the
/// double range.
Complex gamma(Complex z);

/// Gamma[numerators; denominators] = prod Gamma(num_i) / prod Gamma(den_j).
/// Empty lists are empty products.
struct GammaRatioSpec {
  std::vector<Complex> numerators;
  std::vector<Complex> denominators;
};

enum class PoleMode {
  kStrict,  // any pole throws
  kAware,   // a denominator pole yields exactly 0; numerator poles still throw
};

/// Accumulates log Gamma of every argument and exponentiates once, so the
/// result is finite whenever the ratio itself is representable.
Complex gamma_ratio(const GammaRatioSpec& spec, PoleMode mode = PoleMode::kStrict);

/// Log of gamma_ratio; same pole rules except that a denominator pole in
/// kAware mode is reported through the return flag instead.
struct LogRatio {
  Complex value;
  bool vanishes = false;
};
LogRatio log_gamma_ratio(const GammaRatioSpec& spec, PoleMode mode = PoleMode::kStrict);

/// |Gamma(n + x) / Gamma(n + y) * n^(y - x) - 1|, which tends to 0 as n grows.
double limit_ratio_defect(Complex x, Complex y, std::int64_t n);

}  // namespace hypersum
