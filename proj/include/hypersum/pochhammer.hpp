#pragma once

#include <cstdint>
#include <vector>

#include "hypersum/complex.hpp"

namespace hypersum {

/// Index magnitude up to which Pochhammer symbols are formed as direct
/// products. Larger indices go through log-space Gamma ratios.
inline constexpr std::int64_t kDirectProductLimit = 64;

/// A product factor f of (x)_n counts as zero when |f| < 1e-12 * (1 + |x|).
bool is_zero_factor(Complex factor, Complex x) noexcept;

/// Shifted factorial (x)_n = Gamma(x+n)/Gamma(x) for any integer n.
/// n >= 0: x(x+1)...(x+n-1), with exact zeros.
/// n < 0:  1 / ((x-1)(x-2)...(x-|n|)); PoleError if a factor vanishes.
Complex pochhammer(Complex x, std::int64_t n);

/// (-1)^m / (1-x)_m, which equals (x)_{-m}.
Complex pochhammer_reflect(Complex x, std::int64_t m);

/// [num_1, ...; den_1, ...]_n = prod (num_i)_n / prod (den_j)_n.
struct PochhammerRatioSpec {
  std::vector<Complex> numerators;
  std::vector<Complex> denominators;
  std::int64_t index = 0;
};

/// For n >= 0 a vanishing denominator symbol throws DivisionByZero and a
/// vanishing numerator symbol gives exactly 0. For n < 0 the symbols are
/// reciprocals of products: a denominator factor on a pole gives exactly 0
/// and a numerator factor on a pole throws PoleError.
Complex pochhammer_ratio(const PochhammerRatioSpec& spec);

}  // namespace hypersum
