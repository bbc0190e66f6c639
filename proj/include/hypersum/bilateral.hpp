#pragma once

#include <cstdint>

#include "hypersum/complex.hpp"
#include "hypersum/hyperseries.hpp"

namespace hypersum {

/// The four parameters (a, b, c, d) shared by every identity instance.
struct ParamSet {
  Complex a;
  Complex b;
  Complex c;
  Complex d;

  friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

/// Largest |Im| accepted for any parameter.
inline constexpr double kMaxImaginaryPart = 50.0;

/// Minimum Re(c + d - a - b) accepted by sum_h22.
inline constexpr double kBilateralMargin = 1.0 + kExcessMargin;

/// Throws PoleError when 1-a, 1-b, c or d is a nonpositive integer and
/// InvalidArgument for non-finite parameters or |Im| > kMaxImaginaryPart.
void check_bilateral_params(const ParamSet& p);

/// (a)_k (b)_k / ((c)_k (d)_k); negative k goes through the reflected form
/// (1-c)_m (1-d)_m / ((1-a)_m (1-b)_m) with m = -k.
Complex h22_term(const ParamSet& p, std::int64_t k);

/// sum over all integers k of h22_term(p, k). The k >= 0 half and the k < 0
/// half are summed as two separate unit-argument series.
/// Throws DivergentInput when Re(c + d - a - b) < kBilateralMargin.
SeriesResult sum_h22(const ParamSet& p, double tol, std::int64_t max_terms = kDefaultMaxTerms);

}  // namespace hypersum
