#pragma once

#include <cstdint>
#include <vector>

#include "hypersum/complex.hpp"

namespace hypersum {

inline constexpr std::int64_t kDefaultMaxTerms = 200000;

/// Series at unit argument are refused when Re(excess) falls below this.
inline constexpr double kExcessMargin = 0.05;

/// sum_{k>=0} prod (a_i)_k / (k! prod (b_j)_k) z^k. The k! slot is implicit
/// and never listed among the denominators.
struct SeriesSpec {
  std::vector<Complex> numerators;
  std::vector<Complex> denominators;
  Complex argument{1.0, 0.0};
};

enum class Verdict { kConverged, kTerminated, kMaxTermsExceeded, kDiverged };

const char* verdict_name(Verdict v) noexcept;

struct SeriesResult {
  Complex value;
  double abs_error_estimate = 0.0;
  std::int64_t terms_used = 0;
  Verdict verdict = Verdict::kConverged;
};

/// Parametric excess sum(b_j) - sum(a_i) of a unit-argument series with one
/// more numerator than denominators; the series converges iff its real part
/// is positive. Throws ShapeError on any other shape.
Complex convergence_excess(const SeriesSpec& spec);

/// Sums the series by the term-ratio recurrence.
///
/// Terminating series (a numerator on a nonpositive integer) are summed
/// exactly. Away from z = 1 the sum stops once three consecutive terms fall
/// below tol * |partial sum| with k >= 8. At z = 1 the terms decay only like
/// k^-(1+excess), so after a direct prefix the remainder is evaluated by
/// Euler-Maclaurin on the asymptotic expansion of the term; the prefix is
/// doubled until the error estimate meets tol * (1 + |value|) or max_terms
/// is reached.
///
/// Throws ShapeError, DegenerateDenominator, or InvalidArgument.
SeriesResult sum_series(const SeriesSpec& spec, double tol,
                        std::int64_t max_terms = kDefaultMaxTerms);

}  // namespace hypersum
