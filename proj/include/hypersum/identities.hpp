#pragma once

#include <cstdint>

#include "hypersum/bilateral.hpp"
#include "hypersum/complex.hpp"
#include "hypersum/hyperseries.hpp"

namespace hypersum {

/// |a + b - c - n| below this makes the Saalschutz-type first term singular.
inline constexpr double kNearSingularTolerance = 1e-8;

struct IdentityCase {
  ParamSet params;
  std::int64_t shift_n = 0;
  double tol = 1e-12;
  std::int64_t max_terms = kDefaultMaxTerms;
};

/// |lhs - rhs| / max(|lhs|, |rhs|, 1e-30).
double relative_deviation(Complex lhs, Complex rhs) noexcept;

/// Gamma[1-a, 1-b, c, d, c+d-a-b-1; c-a, c-b, d-a, d-b], the closed form of
/// the bilateral 2H2 sum. Denominator poles give 0.
Complex dougall_rhs(const ParamSet& p);

/// 3F2(c+d-a-b-1, a, b; c, d; 1). This series is balanced, so it converges
/// for every admissible parameter set.
SeriesResult saalschutz_lhs(const ParamSet& p, double tol,
                            std::int64_t max_terms = kDefaultMaxTerms);

/// Two-term closed form of the nonterminating Saalschutz sum:
///   3F2(c-a, c-b, 1; c-a-b+1, c+d-a-b; 1) Gamma[c, d; a, b, c+d-a-b] / (a+b-c)
///   + Gamma[c, d, c-a-b, d-a-b; c-a, c-b, d-a, d-b].
/// Throws NearSingular when |a + b - c| < kNearSingularTolerance and
/// DivergentInput when Re(d - a - b) < kExcessMargin.
Complex saalschutz_rhs(const ParamSet& p, double tol, std::int64_t max_terms = kDefaultMaxTerms);

/// sum_{k=-n}^{inf} [c+d-a-b-1+n, a, b; 1+n, c, d]_k. The n negative-index
/// terms are evaluated directly; the k >= 0 part is a unit-argument series.
SeriesResult semifinite_lhs(const IdentityCase& ic);

/// First right-hand term of the semi-finite identity:
///   3F2(c-a, c-b, 1; c-a-b+1+n, c+d-a-b; 1) Gamma[1+n; c+d-a-b+n] Gamma[c, d; a, b]
///   * (c+d-a-b-1+n) / ((a+b-c-n)(c+d-a-b-1)).
/// Its modulus decays like n^(1 - Re(c+d-a-b)).
Complex semifinite_first_term(const IdentityCase& ic);

/// Second right-hand term: dougall_rhs scaled by
///   Gamma[1+n, c-a-b+n, d-a-b+n; 1-a+n, 1-b+n, c+d-a-b-1+n],
/// a factor that tends to 1.
Complex semifinite_second_term(const IdentityCase& ic);

/// semifinite_first_term + semifinite_second_term.
Complex semifinite_rhs(const IdentityCase& ic);

}  // namespace hypersum
