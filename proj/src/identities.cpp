#include "hypersum/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hypersum/error.hpp"
#include "hypersum/gamma.hpp"
#include "hypersum/pochhammer.hpp"
#include "internal.hpp"

namespace hypersum {

namespace {

void check_finite(const ParamSet& p, const char* who) {
  for (const Complex& x : {p.a, p.b, p.c, p.d}) {
    if (!is_finite(x)) throw InvalidArgument(std::string(who) + ": non-finite parameter");
  }
}

void require_converged(const SeriesResult& r, const char* who) {
  if (r.verdict == Verdict::kConverged || r.verdict == Verdict::kTerminated) return;
  throw NotConverged(std::string(who) + ": embedded 3F2 finished with verdict " +
                     verdict_name(r.verdict) + " after " + std::to_string(r.terms_used) +
                     " terms");
}

void require_excess(Complex excess, const char* who, const char* what) {
  if (excess.real() < kExcessMargin) {
    throw DivergentInput(std::string(who) + ": Re(" + what + ") = " +
                         std::to_string(excess.real()) + " is below 0.05");
  }
}

}  // namespace

double relative_deviation(Complex lhs, Complex rhs) noexcept {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
  return std::abs(lhs - rhs) / scale;
}

Complex dougall_rhs(const ParamSet& p) {
  check_finite(p, "dougall_rhs");
  const Complex s = p.c + p.d - p.a - p.b;
  return gamma_ratio({{1.0 - p.a, 1.0 - p.b, p.c, p.d, s - 1.0},
                      {p.c - p.a, p.c - p.b, p.d - p.a, p.d - p.b}},
                     PoleMode::kAware);
}

SeriesResult saalschutz_lhs(const ParamSet& p, double tol, std::int64_t max_terms) {
  check_finite(p, "saalschutz_lhs");
  const Complex s = p.c + p.d - p.a - p.b;
  // a terminating series needs no convergence condition
  bool terminates = false;
  for (const Complex x : {s - 1.0, p.a, p.b}) {
    terminates = terminates || detail::nonpositive_integer_index(x, kPoleTolerance) >= 0;
  }
  if (!terminates) require_excess(p.d - p.a - p.b, "saalschutz_lhs", "d - a - b");
  return sum_series({{s - 1.0, p.a, p.b}, {p.c, p.d}, 1.0}, tol, max_terms);
}

Complex saalschutz_rhs(const ParamSet& p, double tol, std::int64_t max_terms) {
  check_finite(p, "saalschutz_rhs");
  require_excess(p.d - p.a - p.b, "saalschutz_rhs", "d - a - b");
  const Complex gap = p.a + p.b - p.c;
  if (std::abs(gap) < kNearSingularTolerance) {
    throw NearSingular("saalschutz_rhs: a + b - c = " + to_string(gap) + " is too close to 0");
  }
  const Complex s = p.c + p.d - p.a - p.b;

  const SeriesResult f =
      sum_series({{p.c - p.a, p.c - p.b, 1.0}, {1.0 - gap, s}, 1.0}, tol, max_terms);
  require_converged(f, "saalschutz_rhs");

  const Complex first = f.value *
                        gamma_ratio({{p.c, p.d}, {p.a, p.b, s}}, PoleMode::kAware) / gap;
  const Complex second = gamma_ratio({{p.c, p.d, p.c - p.a - p.b, p.d - p.a - p.b},
                                      {p.c - p.a, p.c - p.b, p.d - p.a, p.d - p.b}},
                                     PoleMode::kAware);
  return first + second;
}

SeriesResult semifinite_lhs(const IdentityCase& ic) {
  const ParamSet& p = ic.params;
  check_finite(p, "semifinite_lhs");
  if (ic.shift_n < 0) throw InvalidArgument("semifinite_lhs: n must be nonnegative");
  const std::int64_t n = ic.shift_n;
  const double nd = static_cast<double>(n);
  const Complex top = p.c + p.d - p.a - p.b - 1.0 + nd;

  detail::CompensatedSum negative;
  double abs_negative = 0.0;
  for (std::int64_t k = -n; k < 0; ++k) {
    const Complex t = pochhammer_ratio({{top, p.a, p.b}, {1.0 + nd, p.c, p.d}, k});
    negative.add(t);
    abs_negative += std::abs(t);
  }

  // The trailing 1 cancels the implicit k!; at n = 0 it pairs off with 1 + n
  // and the series is exactly the one saalschutz_lhs sums.
  std::vector<Complex> num{top, p.a, p.b, 1.0};
  std::vector<Complex> den{1.0 + nd, p.c, p.d};
  detail::cancel_common(num, den);
  SeriesResult r = sum_series({num, den, 1.0}, ic.tol, ic.max_terms);

  r.value = negative.value() + r.value;
  r.abs_error_estimate += 8.0 * std::numeric_limits<double>::epsilon() * abs_negative;
  r.terms_used += n;
  return r;
}

Complex semifinite_first_term(const IdentityCase& ic) {
  const ParamSet& p = ic.params;
  check_finite(p, "semifinite_first_term");
  if (ic.shift_n < 0) throw InvalidArgument("semifinite_first_term: n must be nonnegative");
  const double nd = static_cast<double>(ic.shift_n);
  const Complex s = p.c + p.d - p.a - p.b;
  const Complex gap = p.a + p.b - p.c - nd;
  if (std::abs(gap) < kNearSingularTolerance) {
    throw NearSingular("semifinite_first_term: a + b - c - n = " + to_string(gap) +
                       " is too close to 0");
  }
  if (std::abs(s - 1.0) < kNearSingularTolerance) {
    throw NearSingular("semifinite_first_term: c + d - a - b - 1 is too close to 0");
  }
  require_excess(p.d - p.a - p.b + nd, "semifinite_first_term", "d - a - b + n");

  const SeriesResult f = sum_series({{p.c - p.a, p.c - p.b, 1.0}, {1.0 - gap, s}, 1.0},
                                    ic.tol, ic.max_terms);
  require_converged(f, "semifinite_first_term");

  const Complex g = gamma_ratio({{1.0 + nd, p.c, p.d}, {s + nd, p.a, p.b}}, PoleMode::kAware);
  return f.value * g * (s - 1.0 + nd) / (gap * (s - 1.0));
}

Complex semifinite_second_term(const IdentityCase& ic) {
  const ParamSet& p = ic.params;
  check_finite(p, "semifinite_second_term");
  if (ic.shift_n < 0) throw InvalidArgument("semifinite_second_term: n must be nonnegative");
  const double nd = static_cast<double>(ic.shift_n);
  const Complex s = p.c + p.d - p.a - p.b;
  return gamma_ratio({{1.0 + nd, p.c - p.a - p.b + nd, p.d - p.a - p.b + nd, 1.0 - p.a,
                       1.0 - p.b, p.c, p.d, s - 1.0},
                      {1.0 - p.a + nd, 1.0 - p.b + nd, s - 1.0 + nd, p.c - p.a, p.c - p.b,
                       p.d - p.a, p.d - p.b}},
                     PoleMode::kAware);
}

Complex semifinite_rhs(const IdentityCase& ic) {
  const Complex first = semifinite_first_term(ic);
  return first + semifinite_second_term(ic);
}

}  // namespace hypersum
