#include "hypersum/bilateral.hpp"

#include <cmath>
#include <string>

#include "hypersum/error.hpp"
#include "hypersum/gamma.hpp"
#include "hypersum/pochhammer.hpp"

namespace hypersum {

namespace {

Verdict combine(Verdict pos, Verdict neg) {
  if (pos == Verdict::kDiverged || neg == Verdict::kDiverged) return Verdict::kDiverged;
  if (pos == Verdict::kMaxTermsExceeded || neg == Verdict::kMaxTermsExceeded) {
    return Verdict::kMaxTermsExceeded;
  }
  if (pos == Verdict::kTerminated && neg == Verdict::kTerminated) return Verdict::kTerminated;
  return Verdict::kConverged;
}

}  // namespace

void check_bilateral_params(const ParamSet& p) {
  for (const Complex& x : {p.a, p.b, p.c, p.d}) {
    if (!is_finite(x)) throw InvalidArgument("bilateral: non-finite parameter");
    if (std::fabs(x.imag()) > kMaxImaginaryPart) {
      throw InvalidArgument("bilateral: |Im| of " + to_string(x) + " exceeds 50");
    }
  }
  const struct {
    Complex value;
    const char* name;
  } checks[] = {{1.0 - p.a, "1-a"}, {1.0 - p.b, "1-b"}, {p.c, "c"}, {p.d, "d"}};
  for (const auto& check : checks) {
    if (is_gamma_pole(check.value)) {
      throw PoleError(std::string("bilateral: ") + check.name + " = " + to_string(check.value) +
                      " is a nonpositive integer");
    }
  }
}

Complex h22_term(const ParamSet& p, std::int64_t k) {
  check_bilateral_params(p);
  if (k >= 0) {
    return pochhammer_ratio({{p.a, p.b}, {p.c, p.d}, k});
  }
  const std::int64_t m = -k;
  return pochhammer_ratio({{1.0 - p.c, 1.0 - p.d}, {1.0 - p.a, 1.0 - p.b}, m});
}

SeriesResult sum_h22(const ParamSet& p, double tol, std::int64_t max_terms) {
  check_bilateral_params(p);
  const Complex excess = p.c + p.d - p.a - p.b;
  if (excess.real() < kBilateralMargin) {
    throw DivergentInput("sum_h22: Re(c + d - a - b) = " + std::to_string(excess.real()) +
                         " is below 1.05");
  }

  // The trailing 1 cancels the implicit k! of the series definition.
  const SeriesResult pos = sum_series({{p.a, p.b, 1.0}, {p.c, p.d}, 1.0}, tol, max_terms);
  const SeriesResult neg =
      sum_series({{1.0 - p.c, 1.0 - p.d, 1.0}, {1.0 - p.a, 1.0 - p.b}, 1.0}, tol, max_terms);

  SeriesResult r;
  // neg includes its m = 0 term, which is the k = 0 term already in pos.
  r.value = pos.value + (neg.value - 1.0);
  r.abs_error_estimate = pos.abs_error_estimate + neg.abs_error_estimate;
  r.terms_used = pos.terms_used + neg.terms_used;
  r.verdict = combine(pos.verdict, neg.verdict);
  return r;
}

}  // namespace hypersum
