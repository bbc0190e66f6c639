#include <algorithm>
#include <cstdio>

#include "hypersum/complex.hpp"
#include "hypersum/error.hpp"
#include "internal.hpp"

namespace hypersum {

bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

std::string to_string(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g)", z.real(), z.imag());
  return buf;
}

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kPole: return "PoleError";
    case ErrorCode::kOverflow: return "OverflowError";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kShape: return "ShapeError";
    case ErrorCode::kDegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::kDivergentInput: return "DivergentInput";
    case ErrorCode::kNearSingular: return "NearSingular";
    case ErrorCode::kNotConverged: return "NotConverged";
    case ErrorCode::kConfig: return "ConfigError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

namespace detail {

void cancel_common(std::vector<Complex>& num, std::vector<Complex>& den) {
  for (auto it = num.begin(); it != num.end();) {
    auto match = std::find(den.begin(), den.end(), *it);
    if (match != den.end()) {
      den.erase(match);
      it = num.erase(it);
    } else {
      ++it;
    }
  }
}

void canonical_order(std::vector<Complex>& values) {
  std::sort(values.begin(), values.end(), [](Complex l, Complex r) {
    if (l.real() != r.real()) return l.real() < r.real();
    return l.imag() < r.imag();
  });
}

long long nonpositive_integer_index(Complex z, double tolerance) {
  if (std::fabs(z.imag()) >= tolerance) return -1;
  const double r = std::nearbyint(z.real());
  if (r > 0.0 || std::fabs(z.real() - r) >= tolerance) return -1;
  return static_cast<long long>(-r);
}

}  // namespace detail
}  // namespace hypersum
