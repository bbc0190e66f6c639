#pragma once

#include <complex>
#include <string>

namespace hypersum {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

bool is_finite(Complex z) noexcept;

/// "(re, im)" with round-trip precision, for error messages.
std::string to_string(Complex z);

}  // namespace hypersum
