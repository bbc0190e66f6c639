#include "hypersum/pochhammer.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "hypersum/error.hpp"
#include "hypersum/gamma.hpp"

namespace hypersum {

namespace {

// Does one of the factors x, x+1, ..., x+n-1 vanish?
bool rising_hits_zero(Complex x, std::int64_t n) {
  const double k0 = std::nearbyint(-x.real());
  if (k0 < 0.0 || k0 >= static_cast<double>(n)) return false;
  return is_zero_factor(x + k0, x);
}

// Does one of the factors x-1, x-2, ..., x-m vanish?
bool falling_hits_zero(Complex x, std::int64_t m) {
  const double k0 = std::nearbyint(x.real());
  if (k0 < 1.0 || k0 > static_cast<double>(m)) return false;
  return is_zero_factor(x - k0, x);
}

bool any_pole(const GammaRatioSpec& spec) {
  for (const auto& z : spec.numerators) if (is_gamma_pole(z)) return true;
  for (const auto& z : spec.denominators) if (is_gamma_pole(z)) return true;
  return false;
}

Complex rising_product(Complex x, std::int64_t n) {
  Complex p{1.0, 0.0};
  for (std::int64_t k = 0; k < n; ++k) p *= x + static_cast<double>(k);
  return p;
}

Complex falling_reciprocal(Complex x, std::int64_t m) {
  Complex p{1.0, 0.0};
  for (std::int64_t k = 1; k <= m; ++k) p *= x - static_cast<double>(k);
  return 1.0 / p;
}

}  // namespace

bool is_zero_factor(Complex factor, Complex x) noexcept {
  return std::abs(factor) < 1e-12 * (1.0 + std::abs(x));
}

Complex pochhammer(Complex x, std::int64_t n) {
  if (!is_finite(x)) throw InvalidArgument("pochhammer: non-finite argument");
  if (n == 0) return {1.0, 0.0};

  if (n > 0) {
    if (rising_hits_zero(x, n)) return {0.0, 0.0};
    if (n > kDirectProductLimit) {
      const GammaRatioSpec spec{{x + static_cast<double>(n)}, {x}};
      if (!any_pole(spec)) return gamma_ratio(spec);
    }
    return rising_product(x, n);
  }

  const std::int64_t m = -n;
  if (falling_hits_zero(x, m)) {
    throw PoleError("pochhammer: (" + to_string(x) + ")_" + std::to_string(n) +
                    " has a vanishing factor");
  }
  if (m > kDirectProductLimit) {
    const GammaRatioSpec spec{{x - static_cast<double>(m)}, {x}};
    if (!any_pole(spec)) return gamma_ratio(spec);
  }
  return falling_reciprocal(x, m);
}

Complex pochhammer_reflect(Complex x, std::int64_t m) {
  if (m < 0) throw InvalidArgument("pochhammer_reflect: m must be nonnegative");
  const Complex base = pochhammer(1.0 - x, m);
  if (base == Complex{0.0, 0.0}) {
    throw PoleError("pochhammer_reflect: (1 - " + to_string(x) + ")_" + std::to_string(m) +
                    " vanishes");
  }
  return (m % 2 == 0 ? 1.0 : -1.0) / base;
}

Complex pochhammer_ratio(const PochhammerRatioSpec& spec) {
  const std::int64_t n = spec.index;
  const auto& num = spec.numerators;
  const auto& den = spec.denominators;
  if (n == 0) return {1.0, 0.0};

  if (n > 0) {
    for (std::size_t j = 0; j < den.size(); ++j) {
      if (rising_hits_zero(den[j], n)) {
        throw DivisionByZero("pochhammer_ratio: denominator " + std::to_string(j) + " (" +
                                 to_string(den[j]) + ")_" + std::to_string(n) + " is zero",
                             static_cast<std::int64_t>(j), n);
      }
    }
    for (const auto& x : num) {
      if (rising_hits_zero(x, n)) return {0.0, 0.0};
    }
    if (n > kDirectProductLimit) {
      GammaRatioSpec g;
      for (const auto& x : num) {
        g.numerators.push_back(x + static_cast<double>(n));
        g.denominators.push_back(x);
      }
      for (const auto& x : den) {
        g.numerators.push_back(x);
        g.denominators.push_back(x + static_cast<double>(n));
      }
      if (!any_pole(g)) return gamma_ratio(g);
    }
    // Interleaved so that equal-length lists never overflow midway.
    Complex r{1.0, 0.0};
    for (std::int64_t k = 0; k < n; ++k) {
      const double kd = static_cast<double>(k);
      for (const auto& x : num) r *= x + kd;
      for (const auto& x : den) r /= x + kd;
    }
    return r;
  }

  const std::int64_t m = -n;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (falling_hits_zero(num[i], m)) {
      throw PoleError("pochhammer_ratio: numerator " + std::to_string(i) + " (" +
                          to_string(num[i]) + ")_" + std::to_string(n) + " is infinite",
                      Side::kNumerator, static_cast<std::int64_t>(i));
    }
  }
  for (const auto& x : den) {
    if (falling_hits_zero(x, m)) return {0.0, 0.0};
  }
  if (m > kDirectProductLimit) {
    GammaRatioSpec g;
    for (const auto& x : num) {
      g.numerators.push_back(x - static_cast<double>(m));
      g.denominators.push_back(x);
    }
    for (const auto& x : den) {
      g.numerators.push_back(x);
      g.denominators.push_back(x - static_cast<double>(m));
    }
    if (!any_pole(g)) return gamma_ratio(g);
  }
  Complex r{1.0, 0.0};
  for (std::int64_t k = 1; k <= m; ++k) {
    const double kd = static_cast<double>(k);
    for (const auto& x : den) r *= x - kd;
    for (const auto& x : num) r /= x - kd;
  }
  return r;
}

}  // namespace hypersum
