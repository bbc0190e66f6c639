#include "hypersum/gamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "hypersum/error.hpp"
#include "internal.hpp"

namespace hypersum {

namespace {

// Godfrey's coefficients for g = 607/128; relative error below 1e-15 in the
// right half-plane.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosCoeffs = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,
    .15808870322491248884e-3,   -.21026444172410488319e-3,
    .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,
    .36899182659531622704e-5,
};

constexpr double kLogSqrtTwoPi = 0.91893853320467274178032973640561764;
constexpr double kLogPi = 1.14472988584940017414342735135305871;

Complex lanczos_log_gamma(Complex z) {
  const Complex zm = z - 1.0;
  Complex series = kLanczosCoeffs[0];
  for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
    series += kLanczosCoeffs[k] / (zm + static_cast<double>(k));
  }
  const Complex t = zm + (kLanczosG + 0.5);
  return (zm + 0.5) * std::log(t) - t + kLogSqrtTwoPi + std::log(series);
}

// Principal log of sin(pi z).
Complex log_sin_pi(Complex z) {
  const double r = std::nearbyint(z.real());
  const bool odd = std::fmod(std::fabs(r), 2.0) == 1.0;
  const Complex f{z.real() - r, z.imag()};

  if (z.imag() == 0.0) {
    double s = std::sin(kPi * f.real());
    if (odd) s = -s;
    return {std::log(std::fabs(s)), s < 0.0 ? kPi : 0.0};
  }

  if (std::fabs(z.imag()) < 10.0) {
    Complex s = std::sin(kPi * f);
    if (odd) s = -s;
    return std::log(s);
  }

  // sin(w) = (i/2) e^{-iw} (1 - e^{2iw}) for Im w > 0, mirrored below.
  const Complex w = kPi * f;
  const Complex i{0.0, 1.0};
  Complex result;
  if (w.imag() > 0.0) {
    result = std::log(Complex{0.0, 0.5}) - i * w + std::log(1.0 - std::exp(2.0 * i * w));
  } else {
    result = std::log(Complex{0.0, -0.5}) + i * w + std::log(1.0 - std::exp(-2.0 * i * w));
  }
  double im = result.imag() + (odd ? kPi : 0.0);
  im = std::remainder(im, 2.0 * kPi);
  if (im <= -kPi) im += 2.0 * kPi;
  return {result.real(), im};
}

Complex log_gamma_unchecked(Complex z) {
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Reflection with the branch correction that keeps the imaginary part
  // continuous off the negative real axis (Hare, 1997).
  const double sign = std::signbit(z.imag()) ? -1.0 : 1.0;
  const double branch = sign * 2.0 * kPi * std::floor(0.5 * z.real() + 0.25);
  return Complex{kLogPi, branch} - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

Complex expm1(Complex z) {
  const double em = std::expm1(z.real());
  const double half = std::sin(0.5 * z.imag());
  return {em * std::cos(z.imag()) - 2.0 * half * half, (em + 1.0) * std::sin(z.imag())};
}

const double kLogMax = std::log(std::numeric_limits<double>::max());

}  // namespace

bool is_gamma_pole(Complex z) noexcept {
  if (std::fabs(z.imag()) >= kPoleTolerance) return false;
  const double r = std::nearbyint(z.real());
  return r <= 0.0 && std::fabs(z.real() - r) < kPoleTolerance;
}

Complex log_gamma(Complex z) {
  if (!is_finite(z)) throw InvalidArgument("log_gamma: non-finite argument " + to_string(z));
  if (is_gamma_pole(z)) throw PoleError("log_gamma: pole at " + to_string(z));
  return log_gamma_unchecked(z);
}

Complex gamma(Complex z) {
  const Complex lg = log_gamma(z);
  if (lg.real() > kLogMax) {
    throw OverflowError("gamma: |Gamma(" + to_string(z) + ")| exceeds double range");
  }
  return std::exp(lg);
}

LogRatio log_gamma_ratio(const GammaRatioSpec& spec, PoleMode mode) {
  std::vector<Complex> num = spec.numerators;
  std::vector<Complex> den = spec.denominators;

  for (std::size_t i = 0; i < num.size(); ++i) {
    if (!is_finite(num[i])) throw InvalidArgument("gamma_ratio: non-finite numerator");
    if (is_gamma_pole(num[i])) {
      throw PoleError("gamma_ratio: numerator argument " + std::to_string(i) + " = " +
                          to_string(num[i]) + " is a pole",
                      Side::kNumerator, static_cast<std::int64_t>(i));
    }
  }
  LogRatio out;
  for (std::size_t j = 0; j < den.size(); ++j) {
    if (!is_finite(den[j])) throw InvalidArgument("gamma_ratio: non-finite denominator");
    if (is_gamma_pole(den[j])) {
      if (mode == PoleMode::kAware) {
        out.vanishes = true;
        return out;
      }
      throw PoleError("gamma_ratio: denominator argument " + std::to_string(j) + " = " +
                          to_string(den[j]) + " is a pole",
                      Side::kDenominator, static_cast<std::int64_t>(j));
    }
  }

  detail::cancel_common(num, den);

  detail::CompensatedSum acc;
  for (const Complex& x : num) acc.add(log_gamma_unchecked(x));
  for (const Complex& x : den) acc.add(-log_gamma_unchecked(x));
  out.value = acc.value();
  return out;
}

Complex gamma_ratio(const GammaRatioSpec& spec, PoleMode mode) {
  const LogRatio lr = log_gamma_ratio(spec, mode);
  if (lr.vanishes) return {0.0, 0.0};
  if (lr.value.real() > kLogMax) throw OverflowError("gamma_ratio: result exceeds double range");
  return std::exp(lr.value);
}

double limit_ratio_defect(Complex x, Complex y, std::int64_t n) {
  if (n <= 0) throw InvalidArgument("limit_ratio_defect: n must be positive");
  const double nd = static_cast<double>(n);
  const Complex nx = nd + x;
  const Complex ny = nd + y;
  if (is_gamma_pole(nx)) throw PoleError("limit_ratio_defect: n + x is a pole", Side::kNumerator, 0);
  if (is_gamma_pole(ny)) throw PoleError("limit_ratio_defect: n + y is a pole", Side::kDenominator, 0);
  if (x == y) return 0.0;

  // Integer offsets: Gamma(n+x)/Gamma(n+y) is a finite product, so the
  // defect is evaluated without logarithms.
  const Complex diff = x - y;
  if (diff.imag() == 0.0 && diff.real() == std::nearbyint(diff.real()) &&
      std::fabs(diff.real()) <= 64.0) {
    const auto m = static_cast<std::int64_t>(diff.real());
    Complex ratio{1.0, 0.0};
    if (m > 0) {
      for (std::int64_t j = 0; j < m; ++j) ratio *= (ny + static_cast<double>(j)) / nd;
    } else {
      for (std::int64_t j = 0; j < -m; ++j) ratio /= (nx + static_cast<double>(j)) / nd;
    }
    return std::abs(ratio - 1.0);
  }

  const Complex log_value =
      log_gamma_unchecked(nx) - log_gamma_unchecked(ny) + (y - x) * std::log(nd);
  return std::abs(expm1(log_value));
}

}  // namespace hypersum
