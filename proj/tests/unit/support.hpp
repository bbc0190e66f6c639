#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

namespace testing {

using C = std::complex<double>;

inline double rel(C got, C want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Uniform complex points in a box, reproducible per seed.
class Grid {
 public:
  explicit Grid(unsigned seed) : rng_(seed) {}
  C point(double re_lo, double re_hi, double im_lo, double im_hi) {
    return {std::uniform_real_distribution<double>(re_lo, re_hi)(rng_),
            std::uniform_real_distribution<double>(im_lo, im_hi)(rng_)};
  }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

inline double distance_to_integer(C z) {
  return std::hypot(z.real() - std::round(z.real()), z.imag());
}

}  // namespace testing
