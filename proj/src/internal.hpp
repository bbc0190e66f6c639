#pragma once

#include <cmath>
#include <vector>

#include "hypersum/complex.hpp"

namespace hypersum::detail {

/// Neumaier summation on each component.
class CompensatedSum {
 public:
  void add(Complex x) {
    add_component(sum_re_, comp_re_, x.real());
    add_component(sum_im_, comp_im_, x.imag());
  }
  Complex value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_component(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }

  double sum_re_ = 0.0, comp_re_ = 0.0;
  double sum_im_ = 0.0, comp_im_ = 0.0;
};

/// Removes argument pairs that appear verbatim in both lists.
void cancel_common(std::vector<Complex>& num, std::vector<Complex>& den);

/// Sorts by (re, im) so that products are formed in a fixed order.
void canonical_order(std::vector<Complex>& values);

/// If z is within tolerance of a nonpositive integer -p, returns p, else -1.
long long nonpositive_integer_index(Complex z, double tolerance);

}  // namespace hypersum::detail
