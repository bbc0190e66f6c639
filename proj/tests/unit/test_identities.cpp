#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "fixtures/oracle_values.hpp"
#include "hypersum/error.hpp"
#include "hypersum/gamma.hpp"
#include "hypersum/hyperseries.hpp"
#include "hypersum/identities.hpp"
#include "support.hpp"

using hypersum::Complex;
using hypersum::IdentityCase;
using hypersum::ParamSet;
using testing::rel;

namespace {

const ParamSet kRef{0.3, 0.4, 1.2, 1.5};
const ParamSet kComplexRef{Complex(0.25, 0.3), Complex(-0.2, -0.15), Complex(1.4, 0.2),
                           Complex(1.9, -0.35)};

double slope_of_first_term(const ParamSet& p) {
  std::vector<double> xs, ys;
  for (int n = 64; n <= 1024; n *= 2) {
    xs.push_back(std::log(double(n)));
    ys.push_back(std::log(std::abs(hypersum::semifinite_first_term({p, n}))));
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
  mx /= xs.size(), my /= ys.size();
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

TEST_CASE("relative_deviation") {
  CHECK(hypersum::relative_deviation(1.0, 1.0) == 0.0);
  CHECK(hypersum::relative_deviation(2.0, 1.0) == doctest::Approx(0.5));
  CHECK(hypersum::relative_deviation(0.0, 0.0) == 0.0);
  CHECK(hypersum::relative_deviation(1e-40, 0.0) == doctest::Approx(1e-10));
}

TEST_CASE("dougall_rhs") {
  CHECK(rel(hypersum::dougall_rhs(kRef), oracle::kDougallRhs) < 1e-13);
  CHECK(rel(hypersum::dougall_rhs(kComplexRef), oracle::kComplexDougallRhs) < 1e-13);

  const Complex a(0.2, 0.1), b(-0.3, 0.2), d(1.9, -0.1);
  const Complex gauss = hypersum::gamma_ratio({{d, d - a - b}, {d - a, d - b}});
  CHECK(rel(hypersum::dougall_rhs({a, b, 1.0, d}), gauss) < 1e-13);

  const Complex v = hypersum::dougall_rhs(kComplexRef);
  const auto& p = kComplexRef;
  CHECK(rel(hypersum::dougall_rhs({p.b, p.a, p.c, p.d}), v) < 1e-15);
  CHECK(rel(hypersum::dougall_rhs({p.a, p.b, p.d, p.c}), v) < 1e-15);

  // c - a on a pole of the denominator
  CHECK(hypersum::dougall_rhs({0.4, 0.3, 1.4, 2.5}) != Complex(0.0));
  CHECK(hypersum::dougall_rhs({1.4, 0.3, 1.4, 3.5}) == Complex(0.0));
}

TEST_CASE("saalschutz_lhs") {
  const auto z = hypersum::saalschutz_lhs({0.0, 0.4, 1.2, 1.5}, 1e-12);
  CHECK(z.value == Complex(1.0));
  CHECK(z.verdict == hypersum::Verdict::kTerminated);

  const auto r = hypersum::saalschutz_lhs(kRef, 1e-12);
  CHECK(r.verdict == hypersum::Verdict::kConverged);
  CHECK(rel(r.value, oracle::kSaalschutzLhs) < 1e-12);
  CHECK(rel(hypersum::saalschutz_lhs(kComplexRef, 1e-12).value, oracle::kComplexSaalschutzLhs) <
        1e-12);

  // c + d - a - b - 1 = -3: four terms
  const Complex a(0.3, 0.1), b(0.2, -0.2), c(1.4, 0.3);
  const Complex d = a + b - c - 2.0;
  const auto t = hypersum::saalschutz_lhs({a, b, c, d}, 1e-12);
  CHECK(t.verdict == hypersum::Verdict::kTerminated);
  Complex brute = 0, term = 1;
  const Complex e = -3.0;
  for (int k = 0; k < 4; ++k) {
    brute += term;
    term *= (e + double(k)) * (a + double(k)) * (b + double(k)) /
            ((c + double(k)) * (d + double(k)) * double(k + 1));
  }
  CHECK(rel(t.value, brute) < 1e-14);
}

TEST_CASE("saalschutz_rhs") {
  CHECK(rel(hypersum::saalschutz_rhs(kRef, 1e-12), hypersum::saalschutz_lhs(kRef, 1e-12).value) <
        1e-9);
  CHECK(rel(hypersum::saalschutz_rhs(kComplexRef, 1e-12), oracle::kComplexSaalschutzLhs) < 1e-9);

  // |a + b - c| = 0.5
  const ParamSet probe{0.2, 0.35, oracle::kProbeC, 1.6};
  CHECK(rel(hypersum::saalschutz_rhs(probe, 1e-12), oracle::kProbeSaalschutz) < 1e-11);
  CHECK(rel(hypersum::saalschutz_lhs(probe, 1e-12).value, oracle::kProbeSaalschutz) < 1e-11);

  const auto& p = kComplexRef;
  CHECK(rel(hypersum::saalschutz_rhs({p.b, p.a, p.c, p.d}, 1e-12),
            hypersum::saalschutz_rhs(p, 1e-12)) < 1e-13);

  CHECK_THROWS_AS(hypersum::saalschutz_rhs({0.3, 0.4, 0.7, 1.5}, 1e-12), hypersum::NearSingular);
  CHECK_THROWS_AS(hypersum::saalschutz_rhs({0.3, 0.4, 0.7 + 1e-9, 1.5}, 1e-12),
                  hypersum::NearSingular);
  CHECK_NOTHROW(hypersum::saalschutz_rhs({0.3, 0.4, 0.7 + 1e-3, 1.5}, 1e-12));
  CHECK_THROWS_AS(hypersum::saalschutz_rhs({0.5, 0.5, 1.2, 1.02}, 1e-12),
                  hypersum::DivergentInput);
}

TEST_CASE("semifinite identity at the reference point") {
  const auto l3 = hypersum::semifinite_lhs({kRef, 3});
  CHECK(rel(l3.value, oracle::kSemifiniteLhsN3) < 1e-11);
  CHECK(rel(hypersum::semifinite_rhs({kRef, 3}), l3.value) < 1e-9);

  const auto l5 = hypersum::semifinite_lhs({kComplexRef, 5});
  CHECK(rel(l5.value, oracle::kComplexSemifiniteLhsN5) < 1e-11);
  CHECK(rel(hypersum::semifinite_rhs({kComplexRef, 5}), l5.value) < 1e-9);

  for (int n : {0, 1, 2, 3, 5, 8, 13, 21, 55, 144}) {
    const Complex lhs = hypersum::semifinite_lhs({kComplexRef, n}).value;
    CHECK_MESSAGE(rel(hypersum::semifinite_rhs({kComplexRef, n}), lhs) < 1e-10, "n = " << n);
  }
}

TEST_CASE("n = 0 reproduces the Saalschutz evaluators") {
  testing::Grid g(51);
  for (int i = 0; i < 20; ++i) {
    const ParamSet p{g.point(-0.5, 0.8, -0.5, 0.5), g.point(-0.5, 0.8, -0.5, 0.5),
                     g.point(1.0, 2.5, -0.5, 0.5), g.point(1.0, 2.5, -0.5, 0.5)};
    if ((p.d - p.a - p.b).real() < 0.3 || std::abs(p.a + p.b - p.c) < 0.1) continue;
    const Complex l = hypersum::semifinite_lhs({p, 0}).value;
    CHECK(l == hypersum::saalschutz_lhs(p, 1e-12).value);
    CHECK(rel(hypersum::semifinite_rhs({p, 0}), hypersum::saalschutz_rhs(p, 1e-12)) <= 1e-13);
  }
}

TEST_CASE("semifinite errors") {
  CHECK_THROWS_AS(hypersum::semifinite_rhs({{0.3, 0.4, 0.7, 1.5}, 0}), hypersum::NearSingular);
  CHECK_THROWS_AS(hypersum::semifinite_first_term({{1.3, 1.4, 0.7, 2.5}, 2}),
                  hypersum::NearSingular);
}

TEST_CASE("first term decays") {
  double prev = INFINITY;
  for (int n : {16, 32, 64, 128}) {
    const double v = std::abs(hypersum::semifinite_first_term({kRef, n}));
    CHECK(v < prev);
    prev = v;
  }
  CHECK(std::abs(slope_of_first_term(kRef) - (-1.0)) <= 0.15);
  CHECK(std::abs(slope_of_first_term({0.1, 0.2, 1.5, 1.8}) - (-2.0)) <= 0.15);
  CHECK(slope_of_first_term({0.1, 0.2, 1.5, 1.8}) < slope_of_first_term(kRef));
}

TEST_CASE("second term tends to the bilateral closed form") {
  const Complex target = hypersum::dougall_rhs(kComplexRef);
  double prev = INFINITY;
  for (int n = 16; n <= 4096; n *= 4) {
    const double gap = rel(hypersum::semifinite_second_term({kComplexRef, n}), target);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("right side approaches the closed form") {
  // The first term decays like n^(1 - s); the second term's prefactor is 1 + O(1/n),
  // so the gap shrinks like n^-min(s - 1, 1).
  for (const ParamSet& p : {kRef, ParamSet{0.2, 0.1, 1.3, 1.6}, kComplexRef,
                            ParamSet{0.1, 0.2, 1.5, 1.8}}) {
    const Complex target = hypersum::dougall_rhs(p);
    const double s = std::min((p.c + p.d - p.a - p.b).real(), 2.0);
    std::vector<double> scaled;
    for (int n = 64; n <= 1024; n *= 2) {
      const double gap = std::abs(hypersum::semifinite_rhs({p, n}) - target);
      scaled.push_back(gap * std::pow(double(n), s - 1.0));
      CHECK(gap < 1e-2);
    }
    const auto [lo, hi] = std::minmax_element(scaled.begin(), scaled.end());
    CHECK(*hi / *lo < 1.2);
  }
}

TEST_CASE("real parameters give real values") {
  testing::Grid g(52);
  for (int i = 0; i < 20; ++i) {
    const ParamSet p{g.real(-0.5, 0.8), g.real(-0.5, 0.8), g.real(1.0, 2.5), g.real(1.0, 2.5)};
    if ((p.d - p.a - p.b).real() < 0.3 || std::abs(p.a + p.b - p.c) < 0.1) continue;
    auto real_enough = [](Complex v) { return std::abs(v.imag()) <= 1e-10 * (1 + std::abs(v.real())); };
    CHECK(real_enough(hypersum::dougall_rhs(p)));
    CHECK(real_enough(hypersum::saalschutz_lhs(p, 1e-12).value));
    CHECK(real_enough(hypersum::saalschutz_rhs(p, 1e-12)));
    for (int n : {1, 5, 21}) {
      if (std::abs(p.a + p.b - p.c - double(n)) < 0.1) continue;
      CHECK(real_enough(hypersum::semifinite_lhs({p, n}).value));
      CHECK(real_enough(hypersum::semifinite_rhs({p, n})));
    }
  }
}
