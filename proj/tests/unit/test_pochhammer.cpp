#include <doctest.h>

#include <cmath>

#include "hypersum/error.hpp"
#include "hypersum/gamma.hpp"
#include "hypersum/pochhammer.hpp"
#include "support.hpp"

using hypersum::Complex;
using hypersum::pochhammer;
using testing::rel;

TEST_CASE("pochhammer examples") {
  CHECK(pochhammer(0.0, 0) == Complex(1.0));
  CHECK(pochhammer(Complex(0.3, -2.0), 0) == Complex(1.0));
  CHECK(pochhammer(1.0, 5) == Complex(120.0));
  CHECK(rel(pochhammer(3.0, -2), 0.5) < 1e-15);
  CHECK(rel(pochhammer(0.5, -1), -2.0) < 1e-15);
  CHECK_THROWS_AS(pochhammer(1.0, -1), hypersum::PoleError);
  CHECK_THROWS_AS(pochhammer(3.0, -5), hypersum::PoleError);
}

TEST_CASE("pochhammer_reflect examples") {
  CHECK(hypersum::pochhammer_reflect(Complex(0.3, 0.2), 0) == Complex(1.0));
  CHECK(rel(hypersum::pochhammer_reflect(3.0, 2), 0.5) < 1e-15);
  const Complex x(0.3, 0.2);
  CHECK(rel(hypersum::pochhammer_reflect(x, 7), pochhammer(x, -7)) < 1e-14);
}

TEST_CASE("exact zeros at nonpositive integers") {
  for (int k = 0; k <= 20; ++k) {
    for (int n = k + 1; n <= 90; n += 7) {
      CHECK(pochhammer(static_cast<double>(-k), n) == Complex(0.0));
    }
  }
  CHECK(pochhammer(-3.0, 3) != Complex(0.0));
  CHECK(hypersum::is_zero_factor(Complex(1e-13, 0), 0.0));
  CHECK_FALSE(hypersum::is_zero_factor(Complex(1e-11, 0), 0.0));
  CHECK(hypersum::is_zero_factor(Complex(1e-11, 0), 100.0));
}

TEST_CASE("splice law") {
  testing::Grid g(21);
  int checked = 0;
  for (int i = 0; i < 600; ++i) {
    const Complex x = g.point(-6.0, 6.0, -2.0, 2.0);
    const int n = g.integer(-8, 8), m = g.integer(-8, 8);
    if (testing::distance_to_integer(x) < 1e-3) continue;
    const Complex whole = pochhammer(x, n + m);
    const Complex split = pochhammer(x, n) * pochhammer(x + double(n), m);
    CHECK(rel(split, whole) <= 1e-12);
    ++checked;
  }
  CHECK(checked > 400);
}

TEST_CASE("agrees with a gamma ratio in both directions") {
  testing::Grid g(22);
  for (int i = 0; i < 400; ++i) {
    const Complex x = g.point(-10.0, 10.0, -5.0, 5.0);
    const int n = g.integer(-100, 100);
    if (testing::distance_to_integer(x) < 1e-2 ||
        testing::distance_to_integer(x + double(n)) < 1e-2) {
      continue;
    }
    const Complex want = hypersum::gamma_ratio({{x + double(n)}, {x}});
    CHECK(rel(pochhammer(x, n), want) <= 1e-11);
  }
}

TEST_CASE("reflection consistency") {
  testing::Grid g(23);
  for (int i = 0; i < 300; ++i) {
    const Complex x = g.point(-5.0, 10.0, -3.0, 3.0);
    const int m = g.integer(0, 120);
    if (testing::distance_to_integer(x) < 1e-3) continue;
    CHECK(rel(hypersum::pochhammer_reflect(x, m), pochhammer(x, -m)) <= 1e-12);
  }
}

TEST_CASE("large indices stay finite") {
  const Complex v = pochhammer(Complex(0.4, 0.1), 150);
  CHECK(std::isfinite(v.real()));
  CHECK(rel(v, hypersum::gamma_ratio({{Complex(150.4, 0.1)}, {Complex(0.4, 0.1)}})) < 1e-12);
  CHECK_THROWS_AS(pochhammer(2.0, 200), hypersum::OverflowError);
  const Complex r = hypersum::pochhammer_ratio({{0.3, 0.4}, {1.2, 1.5}, 4096});
  CHECK(std::isfinite(std::abs(r)));
  CHECK(std::abs(r) < 1e-3);
}

TEST_CASE("pochhammer_ratio examples") {
  const Complex a = 0.3, b = 0.4, c = 1.2, d = 1.5;
  CHECK(rel(hypersum::pochhammer_ratio({{a, b}, {a, b}, 9}), 1.0) < 1e-15);
  CHECK(hypersum::pochhammer_ratio({{a, b}, {c, d}, 0}) == Complex(1.0));
  const Complex want = pochhammer(1.0 - c, 3) * pochhammer(1.0 - d, 3) /
                       (pochhammer(1.0 - a, 3) * pochhammer(1.0 - b, 3));
  CHECK(rel(hypersum::pochhammer_ratio({{a, b}, {c, d}, -3}), want) < 1e-14);
}

TEST_CASE("pochhammer_ratio degenerate factors") {
  CHECK(hypersum::pochhammer_ratio({{-2.0, 0.5}, {1.5}, 5}) == Complex(0.0));
  CHECK_THROWS_AS(hypersum::pochhammer_ratio({{0.5}, {-2.0}, 5}), hypersum::DivisionByZero);
  // Negative index: a denominator pole is the vanishing limit, a numerator pole is an error.
  CHECK(hypersum::pochhammer_ratio({{0.5}, {2.0}, -3}) == Complex(0.0));
  CHECK_THROWS_AS(hypersum::pochhammer_ratio({{2.0}, {0.5}, -3}), hypersum::PoleError);
}
