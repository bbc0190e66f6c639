#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "fixtures/oracle_values.hpp"
#include "hypersum/error.hpp"
#include "hypersum/gamma.hpp"
#include "hypersum/hyperseries.hpp"
#include "hypersum/pochhammer.hpp"
#include "support.hpp"

using hypersum::Complex;
using hypersum::SeriesSpec;
using hypersum::Verdict;
using testing::rel;

namespace {

// Plain forward summation in extended precision.
std::complex<long double> naive_sum(const SeriesSpec& s, long terms) {
  using L = std::complex<long double>;
  L t = 1, sum = 1;
  for (long k = 0; k + 1 < terms; ++k) {
    for (const auto& a : s.numerators) t *= L(a) + L(k);
    for (const auto& b : s.denominators) t /= L(b) + L(k);
    t *= L(s.argument) / L(k + 1);
    sum += t;
  }
  return sum;
}

Complex gauss(Complex a, Complex b, Complex d) {
  return hypersum::gamma_ratio({{d, d - a - b}, {d - a, d - b}});
}

}  // namespace

TEST_CASE("convergence_excess examples") {
  testing::Grid g(31);
  for (int i = 0; i < 50; ++i) {
    const Complex a = g.point(-1, 1, -1, 1), b = g.point(-1, 1, -1, 1);
    const Complex c = g.point(1, 3, -1, 1), d = g.point(1, 3, -1, 1);
    const Complex s = hypersum::convergence_excess({{c + d - a - b - 1.0, a, b}, {c, d}});
    CHECK(std::abs(s - 1.0) < 1e-14);
    const Complex t =
        hypersum::convergence_excess({{c - a, c - b, 1.0}, {c - a - b + 1.0, c + d - a - b}});
    CHECK(std::abs(t - (d - a - b)) < 1e-14);
    CHECK(std::abs(hypersum::convergence_excess({{a, b}, {d}}) - (d - a - b)) < 1e-15);
  }
  CHECK_THROWS_AS(hypersum::convergence_excess({{1.0, 2.0}, {3.0, 4.0}}), hypersum::ShapeError);
  CHECK_THROWS_AS(hypersum::convergence_excess({{}, {}}), hypersum::ShapeError);
}

TEST_CASE("convergence_excess is permutation invariant") {
  const Complex a(0.3, 0.1), b(-0.2, 0.4), c(0.7, 0.0), d(1.4, -0.3), e(2.2, 0.5);
  const Complex ref = hypersum::convergence_excess({{a, b, c}, {d, e}});
  CHECK(hypersum::convergence_excess({{c, a, b}, {e, d}}) == ref);
  CHECK(hypersum::convergence_excess({{b, c, a}, {d, e}}) == ref);
}

TEST_CASE("a zero numerator terminates after one term") {
  const auto r = hypersum::sum_series({{0.0, 0.3, 0.7}, {1.2, 1.9}}, 1e-12);
  CHECK(r.value == Complex(1.0));
  CHECK(r.verdict == Verdict::kTerminated);
  CHECK(r.terms_used == 1);
}

TEST_CASE("Gauss sum at unit argument") {
  const auto r = hypersum::sum_series({{0.3, 0.4}, {1.5}}, 1e-12);
  CHECK(r.verdict == Verdict::kConverged);
  CHECK(rel(r.value, gauss(0.3, 0.4, 1.5)) < 1e-11);
  CHECK(rel(r.value, oracle::kGaussAbd) < 1e-11);

  testing::Grid g(32);
  for (int i = 0; i < 40; ++i) {
    const Complex a = g.point(-0.5, 0.8, -0.5, 0.5), b = g.point(-0.5, 0.8, -0.5, 0.5);
    const Complex d = a + b + g.point(0.1, 1.5, -0.5, 0.5);
    const auto s = hypersum::sum_series({{a, b}, {d}}, 1e-12);
    CHECK(s.verdict == Verdict::kConverged);
    CHECK(rel(s.value, gauss(a, b, d)) < 1e-10);
    CHECK(s.abs_error_estimate <= 1e-12 * (1.0 + std::abs(s.value)));
  }
}

TEST_CASE("terminating balanced series") {
  const Complex a(0.3, 0.2), b(0.45, -0.1), c(1.3, 0.05);
  for (int m = 1; m <= 20; ++m) {
    const SeriesSpec s{{double(-m), a, b}, {c, 1.0 + a + b - c - double(m)}};
    const auto r = hypersum::sum_series(s, 1e-14);
    CHECK(r.verdict == Verdict::kTerminated);
    CHECK(r.terms_used == m + 1);
    const auto brute = naive_sum(s, m + 1);
    CHECK(rel(r.value, Complex(brute)) <= 1e-12);
    // classical closed form of the balanced terminating sum
    const Complex closed = hypersum::pochhammer(c - a, m) * hypersum::pochhammer(c - b, m) /
                           (hypersum::pochhammer(c, m) * hypersum::pochhammer(c - a - b, m));
    CHECK(rel(r.value, closed) <= 1e-11);
  }
}

TEST_CASE("reference values at unit argument") {
  for (const auto& p : oracle::kSeriesTable) {
    const SeriesSpec s{{p.numerators.begin(), p.numerators.end()},
                       {p.denominators.begin(), p.denominators.end()}};
    const auto r = hypersum::sum_series(s, 1e-13);
    CHECK(r.verdict == Verdict::kConverged);
    // the reported estimate bounds the true remainder, allowing a few ulps of rounding
    CHECK(std::abs(r.value - p.value) <= r.abs_error_estimate + 1e-15 * p.value);
    CHECK(rel(r.value, p.value) < 1e-12);
  }
}

TEST_CASE("partial sums at four times the term count") {
  testing::Grid g(33);
  for (int i = 0; i < 60; ++i) {
    const SeriesSpec s{{g.point(-1, 2, -1, 1), g.point(-1, 2, -1, 1)},
                       {g.point(0.5, 3, -1, 1)},
                       std::polar(g.real(0.1, 0.8), g.real(-3.1, 3.1))};
    const auto r = hypersum::sum_series(s, 1e-12);
    REQUIRE(r.verdict == Verdict::kConverged);
    const Complex ref(naive_sum(s, 4 * r.terms_used));
    CHECK(std::abs(r.value - ref) <= r.abs_error_estimate + 1e-15 * std::abs(ref));
  }
}

TEST_CASE("slowly converging unit-argument series") {
  // excess 0.06, terms decay like k^-1.06
  const auto r = hypersum::sum_series({{1.0, 1.0, 1.0}, {2.0, 1.06}}, 1e-10);
  CHECK(r.verdict == Verdict::kConverged);
  CHECK(r.terms_used < hypersum::kDefaultMaxTerms);
  CHECK(r.abs_error_estimate <= 1e-10 * (1.0 + std::abs(r.value)));
}

TEST_CASE("verdicts and errors") {
  CHECK(hypersum::sum_series({{0.5, 0.5}, {1.02}}, 1e-10).verdict == Verdict::kDiverged);
  CHECK(hypersum::sum_series({{0.5}, {}, 1.5}, 1e-10).verdict == Verdict::kDiverged);
  CHECK_THROWS_AS(hypersum::sum_series({{0.5, 0.5}, {-2.0}}, 1e-10),
                  hypersum::DegenerateDenominator);
  // terminates before the zero denominator is reached
  const auto ok = hypersum::sum_series({{-1.0, 0.5}, {-2.0}}, 1e-10);
  CHECK(ok.verdict == Verdict::kTerminated);
  CHECK(rel(ok.value, 1.0 + 0.25) < 1e-15);
  CHECK_THROWS_AS(hypersum::sum_series({{-5.0, 0.5}, {-2.0}}, 1e-10),
                  hypersum::DegenerateDenominator);
  CHECK_THROWS_AS(hypersum::sum_series({{0.5, 0.5}, {1.5}}, 0.0), hypersum::InvalidArgument);
  const auto capped = hypersum::sum_series({{0.5, 0.5}, {1.07}}, 1e-15, 100);
  CHECK(capped.verdict == Verdict::kMaxTermsExceeded);
  CHECK(capped.terms_used <= 100);
}

TEST_CASE("parameter order does not change the sum") {
  const Complex a(0.3, 0.1), b(-0.2, 0.4), c(0.7, 0.0), d(1.4, -0.3), e(2.2, 0.5);
  const auto r1 = hypersum::sum_series({{a, b, c}, {d, e}}, 1e-12);
  const auto r2 = hypersum::sum_series({{c, a, b}, {e, d}}, 1e-12);
  CHECK(r1.value == r2.value);
  CHECK(r1.terms_used == r2.terms_used);
}
