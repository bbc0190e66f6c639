#include "hypersum/hyperseries.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "hypersum/error.hpp"
#include "hypersum/gamma.hpp"
#include "internal.hpp"

namespace hypersum {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Terms of the asymptotic expansion of t(x) in powers of 1/x, and
// Euler-Maclaurin correction pairs.
constexpr int kAsymptoticTerms = 24;
constexpr int kEulerMaclaurinPairs = 8;

// B_0 .. B_25 with B_1 = -1/2.
constexpr std::array<double, 26> kBernoulli = {
    1.0,
    -0.5,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
    0.0,
    -691.0 / 2730.0,
    0.0,
    7.0 / 6.0,
    0.0,
    -3617.0 / 510.0,
    0.0,
    43867.0 / 798.0,
    0.0,
    -174611.0 / 330.0,
    0.0,
    854513.0 / 138.0,
    0.0,
    -236364091.0 / 2730.0,
    0.0,
};

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= static_cast<double>(i);
  return r;
}

// B_m(h) / N^m, evaluated on h/N and 1/N so that nothing grows with N.
Complex scaled_bernoulli_polynomial(int m, Complex h, double n) {
  const Complex u = h / n;
  const double w = 1.0 / n;
  Complex sum{0.0, 0.0};
  Complex upow{1.0, 0.0};  // u^(m-k), built from k = m downwards
  double wpow = std::pow(w, m);
  for (int k = m; k >= 0; --k) {
    if (kBernoulli[static_cast<std::size_t>(k)] != 0.0) {
      sum += binomial(m, k) * kBernoulli[static_cast<std::size_t>(k)] * wpow * upow;
    }
    upow *= u;
    wpow *= n;
  }
  return sum;
}

struct Tail {
  Complex value;
  double error = 0.0;
};

// Sum_{k >= N} t_k for a unit-argument series whose term at N is t_n.
//
// log t(x) = const - sigma log x + sum_n d_n x^-n follows from the Stirling
// series of each log Gamma(x + h); exponentiating gives
// t(x) ~ K x^-sigma sum_m c_m x^-m, which is integrated and differentiated
// termwise inside the Euler-Maclaurin formula.
Tail unit_argument_tail(const std::vector<Complex>& num, const std::vector<Complex>& den,
                        Complex sigma, Complex t_n, std::int64_t n_start) {
  if (t_n == Complex{0.0, 0.0}) return {};
  const double n = static_cast<double>(n_start);
  constexpr int kM = kAsymptoticTerms;

  // delta[j] = d_j N^-j
  std::array<Complex, kM + 1> delta{};
  for (int j = 1; j <= kM; ++j) {
    Complex acc{0.0, 0.0};
    for (const auto& h : num) acc += scaled_bernoulli_polynomial(j + 1, h, n);
    for (const auto& h : den) acc -= scaled_bernoulli_polynomial(j + 1, h, n);
    acc -= scaled_bernoulli_polynomial(j + 1, 1.0, n);  // implicit k!
    const double sign = (j % 2 == 1) ? 1.0 : -1.0;
    delta[static_cast<std::size_t>(j)] = sign * n * acc / static_cast<double>(j * (j + 1));
  }

  // gamma[m] = c_m N^-m from exp of the delta series.
  std::array<Complex, kM + 1> coeff{};
  coeff[0] = 1.0;
  for (int m = 1; m <= kM; ++m) {
    Complex acc{0.0, 0.0};
    for (int j = 1; j <= m; ++j) {
      acc += static_cast<double>(j) * delta[static_cast<std::size_t>(j)] *
             coeff[static_cast<std::size_t>(m - j)];
    }
    coeff[static_cast<std::size_t>(m)] = acc / static_cast<double>(m);
  }

  Complex shape{0.0, 0.0};  // E(N)
  Complex integral{0.0, 0.0};
  for (int m = 0; m <= kM; ++m) {
    const Complex cm = coeff[static_cast<std::size_t>(m)];
    shape += cm;
    integral += cm / (sigma + static_cast<double>(m) - 1.0);
  }
  integral *= n;

  Complex corrections{0.0, 0.0};
  Complex last{0.0, 0.0};
  for (int j = 1; j <= kEulerMaclaurinPairs; ++j) {
    const int order = 2 * j - 1;
    Complex inner{0.0, 0.0};
    for (int m = 0; m <= kM; ++m) {
      Complex rising{1.0, 0.0};
      for (int i = 0; i < order; ++i) {
        rising *= (sigma + static_cast<double>(m + i)) / n;
      }
      inner += coeff[static_cast<std::size_t>(m)] * rising;
    }
    last = kBernoulli[static_cast<std::size_t>(2 * j)] / factorial(2 * j) * inner;
    corrections += last;
  }

  Tail tail;
  tail.value = t_n * ((integral + corrections) / shape + 0.5);
  const double truncation =
      (std::abs(last) + (n + 1.0) * std::abs(coeff[kM])) / std::abs(shape);
  tail.error = std::abs(t_n) * truncation +
               4.0 * kEps * std::sqrt(n) * std::abs(tail.value);
  return tail;
}

bool is_one(Complex z) { return z == Complex{1.0, 0.0}; }

class TermGenerator {
 public:
  TermGenerator(const std::vector<Complex>& num, const std::vector<Complex>& den, Complex z)
      : num_(num), den_(den), z_(z) {}

  // t_{k+1} from t_k.
  Complex next(Complex t, std::int64_t k) const {
    const double kd = static_cast<double>(k);
    Complex top = z_;
    for (const auto& a : num_) top *= a + kd;
    Complex bottom{kd + 1.0, 0.0};
    for (const auto& b : den_) bottom *= b + kd;
    return t * (top / bottom);
  }

 private:
  const std::vector<Complex>& num_;
  const std::vector<Complex>& den_;
  Complex z_;
};

double rounding_error(double abs_sum) { return 8.0 * kEps * abs_sum; }

SeriesResult diverged() {
  SeriesResult r;
  r.value = {0.0, 0.0};
  r.abs_error_estimate = std::numeric_limits<double>::infinity();
  r.terms_used = 0;
  r.verdict = Verdict::kDiverged;
  return r;
}

}  // namespace

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::kConverged: return "Converged";
    case Verdict::kTerminated: return "Terminated";
    case Verdict::kMaxTermsExceeded: return "MaxTermsExceeded";
    case Verdict::kDiverged: return "Diverged";
  }
  return "Unknown";
}

Complex convergence_excess(const SeriesSpec& spec) {
  if (spec.numerators.size() != spec.denominators.size() + 1) {
    throw ShapeError("convergence_excess: expected " +
                     std::to_string(spec.denominators.size() + 1) + " numerators for " +
                     std::to_string(spec.denominators.size()) + " denominators, got " +
                     std::to_string(spec.numerators.size()));
  }
  std::vector<Complex> num = spec.numerators;
  std::vector<Complex> den = spec.denominators;
  detail::canonical_order(num);
  detail::canonical_order(den);
  Complex excess{0.0, 0.0};
  for (const auto& b : den) excess += b;
  for (const auto& a : num) excess -= a;
  return excess;
}

SeriesResult sum_series(const SeriesSpec& spec, double tol, std::int64_t max_terms) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw InvalidArgument("sum_series: tol must be positive");
  if (max_terms <= 0) throw InvalidArgument("sum_series: max_terms must be positive");
  if (!is_finite(spec.argument)) throw InvalidArgument("sum_series: non-finite argument");
  for (const auto& x : spec.numerators) {
    if (!is_finite(x)) throw InvalidArgument("sum_series: non-finite numerator");
  }
  for (const auto& x : spec.denominators) {
    if (!is_finite(x)) throw InvalidArgument("sum_series: non-finite denominator");
  }

  std::vector<Complex> num = spec.numerators;
  std::vector<Complex> den = spec.denominators;
  detail::canonical_order(num);
  detail::canonical_order(den);
  const Complex z = spec.argument;

  // A numerator -p stops the series after p + 1 terms.
  std::int64_t term_count = -1;
  for (const auto& a : num) {
    const long long p = detail::nonpositive_integer_index(a, kPoleTolerance);
    if (p >= 0 && (term_count < 0 || p + 1 < term_count)) term_count = p + 1;
  }
  for (const auto& b : den) {
    const long long q = detail::nonpositive_integer_index(b, kPoleTolerance);
    if (q < 0 || q > max_terms) continue;
    if (term_count < 0 || term_count >= q + 2) {
      throw DegenerateDenominator("sum_series: denominator " + to_string(b) +
                                  " zeroes term " + std::to_string(q + 1));
    }
  }

  const TermGenerator gen(num, den, z);
  detail::CompensatedSum sum;
  double abs_sum = 0.0;

  if (term_count >= 0) {
    const std::int64_t count = std::min(term_count, max_terms);
    Complex t{1.0, 0.0};
    for (std::int64_t k = 0; k < count; ++k) {
      if (k > 0) t = gen.next(t, k - 1);
      sum.add(t);
      abs_sum += std::abs(t);
    }
    SeriesResult r;
    r.value = sum.value();
    r.abs_error_estimate = rounding_error(abs_sum);
    r.terms_used = count;
    r.verdict = count == term_count ? Verdict::kTerminated : Verdict::kMaxTermsExceeded;
    return r;
  }

  const bool unit = is_one(z);
  Complex sigma{0.0, 0.0};
  if (unit) {
    const Complex excess = convergence_excess(spec);
    if (excess.real() < kExcessMargin) return diverged();
    sigma = 1.0 + excess;
  } else if (std::abs(z) > 1.0) {
    return diverged();
  }

  // Scale beyond which every factor a + k, b + k is dominated by k.
  double scale = std::abs(sigma);
  for (const auto& a : num) scale = std::max(scale, std::abs(a));
  for (const auto& b : den) scale = std::max(scale, std::abs(b));

  std::int64_t checkpoint = max_terms;
  if (unit) {
    const double first = std::max(64.0, 8.0 * scale + 32.0);
    checkpoint = std::min<std::int64_t>(max_terms, static_cast<std::int64_t>(first));
  }
  const double settle = std::max(8.0, 2.0 * scale);

  Complex t{1.0, 0.0};
  Complex prev{0.0, 0.0};
  sum.add(t);
  abs_sum = 1.0;
  std::int64_t k = 1;  // terms summed so far
  int small_run = 0;
  SeriesResult r;

  while (true) {
    for (; k < checkpoint; ++k) {
      prev = t;
      t = gen.next(t, k - 1);
      sum.add(t);
      abs_sum += std::abs(t);
      const Complex s = sum.value();
      const double scale_s = std::abs(s);

      if (t == Complex{0.0, 0.0}) {
        r.value = s;
        r.abs_error_estimate = rounding_error(abs_sum);
        r.terms_used = k + 1;
        r.verdict = Verdict::kConverged;
        return r;
      }

      if (static_cast<double>(k) >= 8.0 && std::abs(t) <= tol * scale_s) {
        ++small_run;
      } else {
        small_run = 0;
      }
      if (small_run < 3) continue;

      double estimate;
      if (unit) {
        if (static_cast<double>(k) < settle) continue;
        estimate = std::abs(t) * static_cast<double>(k) / (sigma.real() - 1.0);
      } else {
        const double rho = std::min(std::abs(t) / std::abs(prev), 0.99);
        estimate = std::abs(t) * rho / (1.0 - rho);
      }
      estimate += rounding_error(abs_sum);
      if (estimate <= tol * (1.0 + scale_s)) {
        r.value = s;
        r.abs_error_estimate = estimate;
        r.terms_used = k + 1;
        r.verdict = Verdict::kConverged;
        return r;
      }
    }

    if (!unit) {
      r.value = sum.value();
      const double rho = std::min(std::abs(t) / std::abs(prev), 0.99);
      r.abs_error_estimate = std::abs(t) * rho / (1.0 - rho) + rounding_error(abs_sum);
      r.terms_used = k;
      r.verdict = Verdict::kMaxTermsExceeded;
      return r;
    }

    // k terms t_0 .. t_{k-1} are in; the remainder starts at t_k.
    const Complex t_next = gen.next(t, k - 1);
    const Tail tail = unit_argument_tail(num, den, sigma, t_next, k);
    r.value = sum.value() + tail.value;
    r.abs_error_estimate = tail.error + rounding_error(abs_sum);
    r.terms_used = k;
    if (r.abs_error_estimate <= tol * (1.0 + std::abs(r.value))) {
      r.verdict = Verdict::kConverged;
      return r;
    }
    if (checkpoint >= max_terms) {
      r.verdict = Verdict::kMaxTermsExceeded;
      return r;
    }
    checkpoint = std::min(max_terms, 2 * checkpoint);
  }
}

}  // namespace hypersum
