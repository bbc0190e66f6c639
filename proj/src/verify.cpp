#include "hypersum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <thread>

#include "hypersum/error.hpp"
#include "hypersum/identities.hpp"
#include "hypersum/sampler.hpp"

namespace hypersum {

namespace {

constexpr double kPoleMargin = 1e-3;
constexpr int kMaxDraws = 10000;
constexpr std::int64_t kMaxSemifiniteShift = 4096;
constexpr std::int64_t kMaxDecayShift = std::int64_t{1} << 20;

const std::vector<std::int64_t> kSemifiniteShifts{0, 1, 2, 3, 5, 8, 13, 21};
const std::vector<std::int64_t> kDecayShifts{64, 128, 256, 512, 1024};

bool far_from_poles(std::initializer_list<Complex> args) {
  return std::all_of(args.begin(), args.end(),
                     [](Complex z) { return pole_distance(z) >= kPoleMargin; });
}

// Keeps x - k away from 0 for k = 1..n (negative-index Pochhammer factors).
bool far_from_positive_integers(Complex x, std::int64_t n) {
  if (n < 1) return true;
  const double r = std::clamp(std::nearbyint(x.real()), 1.0, static_cast<double>(n));
  return std::abs(x - r) >= kPoleMargin;
}

bool first_term_admissible(const ParamSet& p, double nd) {
  const Complex s = p.c + p.d - p.a - p.b;
  return std::abs(p.a + p.b - p.c - nd) >= 0.1 && (p.d - p.a - p.b).real() + nd >= 0.3 &&
         far_from_poles({1.0 + nd, s + nd, p.a, p.b, p.c, p.d, p.c - p.a - p.b + 1.0 + nd, s});
}

bool admissible(IdentityKind kind, const ParamSet& p, const std::vector<std::int64_t>& n_list) {
  const Complex s = p.c + p.d - p.a - p.b;
  const Complex dab = p.d - p.a - p.b;
  switch (kind) {
    case IdentityKind::kDougall:
      return s.real() >= 1.5 && far_from_poles({1.0 - p.a, 1.0 - p.b, p.c, p.d, s - 1.0,
                                                p.c - p.a, p.c - p.b, p.d - p.a, p.d - p.b});
    case IdentityKind::kSaalschutz:
      return dab.real() >= 0.3 && std::abs(p.a + p.b - p.c) >= 0.1 &&
             far_from_poles({p.a, p.b, p.c, p.d, s, p.c - p.a - p.b, dab, p.c - p.a, p.c - p.b,
                             p.d - p.a, p.d - p.b, p.c - p.a - p.b + 1.0});
    case IdentityKind::kSemifinite:
      if (s.real() < 1.05 || dab.real() < 0.3) return false;
      for (const std::int64_t n : n_list) {
        const double nd = static_cast<double>(n);
        if (!first_term_admissible(p, nd)) return false;
        if (!far_from_poles({p.c - p.a - p.b + nd, dab + nd, 1.0 - p.a + nd, 1.0 - p.b + nd,
                             s - 1.0 + nd, 1.0 - p.a, 1.0 - p.b, s - 1.0, p.c - p.a,
                             p.c - p.b, p.d - p.a, p.d - p.b})) {
          return false;
        }
        for (const Complex x : {s - 1.0 + nd, p.a, p.b}) {
          if (!far_from_positive_integers(x, n)) return false;
        }
      }
      return true;
    case IdentityKind::kLimitDecay:
      if (s.real() < 1.1) return false;
      for (const std::int64_t n : n_list) {
        if (!first_term_admissible(p, static_cast<double>(n))) return false;
      }
      return true;
  }
  return false;
}

bool series_ok(const SeriesResult& r) {
  return r.verdict == Verdict::kConverged || r.verdict == Verdict::kTerminated;
}

void finish(CaseRecord& rec, double tol) {
  if (rec.error.empty()) {
    rec.rel_dev = relative_deviation(rec.lhs, rec.rhs);
    if (!std::isfinite(rec.rel_dev)) {
      rec.error = "non-finite deviation";
    }
  }
  if (!rec.error.empty()) rec.rel_dev = std::numeric_limits<double>::infinity();
  rec.pass = rec.error.empty() && rec.rel_dev <= tol;
}

double fitted_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

std::vector<CaseRecord> evaluate_sample(const RunConfig& config, double tol,
                                        const std::vector<std::int64_t>& n_list,
                                        std::int64_t index) {
  const IdentityKind kind = config.identity;
  const bool per_shift = kind == IdentityKind::kSemifinite;
  std::vector<CaseRecord> out(per_shift ? n_list.size() : 1);
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j].shift_n = per_shift ? n_list[j] : 0;
  }

  ParamSet p;
  try {
    p = sample_params(kind, config.seed, index, n_list);
  } catch (const std::exception& e) {
    for (auto& rec : out) {
      rec.error = e.what();
      finish(rec, tol);
    }
    return out;
  }

  for (auto& rec : out) {
    rec.params = p;
    try {
      switch (kind) {
        case IdentityKind::kDougall: {
          const SeriesResult lhs = sum_h22(p, kSeriesTolerance, config.max_terms);
          rec.lhs = lhs.value;
          rec.terms_used = lhs.terms_used;
          rec.rhs = dougall_rhs(p);
          if (!series_ok(lhs)) rec.error = std::string("series ") + verdict_name(lhs.verdict);
          break;
        }
        case IdentityKind::kSaalschutz: {
          const SeriesResult lhs = saalschutz_lhs(p, kSeriesTolerance, config.max_terms);
          rec.lhs = lhs.value;
          rec.terms_used = lhs.terms_used;
          rec.rhs = saalschutz_rhs(p, kSeriesTolerance, config.max_terms);
          if (!series_ok(lhs)) rec.error = std::string("series ") + verdict_name(lhs.verdict);
          break;
        }
        case IdentityKind::kSemifinite: {
          const IdentityCase ic{p, rec.shift_n, kSeriesTolerance, config.max_terms};
          const SeriesResult lhs = semifinite_lhs(ic);
          rec.lhs = lhs.value;
          rec.terms_used = lhs.terms_used;
          rec.rhs = semifinite_rhs(ic);
          if (!series_ok(lhs)) rec.error = std::string("series ") + verdict_name(lhs.verdict);
          break;
        }
        case IdentityKind::kLimitDecay: {
          std::vector<double> xs, ys;
          for (const std::int64_t n : n_list) {
            const IdentityCase ic{p, n, kSeriesTolerance, config.max_terms};
            xs.push_back(std::log(static_cast<double>(n)));
            ys.push_back(std::log(std::abs(semifinite_first_term(ic))));
          }
          rec.shift_n = n_list.back();
          rec.lhs = fitted_slope(xs, ys);
          rec.rhs = 1.0 - (p.c + p.d - p.a - p.b).real();
          rec.terms_used = static_cast<std::int64_t>(n_list.size());
          break;
        }
      }
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    if (kind == IdentityKind::kLimitDecay && rec.error.empty()) {
      rec.rel_dev = std::abs(rec.lhs - rec.rhs);
      if (!std::isfinite(rec.rel_dev)) rec.error = "non-finite slope";
      if (!rec.error.empty()) rec.rel_dev = std::numeric_limits<double>::infinity();
      rec.pass = rec.error.empty() && rec.rel_dev <= tol;
    } else {
      finish(rec, tol);
    }
  }
  return out;
}

}  // namespace

const char* identity_name(IdentityKind kind) noexcept {
  switch (kind) {
    case IdentityKind::kDougall: return "dougall";
    case IdentityKind::kSaalschutz: return "saalschutz";
    case IdentityKind::kSemifinite: return "semifinite";
    case IdentityKind::kLimitDecay: return "limit_decay";
  }
  return "unknown";
}

std::optional<IdentityKind> parse_identity(std::string_view name) noexcept {
  for (auto kind : {IdentityKind::kDougall, IdentityKind::kSaalschutz, IdentityKind::kSemifinite,
                    IdentityKind::kLimitDecay}) {
    if (name == identity_name(kind)) return kind;
  }
  return std::nullopt;
}

const char* format_name(OutputFormat format) noexcept {
  switch (format) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kHuman: return "human";
  }
  return "unknown";
}

std::optional<OutputFormat> parse_format(std::string_view name) noexcept {
  for (auto f : {OutputFormat::kJson, OutputFormat::kCsv, OutputFormat::kHuman}) {
    if (name == format_name(f)) return f;
  }
  return std::nullopt;
}

void validate(const RunConfig& config) {
  if (config.samples <= 0) throw ConfigError("samples must be a positive integer");
  if (config.tol && !(*config.tol > 0.0 && std::isfinite(*config.tol))) {
    throw ConfigError("tol must be positive and finite");
  }
  if (config.parallelism < 1 || config.parallelism > 256) {
    throw ConfigError("parallelism must be between 1 and 256");
  }
  if (config.max_terms <= 0) throw ConfigError("max terms must be a positive integer");

  if (!config.n_list) return;
  const auto& nl = *config.n_list;
  switch (config.identity) {
    case IdentityKind::kDougall:
    case IdentityKind::kSaalschutz:
      throw ConfigError(std::string("--n does not apply to identity ") +
                        identity_name(config.identity));
    case IdentityKind::kSemifinite:
      if (nl.empty()) throw ConfigError("n list must not be empty");
      for (const auto n : nl) {
        if (n < 0 || n > kMaxSemifiniteShift) {
          throw ConfigError("semifinite shifts must lie in [0, 4096]");
        }
      }
      break;
    case IdentityKind::kLimitDecay: {
      const std::set<std::int64_t> distinct(nl.begin(), nl.end());
      if (distinct.size() < 2) throw ConfigError("limit_decay needs at least two distinct n");
      for (const auto n : nl) {
        if (n < 1 || n > kMaxDecayShift) throw ConfigError("limit_decay shifts must lie in [1, 2^20]");
      }
      break;
    }
  }
}

double effective_tolerance(const RunConfig& config) {
  if (config.tol) return *config.tol;
  return config.identity == IdentityKind::kLimitDecay ? 0.15 : 1e-8;
}

std::vector<std::int64_t> effective_n_list(const RunConfig& config) {
  if (config.n_list) return *config.n_list;
  switch (config.identity) {
    case IdentityKind::kSemifinite: return kSemifiniteShifts;
    case IdentityKind::kLimitDecay: return kDecayShifts;
    default: return {};
  }
}

ParamSet sample_params(IdentityKind kind, std::uint64_t seed, std::int64_t sample_index,
                       const std::vector<std::int64_t>& n_list) {
  CounterRng rng(seed, static_cast<std::uint64_t>(sample_index));
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const ParamSet p = draw_param_set(rng);
    if (admissible(kind, p, n_list)) return p;
  }
  throw InvalidArgument("sampler: no admissible parameter set after 10000 draws");
}

ReportSummary summarize(const std::vector<CaseRecord>& cases, double wall_time_seconds) {
  ReportSummary s;
  s.total = static_cast<std::int64_t>(cases.size());
  for (const auto& c : cases) {
    if (c.pass) ++s.passed;
    s.max_rel_dev = std::max(s.max_rel_dev, c.rel_dev);
  }
  s.wall_time_seconds = wall_time_seconds;
  return s;
}

VerificationReport run_verification(const RunConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  const double tol = effective_tolerance(config);
  const std::vector<std::int64_t> n_list = effective_n_list(config);

  std::vector<std::vector<CaseRecord>> per_sample(static_cast<std::size_t>(config.samples));
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (std::int64_t i = next++; i < config.samples; i = next++) {
      per_sample[static_cast<std::size_t>(i)] = evaluate_sample(config, tol, n_list, i);
    }
  };
  const int threads =
      static_cast<int>(std::min<std::int64_t>(config.parallelism, config.samples));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  VerificationReport report;
  report.identity = config.identity;
  report.seed = config.seed;
  report.tolerance = tol;
  for (auto& group : per_sample) {
    for (auto& rec : group) {
      rec.case_index = static_cast<std::int64_t>(report.cases.size());
      report.cases.push_back(std::move(rec));
    }
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report.summary = summarize(report.cases, elapsed);
  return report;
}

int exit_code(const VerificationReport& report) noexcept {
  return report.summary.passed == report.summary.total ? 0 : 1;
}

}  // namespace hypersum
