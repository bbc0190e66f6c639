#include "hypersum/hypersum.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "hypersum/bilateral.hpp"
#include "hypersum/error.hpp"
#include "hypersum/gamma.hpp"
#include "hypersum/hyperseries.hpp"
#include "hypersum/identities.hpp"
#include "hypersum/pochhammer.hpp"
#include "hypersum/verify.hpp"

struct hs_config {
  hypersum::RunConfig rep;
};

struct hs_report {
  hypersum::VerificationReport rep;
  hypersum::OutputFormat format = hypersum::OutputFormat::kJson;
};

namespace {

using hypersum::Complex;

thread_local std::string g_last_error;

hs_status status_of(hypersum::ErrorCode code) {
  // ErrorCode values are defined to match hs_status.
  return static_cast<hs_status>(static_cast<int>(code));
}

template <class F>
hs_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return HS_OK;
  } catch (const hypersum::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HS_ERR_INTERNAL;
  }
}

hs_status null_argument() {
  g_last_error = "null pointer argument";
  return HS_ERR_INVALID_ARGUMENT;
}

Complex in(hs_complex z) { return {z.re, z.im}; }
hs_complex out(Complex z) { return {z.real(), z.imag()}; }

std::vector<Complex> list(const hs_complex* values, size_t count) {
  std::vector<Complex> v;
  v.reserve(count);
  for (size_t i = 0; i < count; ++i) v.push_back(in(values[i]));
  return v;
}

bool bad_list(const hs_complex* values, size_t count) { return count > 0 && values == nullptr; }

hypersum::ParamSet params_of(const hs_params& p) {
  return {in(p.a), in(p.b), in(p.c), in(p.d)};
}

hs_series_result series_out(const hypersum::SeriesResult& r) {
  hs_series_result o;
  o.value = out(r.value);
  o.abs_error_estimate = r.abs_error_estimate;
  o.terms_used = r.terms_used;
  o.verdict = static_cast<hs_verdict>(static_cast<int>(r.verdict));
  return o;
}

char* copy_string(const std::string& s) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (buf == nullptr) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

}  // namespace

static_assert(static_cast<int>(hypersum::ErrorCode::kPole) == HS_ERR_POLE);
static_assert(static_cast<int>(hypersum::ErrorCode::kInvalidArgument) == HS_ERR_INVALID_ARGUMENT);
static_assert(static_cast<int>(hypersum::Verdict::kDiverged) == HS_DIVERGED);

extern "C" {

const char* hs_status_string(hs_status status) {
  switch (status) {
    case HS_OK: return "ok";
    case HS_ERR_INTERNAL: return "InternalError";
    default: return hypersum::error_code_name(static_cast<hypersum::ErrorCode>(status));
  }
}

const char* hs_last_error_message(void) { return g_last_error.c_str(); }

const char* hs_version(void) { return "0.1.0"; }

hs_status hs_log_gamma(hs_complex z, hs_complex* result) {
  if (!result) return null_argument();
  return guarded([&] { *result = out(hypersum::log_gamma(in(z))); });
}

hs_status hs_gamma(hs_complex z, hs_complex* result) {
  if (!result) return null_argument();
  return guarded([&] { *result = out(hypersum::gamma(in(z))); });
}

hs_status hs_gamma_ratio(const hs_complex* numerators, size_t n_num,
                         const hs_complex* denominators, size_t n_den, int pole_aware,
                         hs_complex* result) {
  if (!result || bad_list(numerators, n_num) || bad_list(denominators, n_den)) {
    return null_argument();
  }
  return guarded([&] {
    const hypersum::GammaRatioSpec spec{list(numerators, n_num), list(denominators, n_den)};
    *result = out(hypersum::gamma_ratio(
        spec, pole_aware ? hypersum::PoleMode::kAware : hypersum::PoleMode::kStrict));
  });
}

hs_status hs_limit_ratio_defect(hs_complex x, hs_complex y, int64_t n, double* result) {
  if (!result) return null_argument();
  return guarded([&] { *result = hypersum::limit_ratio_defect(in(x), in(y), n); });
}

hs_status hs_pochhammer(hs_complex x, int64_t n, hs_complex* result) {
  if (!result) return null_argument();
  return guarded([&] { *result = out(hypersum::pochhammer(in(x), n)); });
}

hs_status hs_pochhammer_reflect(hs_complex x, int64_t m, hs_complex* result) {
  if (!result) return null_argument();
  return guarded([&] { *result = out(hypersum::pochhammer_reflect(in(x), m)); });
}

hs_status hs_pochhammer_ratio(const hs_complex* numerators, size_t n_num,
                              const hs_complex* denominators, size_t n_den, int64_t index,
                              hs_complex* result) {
  if (!result || bad_list(numerators, n_num) || bad_list(denominators, n_den)) {
    return null_argument();
  }
  return guarded([&] {
    *result = out(hypersum::pochhammer_ratio(
        {list(numerators, n_num), list(denominators, n_den), index}));
  });
}

hs_status hs_convergence_excess(const hs_complex* numerators, size_t n_num,
                                const hs_complex* denominators, size_t n_den,
                                hs_complex* result) {
  if (!result || bad_list(numerators, n_num) || bad_list(denominators, n_den)) {
    return null_argument();
  }
  return guarded([&] {
    *result = out(hypersum::convergence_excess(
        {list(numerators, n_num), list(denominators, n_den), Complex{1.0, 0.0}}));
  });
}

hs_status hs_sum_series(const hs_complex* numerators, size_t n_num,
                        const hs_complex* denominators, size_t n_den, hs_complex argument,
                        double tol, int64_t max_terms, hs_series_result* result) {
  if (!result || bad_list(numerators, n_num) || bad_list(denominators, n_den)) {
    return null_argument();
  }
  return guarded([&] {
    *result = series_out(hypersum::sum_series(
        {list(numerators, n_num), list(denominators, n_den), in(argument)}, tol, max_terms));
  });
}

hs_status hs_h22_term(const hs_params* params, int64_t k, hs_complex* result) {
  if (!params || !result) return null_argument();
  return guarded([&] { *result = out(hypersum::h22_term(params_of(*params), k)); });
}

hs_status hs_sum_h22(const hs_params* params, double tol, int64_t max_terms,
                     hs_series_result* result) {
  if (!params || !result) return null_argument();
  return guarded(
      [&] { *result = series_out(hypersum::sum_h22(params_of(*params), tol, max_terms)); });
}

hs_status hs_dougall_rhs(const hs_params* params, hs_complex* result) {
  if (!params || !result) return null_argument();
  return guarded([&] { *result = out(hypersum::dougall_rhs(params_of(*params))); });
}

hs_status hs_saalschutz_lhs(const hs_params* params, double tol, int64_t max_terms,
                            hs_series_result* result) {
  if (!params || !result) return null_argument();
  return guarded([&] {
    *result = series_out(hypersum::saalschutz_lhs(params_of(*params), tol, max_terms));
  });
}

hs_status hs_saalschutz_rhs(const hs_params* params, double tol, int64_t max_terms,
                            hs_complex* result) {
  if (!params || !result) return null_argument();
  return guarded(
      [&] { *result = out(hypersum::saalschutz_rhs(params_of(*params), tol, max_terms)); });
}

hs_status hs_semifinite_lhs(const hs_params* params, int64_t n, double tol, int64_t max_terms,
                            hs_series_result* result) {
  if (!params || !result) return null_argument();
  return guarded([&] {
    *result = series_out(hypersum::semifinite_lhs({params_of(*params), n, tol, max_terms}));
  });
}

hs_status hs_semifinite_rhs(const hs_params* params, int64_t n, double tol, int64_t max_terms,
                            hs_complex* result) {
  if (!params || !result) return null_argument();
  return guarded([&] {
    *result = out(hypersum::semifinite_rhs({params_of(*params), n, tol, max_terms}));
  });
}

hs_status hs_semifinite_first_term(const hs_params* params, int64_t n, double tol,
                                   int64_t max_terms, hs_complex* result) {
  if (!params || !result) return null_argument();
  return guarded([&] {
    *result = out(hypersum::semifinite_first_term({params_of(*params), n, tol, max_terms}));
  });
}

double hs_relative_deviation(hs_complex lhs, hs_complex rhs) {
  return hypersum::relative_deviation(in(lhs), in(rhs));
}

hs_config* hs_config_create(void) { return new (std::nothrow) hs_config{}; }

void hs_config_destroy(hs_config* config) { delete config; }

hs_status hs_config_set_identity(hs_config* config, const char* name) {
  if (!config || !name) return null_argument();
  const auto kind = hypersum::parse_identity(name);
  if (!kind) {
    g_last_error = std::string("unknown identity '") + name + "'";
    return HS_ERR_CONFIG;
  }
  config->rep.identity = *kind;
  return HS_OK;
}

hs_status hs_config_set_samples(hs_config* config, int64_t samples) {
  if (!config) return null_argument();
  config->rep.samples = samples;
  return HS_OK;
}

hs_status hs_config_set_seed(hs_config* config, uint64_t seed) {
  if (!config) return null_argument();
  config->rep.seed = seed;
  return HS_OK;
}

hs_status hs_config_set_tol(hs_config* config, double tol) {
  if (!config) return null_argument();
  config->rep.tol = tol;
  return HS_OK;
}

hs_status hs_config_set_n_list(hs_config* config, const int64_t* n, size_t count) {
  if (!config || (count > 0 && !n)) return null_argument();
  config->rep.n_list = std::vector<std::int64_t>(n, n + count);
  return HS_OK;
}

hs_status hs_config_set_format(hs_config* config, const char* name) {
  if (!config || !name) return null_argument();
  const auto format = hypersum::parse_format(name);
  if (!format) {
    g_last_error = std::string("unknown format '") + name + "'";
    return HS_ERR_CONFIG;
  }
  config->rep.format = *format;
  return HS_OK;
}

hs_status hs_config_set_parallelism(hs_config* config, int parallelism) {
  if (!config) return null_argument();
  config->rep.parallelism = parallelism;
  return HS_OK;
}

hs_status hs_config_set_max_terms(hs_config* config, int64_t max_terms) {
  if (!config) return null_argument();
  config->rep.max_terms = max_terms;
  return HS_OK;
}

hs_status hs_config_validate(const hs_config* config) {
  if (!config) return null_argument();
  return guarded([&] { hypersum::validate(config->rep); });
}

hs_status hs_run_verification(const hs_config* config, hs_report** result) {
  if (!config || !result) return null_argument();
  return guarded([&] {
    auto report = std::make_unique<hs_report>();
    report->rep = hypersum::run_verification(config->rep);
    report->format = config->rep.format;
    *result = report.release();
  });
}

void hs_report_destroy(hs_report* report) { delete report; }

int64_t hs_report_total(const hs_report* report) {
  return report ? report->rep.summary.total : 0;
}

int64_t hs_report_passed(const hs_report* report) {
  return report ? report->rep.summary.passed : 0;
}

double hs_report_max_rel_dev(const hs_report* report) {
  return report ? report->rep.summary.max_rel_dev : 0.0;
}

double hs_report_wall_time(const hs_report* report) {
  return report ? report->rep.summary.wall_time_seconds : 0.0;
}

int hs_report_exit_code(const hs_report* report) {
  return report ? hypersum::exit_code(report->rep) : 1;
}

hs_status hs_report_emit(const hs_report* report, const char* format, int include_timing,
                         char** out_text) {
  if (!report || !out_text) return null_argument();
  hypersum::OutputFormat f = report->format;
  if (format) {
    const auto parsed = hypersum::parse_format(format);
    if (!parsed) {
      g_last_error = std::string("unknown format '") + format + "'";
      return HS_ERR_CONFIG;
    }
    f = *parsed;
  }
  return guarded([&] {
    *out_text = copy_string(hypersum::emit_report(report->rep, f, include_timing != 0));
  });
}

hs_status hs_report_parse_json(const char* text, hs_report** result) {
  if (!text || !result) return null_argument();
  return guarded([&] {
    auto report = std::make_unique<hs_report>();
    report->rep = hypersum::parse_report_json(text);
    *result = report.release();
  });
}

void hs_string_free(char* text) { std::free(text); }

}  // extern "C"
