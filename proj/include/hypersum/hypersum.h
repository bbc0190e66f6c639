/*
 * C interface to libhypersum: complex Gamma kernel, Pochhammer symbols,
 * unit-argument hypergeometric series, the bilateral 2H2 sum, the identity
 * evaluators, and the seeded verification harness.
 *
 * Every function returns an hs_status. On failure the out-parameters are
 * left untouched and hs_last_error_message() describes the failure on the
 * calling thread. Functions are reentrant; handles are not shared between
 * threads by the library.
 */
#ifndef HYPERSUM_H_
#define HYPERSUM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HYPERSUM_BUILDING)
#    define HS_API __declspec(dllexport)
#  else
#    define HS_API __declspec(dllimport)
#  endif
#else
#  define HS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hs_status {
  HS_OK = 0,
  HS_ERR_POLE = 1,
  HS_ERR_OVERFLOW = 2,
  HS_ERR_DIVISION_BY_ZERO = 3,
  HS_ERR_SHAPE = 4,
  HS_ERR_DEGENERATE_DENOMINATOR = 5,
  HS_ERR_DIVERGENT_INPUT = 6,
  HS_ERR_NEAR_SINGULAR = 7,
  HS_ERR_NOT_CONVERGED = 8,
  HS_ERR_CONFIG = 9,
  HS_ERR_INVALID_ARGUMENT = 10,
  HS_ERR_INTERNAL = 99
} hs_status;

typedef enum hs_verdict {
  HS_CONVERGED = 0,
  HS_TERMINATED = 1,
  HS_MAX_TERMS_EXCEEDED = 2,
  HS_DIVERGED = 3
} hs_verdict;

typedef struct hs_complex {
  double re;
  double im;
} hs_complex;

typedef struct hs_params {
  hs_complex a, b, c, d;
} hs_params;

typedef struct hs_series_result {
  hs_complex value;
  double abs_error_estimate;
  int64_t terms_used;
  hs_verdict verdict;
} hs_series_result;

HS_API const char* hs_status_string(hs_status status);
HS_API const char* hs_last_error_message(void);
HS_API const char* hs_version(void);

/* Gamma kernel */
HS_API hs_status hs_log_gamma(hs_complex z, hs_complex* out);
HS_API hs_status hs_gamma(hs_complex z, hs_complex* out);
/* pole_aware != 0: a denominator pole yields 0 instead of HS_ERR_POLE. */
HS_API hs_status hs_gamma_ratio(const hs_complex* numerators, size_t n_num,
                                const hs_complex* denominators, size_t n_den,
                                int pole_aware, hs_complex* out);
HS_API hs_status hs_limit_ratio_defect(hs_complex x, hs_complex y, int64_t n, double* out);

/* Pochhammer symbols */
HS_API hs_status hs_pochhammer(hs_complex x, int64_t n, hs_complex* out);
HS_API hs_status hs_pochhammer_reflect(hs_complex x, int64_t m, hs_complex* out);
HS_API hs_status hs_pochhammer_ratio(const hs_complex* numerators, size_t n_num,
                                     const hs_complex* denominators, size_t n_den,
                                     int64_t index, hs_complex* out);

/* Unilateral series; the k! denominator is implicit. */
HS_API hs_status hs_convergence_excess(const hs_complex* numerators, size_t n_num,
                                       const hs_complex* denominators, size_t n_den,
                                       hs_complex* out);
HS_API hs_status hs_sum_series(const hs_complex* numerators, size_t n_num,
                               const hs_complex* denominators, size_t n_den,
                               hs_complex argument, double tol, int64_t max_terms,
                               hs_series_result* out);

/* Bilateral 2H2 and identities */
HS_API hs_status hs_h22_term(const hs_params* params, int64_t k, hs_complex* out);
HS_API hs_status hs_sum_h22(const hs_params* params, double tol, int64_t max_terms,
                            hs_series_result* out);
HS_API hs_status hs_dougall_rhs(const hs_params* params, hs_complex* out);
HS_API hs_status hs_saalschutz_lhs(const hs_params* params, double tol, int64_t max_terms,
                                   hs_series_result* out);
HS_API hs_status hs_saalschutz_rhs(const hs_params* params, double tol, int64_t max_terms,
                                   hs_complex* out);
HS_API hs_status hs_semifinite_lhs(const hs_params* params, int64_t n, double tol,
                                   int64_t max_terms, hs_series_result* out);
HS_API hs_status hs_semifinite_rhs(const hs_params* params, int64_t n, double tol,
                                   int64_t max_terms, hs_complex* out);
HS_API hs_status hs_semifinite_first_term(const hs_params* params, int64_t n, double tol,
                                          int64_t max_terms, hs_complex* out);
HS_API double hs_relative_deviation(hs_complex lhs, hs_complex rhs);

/* Verification harness */
typedef struct hs_config hs_config;
typedef struct hs_report hs_report;

HS_API hs_config* hs_config_create(void);
HS_API void hs_config_destroy(hs_config* config);
/* "dougall", "saalschutz", "semifinite" or "limit_decay" */
HS_API hs_status hs_config_set_identity(hs_config* config, const char* name);
HS_API hs_status hs_config_set_samples(hs_config* config, int64_t samples);
HS_API hs_status hs_config_set_seed(hs_config* config, uint64_t seed);
HS_API hs_status hs_config_set_tol(hs_config* config, double tol);
HS_API hs_status hs_config_set_n_list(hs_config* config, const int64_t* n, size_t count);
/* "json", "csv" or "human" */
HS_API hs_status hs_config_set_format(hs_config* config, const char* name);
HS_API hs_status hs_config_set_parallelism(hs_config* config, int parallelism);
HS_API hs_status hs_config_set_max_terms(hs_config* config, int64_t max_terms);
/* Full validation; the setters only reject unparseable names. */
HS_API hs_status hs_config_validate(const hs_config* config);

HS_API hs_status hs_run_verification(const hs_config* config, hs_report** out);
HS_API void hs_report_destroy(hs_report* report);
HS_API int64_t hs_report_total(const hs_report* report);
HS_API int64_t hs_report_passed(const hs_report* report);
HS_API double hs_report_max_rel_dev(const hs_report* report);
HS_API double hs_report_wall_time(const hs_report* report);
/* 0 when every case passed, 1 otherwise. */
HS_API int hs_report_exit_code(const hs_report* report);
/* format NULL uses the configured format of the run. *out_text is released
 * with hs_string_free. */
HS_API hs_status hs_report_emit(const hs_report* report, const char* format,
                                int include_timing, char** out_text);
HS_API hs_status hs_report_parse_json(const char* text, hs_report** out);
HS_API void hs_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* HYPERSUM_H_ */
