#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypersum/bilateral.hpp"
#include "hypersum/complex.hpp"

namespace hypersum {

enum class IdentityKind { kDougall, kSaalschutz, kSemifinite, kLimitDecay };
enum class OutputFormat { kJson, kCsv, kHuman };

const char* identity_name(IdentityKind kind) noexcept;
std::optional<IdentityKind> parse_identity(std::string_view name) noexcept;
const char* format_name(OutputFormat format) noexcept;
std::optional<OutputFormat> parse_format(std::string_view name) noexcept;

/// Accuracy requested from every series evaluated by the harness; well
/// below any identity tolerance it is compared against.
inline constexpr double kSeriesTolerance = 1e-12;

struct RunConfig {
  IdentityKind identity = IdentityKind::kDougall;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  /// Defaults to 1e-8 (relative deviation) or 0.15 (slope error, limit_decay).
  std::optional<double> tol;
  /// Defaults to {0,1,2,3,5,8,13,21} for semifinite and
  /// {64,128,256,512,1024} for limit_decay; rejected for other identities.
  std::optional<std::vector<std::int64_t>> n_list;
  OutputFormat format = OutputFormat::kJson;
  int parallelism = 1;
  std::int64_t max_terms = 200000;
};

/// Throws ConfigError on the first invalid field.
void validate(const RunConfig& config);

/// Tolerance and n list after defaults are applied.
double effective_tolerance(const RunConfig& config);
std::vector<std::int64_t> effective_n_list(const RunConfig& config);

/// One verified instance. For limit_decay, lhs is the fitted log-log slope
/// of |first term| against n, rhs is 1 - Re(c+d-a-b), rel_dev holds the
/// absolute slope error, and terms_used counts the fitted points.
struct CaseRecord {
  std::int64_t case_index = 0;
  ParamSet params;
  std::int64_t shift_n = 0;
  Complex lhs;
  Complex rhs;
  double rel_dev = 0.0;  // +inf when evaluation failed
  std::int64_t terms_used = 0;
  bool pass = false;
  std::string error;

  friend bool operator==(const CaseRecord&, const CaseRecord&) = default;
};

struct ReportSummary {
  std::int64_t total = 0;
  std::int64_t passed = 0;
  double max_rel_dev = 0.0;
  double wall_time_seconds = 0.0;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

struct VerificationReport {
  IdentityKind identity = IdentityKind::kDougall;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<CaseRecord> cases;
  ReportSummary summary;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Samples admissible parameter sets for sample index i (stream i of the
/// seed), rejecting draws that violate the identity's margins.
ParamSet sample_params(IdentityKind kind, std::uint64_t seed, std::int64_t sample_index,
                       const std::vector<std::int64_t>& n_list);

/// Deterministic in (config minus parallelism); cases appear in sample order,
/// and within a sample in n_list order.
VerificationReport run_verification(const RunConfig& config);

/// Recomputes total, passed and max_rel_dev from the cases.
ReportSummary summarize(const std::vector<CaseRecord>& cases, double wall_time_seconds);

/// Exit status for the CLI: 0 when every case passed, 1 otherwise.
int exit_code(const VerificationReport& report) noexcept;

/// JSON: fixed field order, complex values as {"re": .., "im": ..}, a failed
/// case's rel_dev as null. wall_time_seconds is written only when
/// include_timing is set, so default output is byte-reproducible.
std::string emit_report(const VerificationReport& report, OutputFormat format,
                        bool include_timing = false);

/// Inverse of the JSON emitter. Throws InvalidArgument on malformed input.
VerificationReport parse_report_json(std::string_view text);

}  // namespace hypersum
