// hypersum: command-line verification harness over the C API.
//
//   hypersum verify --identity {dougall|saalschutz|semifinite|limit_decay}
//                   --samples N --seed S [--tol T] [--n n1,n2,...]
//                   [--format json|csv|human] [--parallelism P] [--out FILE]
//
// Exit codes: 0 all cases pass, 1 any case fails, 2 configuration error.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypersum/hypersum.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct ConfigHandle {
  hs_config* ptr = hs_config_create();
  ~ConfigHandle() { hs_config_destroy(ptr); }
};

struct ReportHandle {
  hs_report* ptr = nullptr;
  ~ReportHandle() { hs_report_destroy(ptr); }
};

std::optional<std::int64_t> parse_int(const std::string& text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) return std::nullopt;
  return value;
}

std::optional<std::vector<std::int64_t>> parse_n_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto value = parse_int(text.substr(start, comma - start));
    if (!value) return std::nullopt;
    values.push_back(*value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

int config_error(const std::string& message) {
  std::cerr << "hypersum: configuration error: " << message << '\n';
  return kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of bilateral and unilateral hypergeometric identities"};
  app.require_subcommand(1);

  std::string identity;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::string n_text;
  std::string format = "json";
  int parallelism = 1;
  std::string out_path;
  bool timing = false;

  CLI::App* verify = app.add_subcommand("verify", "Sample parameter sets and check an identity");
  verify->add_option("--identity", identity, "dougall, saalschutz, semifinite or limit_decay")
      ->required();
  verify->add_option("--samples", samples, "Number of sampled parameter sets")->required();
  verify->add_option("--seed", seed, "Sampler seed");
  verify->add_option("--tol", tol,
                     "Pass threshold (default 1e-8; 0.15 slope error for limit_decay)");
  verify->add_option("--n", n_text, "Comma-separated shifts for semifinite / limit_decay");
  verify->add_option("--format", format, "json, csv or human");
  verify->add_option("--parallelism", parallelism, "Worker threads");
  verify->add_option("--out", out_path, "Write the report here instead of stdout");
  verify->add_flag("--timing", timing, "Include wall time in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  ConfigHandle config;
  if (config.ptr == nullptr) return kExitFail;

  if (hs_config_set_identity(config.ptr, identity.c_str()) != HS_OK ||
      hs_config_set_format(config.ptr, format.c_str()) != HS_OK) {
    return config_error(hs_last_error_message());
  }
  hs_config_set_samples(config.ptr, samples);
  hs_config_set_seed(config.ptr, seed);
  hs_config_set_parallelism(config.ptr, parallelism);
  if (tol) hs_config_set_tol(config.ptr, *tol);
  if (!n_text.empty()) {
    const auto n_list = parse_n_list(n_text);
    if (!n_list) return config_error("--n expects comma-separated integers, got '" + n_text + "'");
    hs_config_set_n_list(config.ptr, n_list->data(), n_list->size());
  }
  if (const char* env = std::getenv("VERIFY_MAX_TERMS")) {
    const auto max_terms = parse_int(env);
    if (!max_terms) return config_error(std::string("VERIFY_MAX_TERMS is not an integer: ") + env);
    hs_config_set_max_terms(config.ptr, *max_terms);
  }
  if (hs_config_validate(config.ptr) != HS_OK) return config_error(hs_last_error_message());

  ReportHandle report;
  const hs_status status = hs_run_verification(config.ptr, &report.ptr);
  if (status != HS_OK) {
    std::cerr << "hypersum: " << hs_status_string(status) << ": " << hs_last_error_message()
              << '\n';
    return status == HS_ERR_CONFIG ? kExitConfig : kExitFail;
  }

  char* text = nullptr;
  if (hs_report_emit(report.ptr, nullptr, timing ? 1 : 0, &text) != HS_OK) {
    std::cerr << "hypersum: " << hs_last_error_message() << '\n';
    return kExitFail;
  }
  const std::string body(text);
  hs_string_free(text);

  if (out_path.empty()) {
    std::cout << body;
    std::cout.flush();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    file << body;
    if (!file) {
      std::cerr << "hypersum: cannot write " << out_path << '\n';
      return kExitFail;
    }
  }
  if (format == "csv") {
    std::fprintf(stderr, "%lld/%lld passed\n", static_cast<long long>(hs_report_passed(report.ptr)),
                 static_cast<long long>(hs_report_total(report.ptr)));
  }
  return hs_report_exit_code(report.ptr);
}
