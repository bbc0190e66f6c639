#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hypersum/error.hpp"
#include "hypersum/verify.hpp"

namespace hypersum {

namespace {

using Json = nlohmann::ordered_json;

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from(const Json& j) {
  return {j.at("re").get<double>(), j.at("im").get<double>()};
}

Json case_json(const CaseRecord& c) {
  Json j;
  j["case_index"] = c.case_index;
  j["params"] = Json{{"a", complex_json(c.params.a)},
                     {"b", complex_json(c.params.b)},
                     {"c", complex_json(c.params.c)},
                     {"d", complex_json(c.params.d)}};
  j["shift_n"] = c.shift_n;
  j["lhs"] = complex_json(c.lhs);
  j["rhs"] = complex_json(c.rhs);
  if (std::isfinite(c.rel_dev)) {
    j["rel_dev"] = c.rel_dev;
  } else {
    j["rel_dev"] = nullptr;
  }
  j["terms_used"] = c.terms_used;
  j["pass"] = c.pass;
  if (!c.error.empty()) j["error"] = c.error;
  return j;
}

double finite_or_inf(const Json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

std::string emit_json(const VerificationReport& r, bool include_timing) {
  Json j;
  j["identity"] = identity_name(r.identity);
  j["seed"] = r.seed;
  j["tolerance"] = r.tolerance;
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back(case_json(c));
  j["cases"] = std::move(cases);
  Json summary;
  summary["total"] = r.summary.total;
  summary["passed"] = r.summary.passed;
  if (std::isfinite(r.summary.max_rel_dev)) {
    summary["max_rel_dev"] = r.summary.max_rel_dev;
  } else {
    summary["max_rel_dev"] = nullptr;
  }
  if (include_timing) summary["wall_time_seconds"] = r.summary.wall_time_seconds;
  j["summary"] = std::move(summary);
  return j.dump(2) + "\n";
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string emit_csv(const VerificationReport& r) {
  std::ostringstream out;
  out << "identity,seed,case_index,a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im,shift_n,"
         "lhs_re,lhs_im,rhs_re,rhs_im,terms_used,rel_dev,pass\n";
  for (const auto& c : r.cases) {
    out << identity_name(r.identity) << ',' << r.seed << ',' << c.case_index;
    for (const Complex z : {c.params.a, c.params.b, c.params.c, c.params.d}) {
      out << ',' << num(z.real()) << ',' << num(z.imag());
    }
    out << ',' << c.shift_n << ',' << num(c.lhs.real()) << ',' << num(c.lhs.imag()) << ','
        << num(c.rhs.real()) << ',' << num(c.rhs.imag()) << ',' << c.terms_used << ','
        << num(c.rel_dev) << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string emit_human(const VerificationReport& r, bool include_timing) {
  std::ostringstream out;
  char line[512];
  const bool slope = r.identity == IdentityKind::kLimitDecay;
  std::snprintf(line, sizeof line, "identity %s  seed %llu  tolerance %.3g\n",
                identity_name(r.identity), static_cast<unsigned long long>(r.seed),
                r.tolerance);
  out << line;
  std::snprintf(line, sizeof line, "%6s  %-17s %-17s %-17s %-17s %5s  %-24s %-10s %8s  %s\n",
                "case", "a", "b", "c", "d", "n", slope ? "slope (expected)" : "lhs",
                slope ? "|error|" : "rel_dev", "terms", "result");
  out << line;
  auto cx = [](Complex z) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%+.4f%+.4fi", z.real(), z.imag());
    return std::string(buf);
  };
  for (const auto& c : r.cases) {
    char value[64];
    if (slope) {
      std::snprintf(value, sizeof value, "%+.4f (%+.4f)", c.lhs.real(), c.rhs.real());
    } else {
      std::snprintf(value, sizeof value, "%s", cx(c.lhs).c_str());
    }
    std::snprintf(line, sizeof line, "%6lld  %-17s %-17s %-17s %-17s %5lld  %-24s %-10.2e %8lld  %s%s%s\n",
                  static_cast<long long>(c.case_index), cx(c.params.a).c_str(),
                  cx(c.params.b).c_str(), cx(c.params.c).c_str(), cx(c.params.d).c_str(),
                  static_cast<long long>(c.shift_n), value, c.rel_dev,
                  static_cast<long long>(c.terms_used), c.pass ? "pass" : "FAIL",
                  c.error.empty() ? "" : "  ", c.error.c_str());
    out << line;
  }
  std::snprintf(line, sizeof line, "%lld/%lld passed, max %s %.3e",
                static_cast<long long>(r.summary.passed),
                static_cast<long long>(r.summary.total), slope ? "slope error" : "rel_dev",
                r.summary.max_rel_dev);
  out << line;
  if (include_timing) {
    std::snprintf(line, sizeof line, ", %.2f s", r.summary.wall_time_seconds);
    out << line;
  }
  out << '\n';
  return out.str();
}

}  // namespace

std::string emit_report(const VerificationReport& report, OutputFormat format,
                        bool include_timing) {
  switch (format) {
    case OutputFormat::kJson: return emit_json(report, include_timing);
    case OutputFormat::kCsv: return emit_csv(report);
    case OutputFormat::kHuman: return emit_human(report, include_timing);
  }
  return {};
}

VerificationReport parse_report_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    VerificationReport r;
    const auto kind = parse_identity(j.at("identity").get<std::string>());
    if (!kind) throw InvalidArgument("report: unknown identity");
    r.identity = *kind;
    r.seed = j.at("seed").get<std::uint64_t>();
    r.tolerance = j.at("tolerance").get<double>();
    for (const auto& jc : j.at("cases")) {
      CaseRecord c;
      c.case_index = jc.at("case_index").get<std::int64_t>();
      const auto& p = jc.at("params");
      c.params = {complex_from(p.at("a")), complex_from(p.at("b")), complex_from(p.at("c")),
                  complex_from(p.at("d"))};
      c.shift_n = jc.at("shift_n").get<std::int64_t>();
      c.lhs = complex_from(jc.at("lhs"));
      c.rhs = complex_from(jc.at("rhs"));
      c.rel_dev = finite_or_inf(jc.at("rel_dev"));
      c.terms_used = jc.at("terms_used").get<std::int64_t>();
      c.pass = jc.at("pass").get<bool>();
      if (jc.contains("error")) c.error = jc.at("error").get<std::string>();
      r.cases.push_back(std::move(c));
    }
    const auto& s = j.at("summary");
    r.summary.total = s.at("total").get<std::int64_t>();
    r.summary.passed = s.at("passed").get<std::int64_t>();
    r.summary.max_rel_dev = finite_or_inf(s.at("max_rel_dev"));
    if (s.contains("wall_time_seconds")) {
      r.summary.wall_time_seconds = s.at("wall_time_seconds").get<double>();
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("report: malformed JSON: ") + e.what());
  }
}

}  // namespace hypersum
