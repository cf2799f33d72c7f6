#pragma once
#include "../ciphers/kat.hpp"
#include "coefficients.hpp"
#include <json.hpp>
#include <optional>

namespace lwcost {

enum class KatStatus
{
  Pass,
  Fail,
  Missing, // no published KAT file available
};

inline const char*
kat_status_name(KatStatus s)
{
  switch (s) {
    case KatStatus::Pass:
      return "pass";
    case KatStatus::Fail:
      return "fail";
    case KatStatus::Missing:
      return "missing";
  }
  return "?";
}

inline KatStatus
parse_kat_status(std::string_view s)
{
  for (auto k : { KatStatus::Pass, KatStatus::Fail, KatStatus::Missing })
    if (s == kat_status_name(k))
      return k;
  throw std::invalid_argument("unknown KAT status '" + std::string(s) + "'");
}

struct AlgorithmReport
{
  AlgorithmId algorithm;
  std::string expression;
  FitResult fit;
  bool count_exact = false;
  KatStatus kat = KatStatus::Missing;
  size_t kat_records = 0;
  DiscrepancyReport discrepancies;
  std::vector<std::string> warnings;
  std::optional<FitResult> time_fit;

  bool kat_pass() const { return kat == KatStatus::Pass; }
  bool validated() const { return kat_pass() && count_exact; }

  friend bool operator==(const AlgorithmReport& a, const AlgorithmReport& b)
  {
    auto same_fit = [](const FitResult& x, const FitResult& y) {
      return x.slope_A == y.slope_A && x.slope_M == y.slope_M && x.intercept == y.intercept &&
             x.r_squared == y.r_squared && x.residual_max == y.residual_max;
    };
    return a.algorithm == b.algorithm && a.expression == b.expression && same_fit(a.fit, b.fit) &&
           a.count_exact == b.count_exact && a.kat == b.kat && a.kat_records == b.kat_records &&
           a.discrepancies == b.discrepancies && a.warnings == b.warnings &&
           a.time_fit.has_value() == b.time_fit.has_value() &&
           (!a.time_fit || same_fit(*a.time_fit, *b.time_fit));
  }
};

struct ReportError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

inline std::filesystem::path
kat_path(const std::filesystem::path& dir, const AlgorithmId& alg)
{
  return dir / variant_key(alg.variant) / "LWC_AEAD_KAT_128_128.txt";
}

struct ValidateOptions
{
  std::optional<std::filesystem::path> kat_dir;
  bool time = false;
  int repetitions = 31;
};

// Count experiment on the default grid, exact fit and coefficient check on
// the rate-aligned grid, KAT run when a published file is present, and an
// optional wall-clock fit whose shortfalls are warnings only.
inline AlgorithmReport
validate_algorithm(const AlgorithmId& alg, const ValidateOptions& opt = {})
{
  AlgorithmReport r;
  r.algorithm = alg;
  r.expression = render_expr(expr_for(alg));

  const auto grid = run_count_experiment(default_count_config(alg));
  r.discrepancies = count_discrepancies(grid);
  const auto aligned = run_count_experiment(aligned_count_config(alg));
  auto more = count_discrepancies(aligned);
  r.discrepancies.insert(r.discrepancies.end(), more.begin(), more.end());
  r.count_exact = r.discrepancies.empty();

  const ExactFit fit = fit_counts(aligned);
  r.fit = to_double(fit);
  if (fit.residual_max != 0 || !is_integer(fit.slope_A) || !is_integer(fit.slope_M))
    r.warnings.push_back("count fit on the rate-aligned grid is not exact: residual_max " +
                         to_string(fit.residual_max));
  more = coefficient_check(fit, alg, aligned);
  r.discrepancies.insert(r.discrepancies.end(), more.begin(), more.end());

  if (opt.kat_dir && std::filesystem::exists(kat_path(*opt.kat_dir, alg))) {
    const auto res = run_kat(alg, parse_kat_file(kat_path(*opt.kat_dir, alg)));
    r.kat = res.ok() ? KatStatus::Pass : KatStatus::Fail;
    r.kat_records = res.total;
  }

  if (opt.time) {
    const auto te = run_time_experiment(default_time_config(alg, opt.repetitions));
    r.warnings.insert(r.warnings.end(), te.warnings.begin(), te.warnings.end());
    r.time_fit = fit_times(te.samples);
    if (r.time_fit->r_squared < 0.95)
      r.warnings.push_back("wall-clock fit R^2 " + std::to_string(r.time_fit->r_squared) +
                           " is below 0.95");
  }
  return r;
}

inline void
require_experiments(const std::vector<AlgorithmReport>& reports)
{
  if (reports.empty())
    throw ReportError("no experiments");
}

// JSON

inline nlohmann::json
fit_json(const FitResult& f)
{
  return { { "slope_A", f.slope_A },     { "slope_M", f.slope_M },
           { "intercept", f.intercept }, { "r2", f.r_squared },
           { "residual_max", f.residual_max } };
}

inline FitResult
fit_from_json(const nlohmann::json& j)
{
  return { j.at("slope_A").get<double>(), j.at("slope_M").get<double>(),
           j.at("intercept").get<double>(), j.at("r2").get<double>(),
           j.value("residual_max", 0.0) };
}

inline nlohmann::json
report_json(const AlgorithmReport& r)
{
  nlohmann::json d = nlohmann::json::array();
  for (const auto& e : r.discrepancies)
    d.push_back({ { "subject", e.subject },
                  { "expected", e.expected },
                  { "observed", e.observed },
                  { "classification", discrepancy_kind_name(e.kind) },
                  { "note", e.note } });
  nlohmann::json j{ { "algorithm", family_name(r.algorithm.family) },
                    { "variant", variant_name(r.algorithm.variant) },
                    { "expression", r.expression },
                    { "fit", fit_json(r.fit) },
                    { "count_exact", r.count_exact },
                    { "kat_pass", r.kat_pass() },
                    { "kat_status", kat_status_name(r.kat) },
                    { "kat_records", r.kat_records },
                    { "validated", r.validated() },
                    { "discrepancies", d },
                    { "warnings", r.warnings } };
  if (r.time_fit)
    j["time_fit"] = fit_json(*r.time_fit);
  return j;
}

inline nlohmann::json
report_json(const std::vector<AlgorithmReport>& reports)
{
  require_experiments(reports);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports)
    out.push_back(report_json(r));
  return out;
}

inline AlgorithmReport
report_from_json(const nlohmann::json& j)
{
  AlgorithmReport r;
  r.algorithm = parse_algorithm(j.at("variant").get<std::string>());
  r.expression = j.at("expression").get<std::string>();
  r.fit = fit_from_json(j.at("fit"));
  r.count_exact = j.at("count_exact").get<bool>();
  r.kat = j.contains("kat_status") ? parse_kat_status(j["kat_status"].get<std::string>())
                                   : (j.at("kat_pass").get<bool>() ? KatStatus::Pass : KatStatus::Missing);
  r.kat_records = j.value("kat_records", size_t(0));
  for (const auto& e : j.at("discrepancies"))
    r.discrepancies.push_back({ e.at("subject").get<std::string>(),
                                e.at("expected").get<std::string>(),
                                e.at("observed").get<std::string>(),
                                parse_discrepancy_kind(e.at("classification").get<std::string>()),
                                e.value("note", std::string()) });
  r.warnings = j.value("warnings", std::vector<std::string>{});
  if (j.contains("time_fit"))
    r.time_fit = fit_from_json(j["time_fit"]);
  return r;
}

inline std::vector<AlgorithmReport>
reports_from_json(const nlohmann::json& j)
{
  if (!j.is_array())
    throw ReportError("report JSON must be an array of algorithm entries");
  std::vector<AlgorithmReport> out;
  for (const auto& e : j)
    out.push_back(report_from_json(e));
  require_experiments(out);
  return out;
}

// Markdown and CSV

inline std::string
format_number(double v)
{
  if (std::isfinite(v) && v == std::round(v) && std::abs(v) < 1e15)
    return std::to_string(int64_t(v));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

inline std::string
render_markdown(const std::vector<AlgorithmReport>& reports)
{
  require_experiments(reports);
  std::string out = "| Algorithm | Variant | Expression | slope_A | slope_M | intercept | R² | "
                    "Counts exact | KAT | Discrepancies |\n"
                    "|---|---|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : reports) {
    std::string expr = r.expression;
    for (size_t p = expr.find('|'); p != std::string::npos; p = expr.find('|', p + 2))
      expr.replace(p, 1, "\\|");
    out += "| " + std::string(family_name(r.algorithm.family)) + " | " +
           variant_name(r.algorithm.variant) + " | " + expr + " | " +
           format_number(r.fit.slope_A) + " | " + format_number(r.fit.slope_M) + " | " +
           format_number(r.fit.intercept) + " | " + format_number(r.fit.r_squared) + " | " +
           (r.count_exact ? "yes" : "no") + " | " + kat_status_name(r.kat) + " | " +
           std::to_string(r.discrepancies.size()) + " |\n";
  }
  for (const auto& r : reports) {
    if (r.discrepancies.empty() && r.warnings.empty() && !r.time_fit)
      continue;
    out += "\n### " + std::string(variant_name(r.algorithm.variant)) + "\n\n";
    for (const auto& d : r.discrepancies)
      out += "- " + std::string(discrepancy_kind_name(d.kind)) + ": " + d.subject +
             " expected " + d.expected + ", observed " + d.observed +
             (d.note.empty() ? "" : " (" + d.note + ")") + "\n";
    if (r.time_fit)
      out += "- wall-clock fit: " + format_number(r.time_fit->slope_M) +
             " s per message block, R² " + format_number(r.time_fit->r_squared) + "\n";
    for (const auto& w : r.warnings)
      out += "- warning: " + w + "\n";
  }
  return out;
}

inline std::string
csv_field(const std::string& s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string
render_csv(const std::vector<AlgorithmReport>& reports)
{
  require_experiments(reports);
  std::string out = "algorithm,variant,expression,slope_A,slope_M,intercept,r2,residual_max,"
                    "count_exact,kat_pass,kat_status,discrepancies\n";
  for (const auto& r : reports) {
    std::string d;
    for (const auto& e : r.discrepancies) {
      if (!d.empty())
        d += "; ";
      d += std::string(discrepancy_kind_name(e.kind)) + ":" + e.subject + " expected=" +
           e.expected + " observed=" + e.observed;
    }
    out += csv_field(family_name(r.algorithm.family)) + "," +
           csv_field(variant_name(r.algorithm.variant)) + "," + csv_field(r.expression) + "," +
           format_number(r.fit.slope_A) + "," + format_number(r.fit.slope_M) + "," +
           format_number(r.fit.intercept) + "," + format_number(r.fit.r_squared) + "," +
           format_number(r.fit.residual_max) + "," + (r.count_exact ? "true" : "false") + "," +
           (r.kat_pass() ? "true" : "false") + "," + kat_status_name(r.kat) + "," + csv_field(d) +
           "\n";
  }
  return out;
}

}
