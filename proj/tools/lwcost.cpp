// lwcost: registry, scheduler, KAT runner, experiments and reports.
#include <CLI11.hpp>
#include <lwcost/lwcost.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace lwcost;
using nlohmann::json;

// Exit codes; CLI11 reports usage errors itself (106 and up).
enum Exit
{
  ok = 0,
  check_failed = 1,
  unknown_algorithm = 3,
  file_not_found = 4,
  parse_error = 5,
  bad_argument = 6,
};

struct CliFailure
{
  int code;
  std::string message;
};

AlgorithmId
algorithm_arg(const std::string& name)
{
  try {
    return parse_algorithm(name);
  } catch (const UnknownAlgorithm& e) {
    throw CliFailure{ unknown_algorithm, e.what() };
  }
}

std::vector<uint64_t>
parse_grid(const std::string& text)
{
  std::vector<uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      const unsigned long long v = std::stoull(item, &used);
      if (used != item.size() || item.front() == '-')
        throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CliFailure{ bad_argument, "grid entries must be non-negative integers, got '" + item + "'" };
    }
  }
  if (out.empty())
    throw CliFailure{ bad_argument, "grid must not be empty" };
  return out;
}

json
counts_json(const std::array<LabelCounts, 4>& phases)
{
  json j = json::object();
  for (Phase p : all_phases) {
    json m = json::object();
    for (const auto& [label, n] : phases[size_t(p)])
      m[label] = n;
    j[phase_name(p)] = m;
  }
  return j;
}

json
sample_json(const Sample& s, bool time)
{
  json j{ { "len_A", s.len_A },
          { "len_M", s.len_M },
          { "blocks_A", s.blocks_A },
          { "blocks_M", s.blocks_M },
          { "measured", counts_json(s.measured.phases) },
          { "predicted", counts_json(s.predicted.primitives) },
          { "measured_total", s.measured.total_calls() },
          { "exact", s.exact() } };
  if (time)
    j["seconds"] = s.seconds;
  return j;
}

void
write_atomic(const std::filesystem::path& out, const std::string& data)
{
  const auto dir = out.has_parent_path() ? out.parent_path() : std::filesystem::path(".");
  if (!std::filesystem::is_directory(dir))
    throw CliFailure{ file_not_found, "output directory not found: " + dir.string() };
  auto tmp = out;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f)
      throw CliFailure{ file_not_found, "cannot write " + tmp.string() };
    f << data;
    if (!f.flush())
      throw CliFailure{ file_not_found, "write failed for " + tmp.string() };
  }
  std::filesystem::rename(tmp, out);
}

std::string
render(const std::vector<AlgorithmReport>& reports, const std::string& format)
{
  if (format == "md")
    return render_markdown(reports);
  if (format == "csv")
    return render_csv(reports);
  return report_json(reports).dump(2) + "\n";
}

int
report_status(const std::vector<AlgorithmReport>& reports)
{
  for (const auto& r : reports)
    if (!r.count_exact || r.kat == KatStatus::Fail)
      return check_failed;
  return ok;
}

std::vector<AlgorithmReport>
run_validation(const std::vector<AlgorithmId>& algs, const ValidateOptions& opt)
{
  if (opt.kat_dir && !std::filesystem::is_directory(*opt.kat_dir))
    throw CliFailure{ file_not_found, "KAT directory not found: " + opt.kat_dir->string() };
  std::vector<AlgorithmReport> out;
  for (const auto& a : algs) {
    try {
      out.push_back(validate_algorithm(a, opt));
    } catch (const KatFormatError& e) {
      throw CliFailure{ parse_error, e.what() };
    }
  }
  return out;
}

}

int
main(int argc, char** argv)
{
  CLI::App app{ "Cost-model registry, phase scheduler and validation harness for the NIST LWC finalist AEAD schemes" };
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "List algorithms and variants");
  std::string list_format = "json";
  list->add_option("--format", list_format, "json or text")->check(CLI::IsMember({ "json", "text" }));

  std::string alg_name;
  auto* expr = app.add_subcommand("expr", "Print the tabulated cost expression");
  expr->add_option("algorithm", alg_name)->required();
  std::string expr_format = "text";
  expr->add_option("--format", expr_format, "text or json")->check(CLI::IsMember({ "text", "json" }));

  auto* plan_cmd = app.add_subcommand("plan", "Print the per-phase primitive plan as JSON");
  uint64_t len_ad = 0, len_msg = 0;
  plan_cmd->add_option("algorithm", alg_name)->required();
  plan_cmd->add_option("--ad", len_ad, "associated data length in bytes")->required();
  plan_cmd->add_option("--msg", len_msg, "message length in bytes")->required();

  auto* kat = app.add_subcommand("kat", "Run a KAT file");
  std::string kat_file;
  bool skip_empty_pt = false;
  kat->add_option("algorithm", alg_name)->required();
  kat->add_option("--file", kat_file, "KAT file in LWC format")->required();
  kat->add_flag("--skip-empty-pt", skip_empty_pt, "ignore records with an empty plaintext");

  auto* bench = app.add_subcommand("bench", "Run a count or wall-clock experiment");
  std::string grid, grid_ad, grid_msg;
  bool time_mode = false;
  int reps = 31;
  bench->add_option("algorithm", alg_name)->required();
  bench->add_option("--grid", grid, "comma-separated lengths for both dimensions");
  bench->add_option("--grid-ad", grid_ad, "comma-separated AD lengths");
  bench->add_option("--grid-msg", grid_msg, "comma-separated message lengths");
  bench->add_flag("--time", time_mode, "measure wall-clock time instead of counts");
  bench->add_option("--reps", reps, "repetitions per grid point in time mode")->check(CLI::PositiveNumber);

  auto* val = app.add_subcommand("validate", "Validate one or all algorithms");
  bool all = false;
  std::string kat_dir, val_format = "json";
  val->add_option("algorithm", alg_name);
  val->add_flag("--all", all, "validate the ten primary variants");
  val->add_option("--kat-dir", kat_dir, "directory of <variant>/LWC_AEAD_KAT_128_128.txt");
  val->add_flag("--time", time_mode, "add the wall-clock fit (warnings only)");
  val->add_option("--reps", reps)->check(CLI::PositiveNumber);
  val->add_option("--format", val_format)->check(CLI::IsMember({ "json", "md", "csv" }));

  auto* rep = app.add_subcommand("report", "Write the validation report");
  std::string rep_format, rep_out, rep_from;
  rep->add_option("--format", rep_format)->required()->check(CLI::IsMember({ "md", "json", "csv" }));
  rep->add_option("--out", rep_out)->required();
  rep->add_option("--kat-dir", kat_dir);
  rep->add_option("--from", rep_from, "render an existing JSON report instead of running");
  rep->add_flag("--time", time_mode);
  rep->add_option("--reps", reps)->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*list) {
      if (list_format == "text") {
        for (const auto& a : primary_algorithms()) {
          std::cout << family_key(a.family) << "\t" << family_name(a.family) << "\t";
          bool first = true;
          for (const auto& v : all_variants())
            if (v.family == a.family) {
              std::cout << (first ? "" : ",") << variant_key(v.variant);
              first = false;
            }
          std::cout << "\n";
        }
        return ok;
      }
      json out = json::array();
      for (const auto& a : primary_algorithms()) {
        json vs = json::array();
        for (const auto& v : all_variants())
          if (v.family == a.family)
            vs.push_back({ { "name", variant_name(v.variant) },
                           { "key", variant_key(v.variant) },
                           { "primary", v.variant == a.variant } });
        out.push_back({ { "algorithm", family_name(a.family) },
                        { "key", family_key(a.family) },
                        { "variants", vs } });
      }
      std::cout << out.dump(2) << "\n";
      return ok;
    }

    if (*expr) {
      const auto a = algorithm_arg(alg_name);
      if (expr_format == "json")
        std::cout << registry_entry_json(a).dump(2) << "\n";
      else
        std::cout << render_expr(expr_for(a)) << "\n";
      return ok;
    }

    if (*plan_cmd) {
      const auto a = algorithm_arg(alg_name);
      std::cout << plan_json(plan(a, len_ad, len_msg)).dump(2) << "\n";
      return ok;
    }

    if (*kat) {
      const auto a = algorithm_arg(alg_name);
      if (!std::filesystem::exists(kat_file))
        throw CliFailure{ file_not_found, "KAT file not found: " + kat_file };
      std::vector<KatRecord> records;
      try {
        records = parse_kat_file(kat_file);
      } catch (const KatFormatError& e) {
        throw CliFailure{ parse_error, e.what() };
      }
      std::function<bool(const KatRecord&)> filter;
      if (skip_empty_pt)
        filter = [](const KatRecord& r) { return !r.pt.empty(); };
      const auto res = run_kat(a, records, filter);
      std::cout << res.passed << "/" << res.total << " passed";
      if (res.skipped)
        std::cout << " (" << res.skipped << " skipped)";
      std::cout << "\n";
      for (int c : res.failed)
        std::cout << "FAIL Count = " << c << "\n";
      return res.ok() ? ok : check_failed;
    }

    if (*bench) {
      const auto a = algorithm_arg(alg_name);
      ExperimentConfig cfg = time_mode ? default_time_config(a, reps) : default_count_config(a);
      if (!grid.empty())
        cfg.grid_A = cfg.grid_M = parse_grid(grid);
      if (!grid_ad.empty())
        cfg.grid_A = parse_grid(grid_ad);
      if (!grid_msg.empty())
        cfg.grid_M = parse_grid(grid_msg);
      json out{ { "algorithm", family_name(a.family) },
                { "variant", variant_name(a.variant) },
                { "mode", time_mode ? "time" : "counts" } };
      std::vector<Sample> samples;
      std::vector<std::string> warnings;
      if (time_mode) {
        auto te = run_time_experiment(cfg);
        samples = std::move(te.samples);
        warnings = std::move(te.warnings);
        out["timer_resolution"] = te.timer_resolution;
      } else {
        samples = run_count_experiment(cfg);
      }
      json js = json::array();
      bool exact = true;
      for (const auto& s : samples) {
        js.push_back(sample_json(s, time_mode));
        exact = exact && s.exact();
      }
      out["samples"] = js;
      try {
        if (time_mode) {
          std::vector<Predictor> preds{ Predictor::BlocksM };
          if (cfg.grid_A.size() > 1)
            preds.insert(preds.begin(), Predictor::BlocksA);
          out["fit"] = fit_json(fit_times(samples, preds));
        } else {
          out["fit"] = fit_json(to_double(fit_counts(samples)));
        }
      } catch (const FitError& e) {
        warnings.push_back(e.what());
      }
      out["count_exact"] = exact;
      out["warnings"] = warnings;
      std::cout << out.dump(2) << "\n";
      return exact ? ok : check_failed;
    }

    ValidateOptions opt;
    if (!kat_dir.empty())
      opt.kat_dir = kat_dir;
    opt.time = time_mode;
    opt.repetitions = reps;

    if (*val) {
      if (all == !alg_name.empty())
        throw CliFailure{ bad_argument, "validate needs exactly one of --all or an algorithm name" };
      const auto algs = all ? primary_algorithms() : std::vector<AlgorithmId>{ algorithm_arg(alg_name) };
      const auto reports = run_validation(algs, opt);
      std::cout << render(reports, val_format);
      return report_status(reports);
    }

    if (*rep) {
      std::vector<AlgorithmReport> reports;
      if (!rep_from.empty()) {
        std::ifstream in(rep_from);
        if (!in)
          throw CliFailure{ file_not_found, "report file not found: " + rep_from };
        try {
          reports = reports_from_json(json::parse(in));
        } catch (const std::exception& e) {
          throw CliFailure{ parse_error, std::string("cannot parse report: ") + e.what() };
        }
      } else {
        reports = run_validation(primary_algorithms(), opt);
      }
      write_atomic(rep_out, render(reports, rep_format));
      return report_status(reports);
    }
  } catch (const CliFailure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const ReportError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_argument;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_argument;
  } catch (const ExperimentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bad_argument;
  }
  return ok;
}
