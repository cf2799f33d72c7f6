#pragma once
#include "../cost_model/registry.hpp"
#include "fit.hpp"

namespace lwcost {

enum class DiscrepancyKind
{
  CountMismatch,
  CoefficientMismatch,
  PaperInternalInconsistency,
};

inline const char*
discrepancy_kind_name(DiscrepancyKind k)
{
  switch (k) {
    case DiscrepancyKind::CountMismatch:
      return "count_mismatch";
    case DiscrepancyKind::CoefficientMismatch:
      return "coefficient_mismatch";
    case DiscrepancyKind::PaperInternalInconsistency:
      return "paper_internal_inconsistency";
  }
  return "?";
}

inline DiscrepancyKind
parse_discrepancy_kind(std::string_view s)
{
  for (auto k : { DiscrepancyKind::CountMismatch, DiscrepancyKind::CoefficientMismatch,
                  DiscrepancyKind::PaperInternalInconsistency })
    if (s == discrepancy_kind_name(k))
      return k;
  throw std::invalid_argument("unknown discrepancy classification '" + std::string(s) + "'");
}

struct Discrepancy
{
  std::string subject; // grid point or coefficient name
  std::string expected;
  std::string observed;
  DiscrepancyKind kind = DiscrepancyKind::CountMismatch;
  std::string note;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

using DiscrepancyReport = std::vector<Discrepancy>;

inline std::string
describe_counts(const std::array<LabelCounts, 4>& phases)
{
  std::string out;
  for (Phase p : all_phases) {
    if (!out.empty())
      out += "; ";
    out += phase_name(p);
    out += ":";
    if (phases[size_t(p)].empty())
      out += " -";
    for (const auto& [label, n] : phases[size_t(p)])
      out += " " + label + "=" + std::to_string(n);
  }
  return out;
}

// One entry per grid point where measured counters differ from the plan.
inline DiscrepancyReport
count_discrepancies(const std::vector<Sample>& samples)
{
  DiscrepancyReport out;
  for (const auto& s : samples)
    if (!s.exact())
      out.push_back({ "(|A|=" + std::to_string(s.len_A) + ", |M|=" + std::to_string(s.len_M) + ")",
                      describe_counts(s.predicted.primitives),
                      describe_counts(s.measured.phases),
                      DiscrepancyKind::CountMismatch,
                      "" });
  return out;
}

// Value of the registry row at unit primitive cost and zero overheads.
inline Cost
registry_value(const AlgorithmId& alg, uint64_t len_A, uint64_t len_M)
{
  return eval_expr(expr_for(alg), bindings_for(alg, len_A, len_M, default_params(alg)));
}

// The registry row fitted on the same grid and predictors as the measurement.
inline ExactFit
expected_fit(const AlgorithmId& alg,
             const std::vector<Sample>& samples,
             const std::vector<Predictor>& predictors = both_predictors())
{
  std::vector<std::array<Exact, 2>> x;
  std::vector<Exact> y;
  for (const auto& s : samples) {
    x.push_back({ Exact(s.blocks_A), Exact(s.blocks_M) });
    const Cost v = registry_value(alg, s.len_A, s.len_M);
    y.push_back(Exact(v.numerator()) / Exact(v.denominator()));
  }
  return fit_points(x, y, predictors);
}

// Compares a count fit (unit primitive cost, ideally on a rate-aligned grid)
// with the registry row fitted on the same samples. The intercept is only
// compared for rows that carry fixed terms.
inline DiscrepancyReport
coefficient_check(const ExactFit& fit, const AlgorithmId& alg, const std::vector<Sample>& samples)
{
  DiscrepancyReport out;
  const auto sp = schedule_params(alg);
  const ExactFit exp = expected_fit(alg, samples);
  const std::string per_a = " per " + std::to_string(sp.rate_ad) + "-byte AD block";
  const std::string per_m = " per " + std::to_string(sp.rate_msg) + "-byte message block";
  if (fit.slope_A != exp.slope_A)
    out.push_back({ "slope_A", to_string(exp.slope_A), to_string(fit.slope_A),
                    DiscrepancyKind::CoefficientMismatch, "primitive calls" + per_a });
  if (fit.slope_M != exp.slope_M)
    out.push_back({ "slope_M", to_string(exp.slope_M), to_string(fit.slope_M),
                    DiscrepancyKind::CoefficientMismatch, "primitive calls" + per_m });
  const Cost fixed = registry_value(alg, 0, 0);
  if (fixed != Cost(0) && fit.intercept != exp.intercept)
    out.push_back({ "intercept", to_string(exp.intercept), to_string(fit.intercept),
                    DiscrepancyKind::CoefficientMismatch, "fixed primitive calls" });

  if (alg.family == Family::Sparkle) {
    const Exact want = Exact(3) / Exact(2);
    if (fit.slope_A == Exact(0)) {
      out.push_back({ "slope_M/slope_A", to_string(want), "undefined (slope_A = 0)",
                      DiscrepancyKind::CoefficientMismatch, "" });
    } else {
      const Exact got = fit.slope_M / fit.slope_A;
      if (got != want)
        out.push_back({ "slope_M/slope_A", to_string(want), to_string(got),
                        DiscrepancyKind::CoefficientMismatch,
                        "message vs associated-data cost ratio" });
    }
  }
  if (alg.family == Family::TinyJambu) {
    const auto p = plan(alg, 0, 0);
    const auto it = p.at(Phase::Init).find("tinyjambu_p640");
    const uint64_t init640 = it == p.at(Phase::Init).end() ? 0 : it->second;
    out.push_back({ "init P_640 calls", "3 (initialization text) vs 6 (tabulated row)",
                    std::to_string(init640), DiscrepancyKind::PaperInternalInconsistency,
                    "the two stated initialization costs disagree; measured value shown" });
  }
  return out;
}

}
