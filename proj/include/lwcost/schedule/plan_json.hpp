#pragma once
#include "schedule.hpp"
#include <json.hpp>

namespace lwcost {

// {algorithm, len_A, len_M, phases: {init, ad, msg, finalize}, primitives}
inline nlohmann::json
plan_json(const PhasePlan& p)
{
  nlohmann::json phases, prims;
  for (Phase ph : all_phases) {
    phases[phase_name(ph)] = p.calls(ph);
    prims[phase_name(ph)] = nlohmann::json::object();
    for (const auto& [label, n] : p.at(ph))
      prims[phase_name(ph)][label] = n;
  }
  return { { "algorithm", family_name(p.algorithm.family) },
           { "variant", variant_name(p.algorithm.variant) },
           { "len_A", p.len_A },
           { "len_M", p.len_M },
           { "phases", phases },
           { "total", p.total_calls() },
           { "primitives", prims } };
}

}
