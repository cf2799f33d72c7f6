#pragma once
#include "registry.hpp"
#include <json.hpp>

namespace lwcost {

// {algorithm, variant, expression_text, parameters[]}
inline nlohmann::json
registry_entry_json(const AlgorithmId& alg)
{
  const CostExpr e = expr_for(alg);
  std::vector<std::pair<std::string, std::string>> params;
  collect_parameters(e, params);
  nlohmann::json plist = nlohmann::json::array();
  for (const auto& [symbol, name] : params)
    plist.push_back({ { "symbol", symbol },
                      { "binding", name },
                      { "meaning", describe_binding(alg, name) } });
  return { { "algorithm", family_name(alg.family) },
           { "variant", variant_name(alg.variant) },
           { "expression_text", render_expr(e) },
           { "parameters", plist } };
}

inline nlohmann::json
registry_json()
{
  nlohmann::json out = nlohmann::json::array();
  for (const auto& alg : primary_algorithms())
    out.push_back(registry_entry_json(alg));
  return out;
}

}
