#pragma once
#include "cost_params.hpp"

namespace lwcost {

struct CostBreakdown
{
  Cost init{ 0 };
  Cost process_ad{ 0 };
  Cost process_msg{ 0 };
  Cost finalize{ 0 };
  Cost total{ 0 };

  friend bool operator==(const CostBreakdown&, const CostBreakdown&) = default;
};

inline Cost
eval_init(const CostParams& p)
{
  return p.c_k + p.c_n;
}

struct ProcessCost
{
  Cost ad;
  Cost msg;
};

inline ProcessCost
eval_process(uint64_t a, uint64_t m, const Cost& T_p, const CostParams& p)
{
  return { Cost(int64_t(a)) * (T_p + p.c_A), Cost(int64_t(m)) * (T_p + p.c_M) };
}

inline Cost
eval_finalize(const CostParams& p)
{
  return p.c_f;
}

inline CostBreakdown
eval_total(uint64_t a, uint64_t m, const Cost& T_p, const CostParams& p)
{
  CostBreakdown out;
  out.init = eval_init(p);
  const auto proc = eval_process(a, m, T_p, p);
  out.process_ad = proc.ad;
  out.process_msg = proc.msg;
  out.finalize = eval_finalize(p);
  out.total = out.init + out.process_ad + out.process_msg + out.finalize;
  return out;
}

}
