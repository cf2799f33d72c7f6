#pragma once
#include "../schedule/schedule.hpp"
#include <string_view>

namespace lwcost {

// Per-phase primitive invocation counts. Cipher code switches the active
// phase; each primitive call adds one to the active phase under its label.
struct OpCounters
{
  std::array<LabelCounts, 4> phases;
  uint64_t bytes_ad = 0;
  uint64_t bytes_msg = 0;
  Phase active = Phase::Init;

  void enter(Phase p) { active = p; }

  void tick(std::string_view label)
  {
    auto& m = phases[size_t(active)];
    auto it = m.find(label);
    if (it == m.end())
      m.emplace(std::string(label), 1);
    else
      it->second++;
  }

  void reset() { *this = OpCounters{}; }

  const LabelCounts& at(Phase p) const { return phases[size_t(p)]; }

  uint64_t calls(Phase p) const
  {
    uint64_t n = 0;
    for (const auto& [label, c] : at(p))
      n += c;
    return n;
  }

  uint64_t total_calls() const
  {
    uint64_t n = 0;
    for (Phase p : all_phases)
      n += calls(p);
    return n;
  }

  void merge(const OpCounters& o)
  {
    for (size_t i = 0; i < phases.size(); i++)
      for (const auto& [label, c] : o.phases[i])
        phases[i][label] += c;
    bytes_ad += o.bytes_ad;
    bytes_msg += o.bytes_msg;
  }

  friend bool operator==(const OpCounters& a, const OpCounters& b)
  {
    return a.phases == b.phases && a.bytes_ad == b.bytes_ad &&
           a.bytes_msg == b.bytes_msg;
  }
};

inline void
tick(OpCounters* c, std::string_view label)
{
  if (c)
    c->tick(label);
}

inline bool
same_counts(const OpCounters& c, const PhasePlan& p)
{
  return c.phases == p.primitives;
}

}
