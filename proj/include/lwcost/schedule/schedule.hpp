#pragma once
#include "../cost_model/algorithm.hpp"
#include "../cost_model/phases.hpp"
#include "../cost_model/registry.hpp"
#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lwcost {

enum class Phase
{
  Init,
  Ad,
  Msg,
  Finalize,
};

inline constexpr std::array<Phase, 4> all_phases{ Phase::Init,
                                                  Phase::Ad,
                                                  Phase::Msg,
                                                  Phase::Finalize };

inline const char*
phase_name(Phase p)
{
  switch (p) {
    case Phase::Init:
      return "init";
    case Phase::Ad:
      return "ad";
    case Phase::Msg:
      return "msg";
    case Phase::Finalize:
      return "finalize";
  }
  return "?";
}

enum class EmptyRule
{
  Skip,
  OnePaddedBlock,
};

enum class FinalBlockRule
{
  NoExtra,    // ceil(len / rate) blocks
  ExtraBlock, // floor(len / rate) + 1 blocks: padding spills into a new block
};

// Primitive calls contributed by one input stream of a phase. Calls are
// blocks / divisor + offset once at least one block exists, capped at `cap`
// when cap > 0.
struct PhaseTerm
{
  std::string label;
  uint64_t rate = 1;
  uint64_t prefix = 0; // bytes prepended to the stream before blocking
  EmptyRule empty = EmptyRule::Skip;
  FinalBlockRule final_block = FinalBlockRule::NoExtra;
  uint64_t divisor = 1;
  int64_t offset = 0;
  uint64_t cap = 0;
};

struct FixedCalls
{
  std::string label;
  uint64_t count;
};

enum class ScheduleKind
{
  Blocks,
  // Continuous keystream of `word_label` calls, each covering
  // `bytes_per_word` bytes of the stream DER(|A|) || A || M.
  Keystream,
};

struct ScheduleParams
{
  AlgorithmId algorithm;
  uint64_t rate_ad;  // nominal bytes of AD per primitive call
  uint64_t rate_msg; // nominal bytes of message per primitive call
  std::vector<FixedCalls> init;
  std::vector<FixedCalls> finalize;
  std::vector<PhaseTerm> ad_terms;
  std::vector<PhaseTerm> msg_terms;
  ScheduleKind kind = ScheduleKind::Blocks;
  std::string word_label;
  uint64_t bytes_per_word = 0;

  uint64_t init_calls() const { return sum(init); }
  uint64_t finalize_calls() const { return sum(finalize); }
  EmptyRule empty_ad_rule() const { return first(ad_terms).empty; }
  EmptyRule empty_msg_rule() const { return first(msg_terms).empty; }
  FinalBlockRule full_final_block_rule() const
  {
    return first(msg_terms).final_block;
  }

private:
  static uint64_t sum(const std::vector<FixedCalls>& v)
  {
    uint64_t n = 0;
    for (const auto& c : v)
      n += c.count;
    return n;
  }
  static PhaseTerm first(const std::vector<PhaseTerm>& v)
  {
    return v.empty() ? PhaseTerm{} : v.front();
  }
};

using LabelCounts = std::map<std::string, uint64_t, std::less<>>;

struct PhasePlan
{
  AlgorithmId algorithm;
  uint64_t len_A = 0;
  uint64_t len_M = 0;
  std::array<LabelCounts, 4> primitives; // indexed by Phase

  const LabelCounts& at(Phase p) const { return primitives[size_t(p)]; }

  uint64_t calls(Phase p) const
  {
    uint64_t n = 0;
    for (const auto& [label, c] : at(p))
      n += c;
    return n;
  }
  uint64_t init_calls() const { return calls(Phase::Init); }
  uint64_t ad_calls() const { return calls(Phase::Ad); }
  uint64_t msg_calls() const { return calls(Phase::Msg); }
  uint64_t finalize_calls() const { return calls(Phase::Finalize); }
  uint64_t total_calls() const
  {
    return init_calls() + ad_calls() + msg_calls() + finalize_calls();
  }
};

inline uint64_t
der_length_bytes(uint64_t len)
{
  if (len < 128)
    return 1;
  uint64_t n = 0;
  for (uint64_t v = len; v; v >>= 8)
    n++;
  return n + 1;
}

inline uint64_t
term_calls(const PhaseTerm& t, uint64_t len)
{
  const uint64_t eff = len + t.prefix;
  uint64_t blocks;
  if (eff == 0)
    blocks = t.empty == EmptyRule::OnePaddedBlock ? 1 : 0;
  else if (t.final_block == FinalBlockRule::ExtraBlock)
    blocks = eff / t.rate + 1;
  else
    blocks = block_count(eff, t.rate);
  if (blocks == 0)
    return 0;
  const int64_t calls = int64_t(blocks / t.divisor) + t.offset;
  uint64_t out = calls < 0 ? 0 : uint64_t(calls);
  if (t.cap > 0)
    out = std::min(out, t.cap);
  return out;
}

namespace detail {

inline PhaseTerm
term(std::string label,
     uint64_t rate,
     EmptyRule empty,
     FinalBlockRule fin,
     int64_t offset = 0)
{
  PhaseTerm t;
  t.label = std::move(label);
  t.rate = rate;
  t.empty = empty;
  t.final_block = fin;
  t.offset = offset;
  return t;
}

inline ScheduleParams
ascon_like(const AlgorithmId& alg, uint64_t rate, const std::string& pb)
{
  ScheduleParams s{ alg, rate, rate, { { "ascon_p12", 1 } }, { { "ascon_p12", 1 } }, {}, {}, ScheduleKind::Blocks, {}, 0 };
  s.ad_terms = { term(pb, rate, EmptyRule::Skip, FinalBlockRule::ExtraBlock) };
  s.msg_terms = { term(pb, rate, EmptyRule::OnePaddedBlock, FinalBlockRule::ExtraBlock, -1) };
  return s;
}

inline ScheduleParams
isap_like(const AlgorithmId& alg, uint64_t sB, uint64_t sE)
{
  // Each rekeying: p12, 127 bit-absorbing calls, p12.
  const std::string pB = "ascon_p" + std::to_string(sB);
  const std::string pE = "ascon_p" + std::to_string(sE);
  ScheduleParams s{ alg, 8, 8, {}, { { "ascon_p12", 1 } }, {}, {}, ScheduleKind::Blocks, {}, 0 };
  if (sB == 12)
    s.init = { { "ascon_p12", 2 * 129 + 1 } };
  else
    s.init = { { "ascon_p12", 2 * 2 + 1 }, { pB, 2 * 127 } };
  s.ad_terms = { term("ascon_p12", 8, EmptyRule::OnePaddedBlock, FinalBlockRule::ExtraBlock) };
  s.msg_terms = { term(pE, 8, EmptyRule::Skip, FinalBlockRule::NoExtra),
                  term("ascon_p12", 8, EmptyRule::OnePaddedBlock, FinalBlockRule::ExtraBlock) };
  return s;
}

inline ScheduleParams
elephant_like(const AlgorithmId& alg, uint64_t n, const std::string& p)
{
  ScheduleParams s{ alg, n, n, { { p, 1 } }, { { p, 1 } }, {}, {}, ScheduleKind::Blocks, {}, 0 };
  // Nonce || AD is padded 10*; its first block seeds the tag for free.
  PhaseTerm ad = term(p, n, EmptyRule::Skip, FinalBlockRule::ExtraBlock, -1);
  ad.prefix = 12;
  s.ad_terms = { ad };
  s.msg_terms = { term(p, n, EmptyRule::Skip, FinalBlockRule::NoExtra),
                  term(p, n, EmptyRule::OnePaddedBlock, FinalBlockRule::ExtraBlock) };
  return s;
}

}

inline ScheduleParams
schedule_params(const AlgorithmId& alg)
{
  using detail::term;
  using E = EmptyRule;
  using F = FinalBlockRule;
  switch (alg.variant) {
    case Variant::Ascon128:
      return detail::ascon_like(alg, 8, "ascon_p6");
    case Variant::Ascon128a:
      return detail::ascon_like(alg, 16, "ascon_p8");
    case Variant::IsapA128a:
      return detail::isap_like(alg, 1, 6);
    case Variant::IsapA128:
      return detail::isap_like(alg, 12, 12);
    case Variant::Dumbo:
      return detail::elephant_like(alg, 20, "spongent160");
    case Variant::Jumbo:
      return detail::elephant_like(alg, 22, "spongent176");
    case Variant::Delirium:
      return detail::elephant_like(alg, 25, "keccak_f200");
    case Variant::Xoodyak: {
      ScheduleParams s{ alg, 44, 24, { { "xoodoo12", 1 } }, { { "xoodoo12", 1 } }, {}, {}, ScheduleKind::Blocks, {}, 0 };
      s.ad_terms = { term("xoodoo12", 44, E::OnePaddedBlock, F::NoExtra) };
      s.msg_terms = { term("xoodoo12", 24, E::OnePaddedBlock, F::NoExtra) };
      return s;
    }
    case Variant::GiftCofb: {
      ScheduleParams s{ alg, 16, 16, { { "gift128", 1 } }, {}, {}, {}, ScheduleKind::Blocks, {}, 0 };
      s.ad_terms = { term("gift128", 16, E::OnePaddedBlock, F::NoExtra) };
      s.msg_terms = { term("gift128", 16, E::Skip, F::NoExtra) };
      return s;
    }
    case Variant::RomulusN: {
      // The nonce-carrying call after the AD pass is booked under init.
      ScheduleParams s{ alg, 32, 16, { { "skinny128_384p", 1 } }, {}, {}, {}, ScheduleKind::Blocks, {}, 0 };
      PhaseTerm ad = term("skinny128_384p", 16, E::OnePaddedBlock, F::NoExtra);
      ad.divisor = 2;
      s.ad_terms = { ad };
      s.msg_terms = { term("skinny128_384p", 16, E::OnePaddedBlock, F::NoExtra) };
      return s;
    }
    case Variant::PhotonBeetleAead128: {
      ScheduleParams s{ alg, 16, 16, {}, { { "photon256", 1 } }, {}, {}, ScheduleKind::Blocks, {}, 0 };
      s.ad_terms = { term("photon256", 16, E::Skip, F::NoExtra) };
      s.msg_terms = { term("photon256", 16, E::Skip, F::NoExtra) };
      return s;
    }
    case Variant::Schwaemm256_128: {
      ScheduleParams s{ alg, 32, 32, { { "sparkle384_11", 1 } }, {}, {}, {}, ScheduleKind::Blocks, {}, 0 };
      PhaseTerm big = term("sparkle384_11", 32, E::Skip, F::NoExtra);
      big.cap = 1;
      s.ad_terms = { term("sparkle384_7", 32, E::Skip, F::NoExtra, -1), big };
      s.msg_terms = s.ad_terms;
      return s;
    }
    case Variant::TinyJambu128: {
      ScheduleParams s{ alg, 4, 4,
                        { { "tinyjambu_p1024", 1 }, { "tinyjambu_p640", 3 } },
                        { { "tinyjambu_p1024", 1 }, { "tinyjambu_p640", 1 } },
                        {}, {}, ScheduleKind::Blocks, {}, 0 };
      s.ad_terms = { term("tinyjambu_p640", 4, E::Skip, F::NoExtra) };
      s.msg_terms = { term("tinyjambu_p1024", 4, E::Skip, F::NoExtra) };
      return s;
    }
    case Variant::Grain128AeadV2: {
      ScheduleParams s{ alg, 2, 2, { { "grain_ks32", 16 } }, {}, {}, {}, ScheduleKind::Blocks, {}, 0 };
      s.kind = ScheduleKind::Keystream;
      s.word_label = "grain_ks32";
      s.bytes_per_word = 2;
      return s;
    }
  }
  throw UnknownAlgorithm("no schedule for algorithm");
}

inline PhasePlan
plan(const AlgorithmId& alg, uint64_t len_A, uint64_t len_M)
{
  const ScheduleParams s = schedule_params(alg);
  PhasePlan p{ alg, len_A, len_M, {} };
  auto add = [&](Phase ph, const std::string& label, uint64_t n) {
    if (n > 0)
      p.primitives[size_t(ph)][label] += n;
  };
  for (const auto& c : s.init)
    add(Phase::Init, c.label, c.count);
  for (const auto& c : s.finalize)
    add(Phase::Finalize, c.label, c.count);
  if (s.kind == ScheduleKind::Keystream) {
    const uint64_t ad_stream = der_length_bytes(len_A) + len_A;
    const uint64_t ad_words = block_count(ad_stream, s.bytes_per_word);
    const uint64_t all_words = block_count(ad_stream + len_M, s.bytes_per_word);
    add(Phase::Ad, s.word_label, ad_words);
    add(Phase::Msg, s.word_label, all_words - ad_words);
    return p;
  }
  for (const auto& t : s.ad_terms)
    add(Phase::Ad, t.label, term_calls(t, len_A));
  for (const auto& t : s.msg_terms)
    add(Phase::Msg, t.label, term_calls(t, len_M));
  return p;
}

// Cost of one call of a primitive label under the given parameters.
inline Cost
label_cost(const std::string& label, const CostParams& params)
{
  if (label == "tinyjambu_p640")
    return params.b_640;
  if (label == "tinyjambu_p1024")
    return params.b_1024;
  if (label.rfind("spongent", 0) == 0 || label == "keccak_f200")
    return params.P;
  return params.b;
}

inline CostBreakdown
predicted_cost(const PhasePlan& p, const CostParams& params)
{
  auto phase_cost = [&](Phase ph) {
    Cost c{ 0 };
    for (const auto& [label, n] : p.at(ph))
      c += Cost(int64_t(n)) * label_cost(label, params);
    return c;
  };
  CostBreakdown out;
  out.init = eval_init(params) + phase_cost(Phase::Init);
  out.process_ad =
    phase_cost(Phase::Ad) + Cost(int64_t(p.ad_calls())) * params.c_A;
  out.process_msg =
    phase_cost(Phase::Msg) + Cost(int64_t(p.msg_calls())) * params.c_M;
  out.finalize = eval_finalize(params) + phase_cost(Phase::Finalize);
  out.total = out.init + out.process_ad + out.process_msg + out.finalize;
  return out;
}

}
