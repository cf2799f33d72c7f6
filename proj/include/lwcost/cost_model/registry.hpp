#pragma once
#include "algorithm.hpp"
#include "cost_params.hpp"
#include "expr.hpp"
#include <cstdint>
#include <string>

namespace lwcost {

// Tabulated closed form for each family. SPARKLE uses the ceiling form with
// the digest term.
inline CostExpr
expr_for(Family f)
{
  using namespace expr;
  const auto b = param("b");
  switch (f) {
    case Family::Ascon:
      return sum({ product({ param("blocks_A", "l_A"), b }),
                   product({ param("blocks_M", "l_P"), b }) });
    case Family::Elephant:
      return sum({ product({ param("blocks_M", "ℓ_M"), param("P") }),
                   product({ param("blocks_A", "ℓ_A"), param("P") }) });
    case Family::GiftCofb:
      return sum({ param("blocks_A", "ℓ_A"), param("blocks_M", "ℓ_M") });
    case Family::Grain128Aead:
      return sum({ param("len_M", "|M|"), param("len_A", "|AD|") });
    case Family::Isap:
      return sum({ param("len_A", "|A|"), param("len_M", "|M|") });
    case Family::PhotonBeetle:
      return sum({ product({ ceil_div(param("len_A", "|A|"), param("r")), b }),
                   product({ ceil_div(param("len_M", "|M|"), param("r")), b }) });
    case Family::RomulusN:
      return sum({ product({ quotient(param("len_A", "|A|"), param("n")), b }),
                   product({ quotient(param("len_M", "|M|"), param("n")), b }) });
    case Family::Sparkle:
      return sum({ product({ constant(2), ceil_div(param("len_A", "|A|"), param("r")), b }),
                   product({ constant(3), ceil_div(param("len_M", "|M|"), param("r")), b }),
                   product({ ceil_div(param("d"), param("r")), b }),
                   product({ constant(2), b }) });
    case Family::TinyJambu:
      return sum({ product({ constant(6), param("b_640") }),
                   product({ constant(2), quotient(param("len_A", "|A|"), constant(32)), param("b_640") }),
                   product({ constant(2), quotient(param("len_M", "|M|"), constant(32)), param("b_1024") }),
                   product({ constant(4), param("b_1024") }) });
    case Family::Xoodyak:
      return sum({ product({ constant(2), b }),
                   product({ constant(2), quotient(param("len_A", "|A|"), param("r_in")), b }),
                   product({ constant(2), quotient(param("len_M", "|P|"), param("r_out")), b }) });
  }
  throw UnknownAlgorithm("no registry row for algorithm");
}

inline CostExpr
expr_for(const AlgorithmId& alg)
{
  return expr_for(alg.family);
}

// Length unit of |A|, |M| inside a row: Grain and TinyJambu count bits.
inline int64_t
length_unit_bits(Family f)
{
  return (f == Family::Grain128Aead || f == Family::TinyJambu) ? 8 : 1;
}

// Block size in bytes behind the l_A/ℓ_A style symbols of a row.
inline uint64_t
symbol_block_bytes(const AlgorithmId& alg)
{
  switch (alg.variant) {
    case Variant::Ascon128:
      return 8;
    case Variant::Ascon128a:
      return 16;
    case Variant::Dumbo:
      return 20;
    case Variant::Jumbo:
      return 22;
    case Variant::Delirium:
      return 25;
    case Variant::GiftCofb:
      return 16;
    default:
      return 1;
  }
}

// Unit primitive costs, zero overheads, and the rates of the measured variant.
inline CostParams
default_params(const AlgorithmId& alg)
{
  CostParams p;
  switch (alg.variant) {
    case Variant::Ascon128:
      p.r = 8;
      break;
    case Variant::Ascon128a:
      p.r = 16;
      break;
    case Variant::Dumbo:
      p.n = 20;
      break;
    case Variant::Jumbo:
      p.n = 22;
      break;
    case Variant::Delirium:
      p.n = 25;
      break;
    case Variant::GiftCofb:
    case Variant::RomulusN:
      p.n = 16;
      break;
    case Variant::IsapA128a:
    case Variant::IsapA128:
      p.r = 8;
      break;
    case Variant::PhotonBeetleAead128:
      p.r = 16;
      break;
    case Variant::Schwaemm256_128:
      p.r = 32;
      break;
    case Variant::TinyJambu128:
      p.r = 4;
      break;
    case Variant::Xoodyak:
      p.r_in = 44;
      p.r_out = 24;
      break;
    case Variant::Grain128AeadV2:
      break;
  }
  return p;
}

inline uint64_t
block_count(uint64_t len, uint64_t rate)
{
  return (len + rate - 1) / rate;
}

// Binds every CostParams field plus len_A, len_M (in the row's length unit)
// and blocks_A, blocks_M (in the row's block size).
inline Bindings
bindings_for(const AlgorithmId& alg,
             uint64_t len_A,
             uint64_t len_M,
             const CostParams& params)
{
  Bindings out = params.as_bindings();
  const int64_t unit = length_unit_bits(alg.family);
  out["len_A"] = Cost(int64_t(len_A) * unit);
  out["len_M"] = Cost(int64_t(len_M) * unit);
  const uint64_t blk = symbol_block_bytes(alg);
  out["blocks_A"] = Cost(int64_t(block_count(len_A, blk)));
  out["blocks_M"] = Cost(int64_t(block_count(len_M, blk)));
  return out;
}

inline std::string
describe_binding(const AlgorithmId& alg, const std::string& name)
{
  const bool bits = length_unit_bits(alg.family) == 8;
  if (name == "len_A")
    return bits ? "associated data length in bits" : "associated data length in bytes";
  if (name == "len_M")
    return bits ? "message length in bits" : "message length in bytes";
  if (name == "blocks_A" || name == "blocks_M")
    return std::string(name == "blocks_A" ? "associated data" : "message") +
           " blocks of " + std::to_string(symbol_block_bytes(alg)) + " bytes";
  if (name == "b")
    return "cost of one permutation call";
  if (name == "P")
    return "cost of one Elephant permutation call";
  if (name == "b_640" || name == "b_1024")
    return "cost of one P_" + name.substr(2) + " call";
  if (name == "r" || name == "r_in" || name == "r_out")
    return "rate in bytes";
  if (name == "n")
    return "block size in bytes";
  if (name == "d")
    return "digest length in bytes";
  return "fixed overhead";
}

}
