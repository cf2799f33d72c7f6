#pragma once
#include "../../core/bytes.hpp"
#include "../counters.hpp"
#include <array>

namespace lwcost::prim {

// 128-bit NFSR, s_0 is bit 0 of word 0. Each step shifts one bit in:
// f = s0 ^ s47 ^ ~(s70 & s85) ^ s91 ^ k_i; 32 steps are done per word.
inline void
tinyjambu_p(std::array<uint32_t, 4>& s,
            const std::array<uint32_t, 4>& key,
            int rounds,
            OpCounters* c = nullptr)
{
  if (rounds != 640 && rounds != 1024)
    throw ParameterError("tinyjambu_p rounds must be 640 or 1024");
  tick(c, rounds == 640 ? "tinyjambu_p640" : "tinyjambu_p1024");
  for (int i = 0; i < rounds / 32; i++) {
    const uint32_t t1 = (s[1] >> 15) | (s[2] << 17);
    const uint32_t t2 = (s[2] >> 6) | (s[3] << 26);
    const uint32_t t3 = (s[2] >> 21) | (s[3] << 11);
    const uint32_t t4 = (s[2] >> 27) | (s[3] << 5);
    const uint32_t f = s[0] ^ t1 ^ ~(t2 & t3) ^ t4 ^ key[i & 3];
    s[0] = s[1];
    s[1] = s[2];
    s[2] = s[3];
    s[3] = f;
  }
}

}
