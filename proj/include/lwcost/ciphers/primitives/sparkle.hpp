#pragma once
#include "../../core/bytes.hpp"
#include "../counters.hpp"
#include <bit>
#include <string>

namespace lwcost::prim {

inline constexpr uint32_t sparkle_rcon[8] = { 0xB7E15162, 0xBF715880,
                                              0x38B4DA56, 0x324E7738,
                                              0xBB1185EB, 0x4F7C7B57,
                                              0xCFBFA1C8, 0xC2B3293D };

inline void
alzette(uint32_t& x, uint32_t& y, uint32_t c)
{
  x += std::rotr(y, 31);
  y ^= std::rotr(x, 24);
  x ^= c;
  x += std::rotr(y, 17);
  y ^= std::rotr(x, 17);
  x ^= c;
  x += y;
  y ^= std::rotr(x, 31);
  x ^= c;
  x += std::rotr(y, 24);
  y ^= std::rotr(x, 16);
  x ^= c;
}

// SPARKLE permutation on `branches` (x, y) word pairs stored interleaved
// x0, y0, x1, y1, ...; branches in {4, 6, 8}.
inline void
sparkle(std::span<uint32_t> state, int branches, int steps, OpCounters* c = nullptr)
{
  if (branches != 4 && branches != 6 && branches != 8)
    throw ParameterError("sparkle branches must be 4, 6 or 8");
  if (state.size() != size_t(2 * branches))
    throw ParameterError("sparkle state must hold 2 words per branch");
  if (c) {
    const std::string label = "sparkle" + std::to_string(branches * 64) + "_" +
                              std::to_string(steps);
    c->tick(label);
  }
  uint32_t* s = state.data();
  const int nb = branches;
  for (int i = 0; i < steps; i++) {
    s[1] ^= sparkle_rcon[i % 8];
    s[3] ^= uint32_t(i);
    for (int j = 0; j < 2 * nb; j += 2)
      alzette(s[j], s[j + 1], sparkle_rcon[j >> 1]);
    uint32_t tx = s[0], ty = s[1];
    const uint32_t x0 = s[0], y0 = s[1];
    for (int j = 2; j < nb; j += 2) {
      tx ^= s[j];
      ty ^= s[j + 1];
    }
    tx = std::rotr(tx ^ (tx << 16), 16);
    ty = std::rotr(ty ^ (ty << 16), 16);
    for (int j = 2; j < nb; j += 2) {
      s[j - 2] = s[j + nb] ^ s[j] ^ ty;
      s[j + nb] = s[j];
      s[j - 1] = s[j + nb + 1] ^ s[j + 1] ^ tx;
      s[j + nb + 1] = s[j + 1];
    }
    s[nb - 2] = s[nb] ^ x0 ^ ty;
    s[nb] = x0;
    s[nb - 1] = s[nb + 1] ^ y0 ^ tx;
    s[nb + 1] = y0;
  }
}

}
