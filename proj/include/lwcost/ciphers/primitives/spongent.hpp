#pragma once
#include "../../core/bytes.hpp"
#include "../counters.hpp"
#include <array>
#include <cstring>

namespace lwcost::prim {

namespace detail {

inline uint8_t
spongent_sbox8(uint8_t v)
{
  static constexpr uint8_t s[16] = { 0xE, 0xD, 0xB, 0x0, 0x2, 0x1, 0x4, 0xF,
                                     0x7, 0xA, 0x8, 0x5, 0x9, 0xC, 0x3, 0x6 };
  return uint8_t(s[v >> 4] << 4 | s[v & 15]);
}

inline uint8_t
reverse8(uint8_t v)
{
  uint8_t out = 0;
  for (int i = 0; i < 8; i++)
    out |= uint8_t(((v >> i) & 1) << (7 - i));
  return out;
}

}

// Spongent-pi[width] for width 160 (80 rounds) or 176 (90 rounds).
inline void
spongent(std::span<uint8_t> state, int width, OpCounters* c = nullptr)
{
  int rounds;
  uint8_t lfsr;
  if (width == 160) {
    rounds = 80;
    lfsr = 0x75;
    require_size(state, 20, "spongent state");
    tick(c, "spongent160");
  } else if (width == 176) {
    rounds = 90;
    lfsr = 0x45;
    require_size(state, 22, "spongent state");
    tick(c, "spongent176");
  } else {
    throw ParameterError("spongent width must be 160 or 176");
  }
  const int nbytes = width / 8;
  uint8_t tmp[22];
  for (int r = 0; r < rounds; r++) {
    state[0] ^= lfsr;
    state[nbytes - 1] ^= detail::reverse8(lfsr);
    lfsr = uint8_t(((lfsr << 1) | (((lfsr >> 6) ^ (lfsr >> 5)) & 1)) & 0x7f);
    for (int i = 0; i < nbytes; i++)
      state[i] = detail::spongent_sbox8(state[i]);
    std::memset(tmp, 0, sizeof tmp);
    for (int i = 0; i < width; i++) {
      const int dst = i == width - 1 ? i : int((int64_t(i) * width / 4) % (width - 1));
      tmp[dst / 8] |= uint8_t(((state[i / 8] >> (i % 8)) & 1) << (dst % 8));
    }
    std::memcpy(state.data(), tmp, size_t(nbytes));
  }
}

}
