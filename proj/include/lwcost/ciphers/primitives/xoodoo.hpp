#pragma once
#include "../../core/bytes.hpp"
#include "../counters.hpp"
#include <array>
#include <bit>

namespace lwcost::prim {

// 3 planes of 4 lanes; lane (plane y, column x) is word 4y + x.
using XoodooState = std::array<uint32_t, 12>;

inline void
xoodoo(XoodooState& a, int rounds, OpCounters* c = nullptr)
{
  static constexpr uint32_t rc[12] = { 0x058, 0x038, 0x3C0, 0x0D0,
                                       0x120, 0x014, 0x060, 0x02C,
                                       0x380, 0x0F0, 0x1A0, 0x012 };
  if (rounds < 1 || rounds > 12)
    throw ParameterError("xoodoo rounds must be in 1..12");
  tick(c, rounds == 12 ? "xoodoo12" : "xoodoo");
  for (int r = 12 - rounds; r < 12; r++) {
    uint32_t p[4], e[4];
    for (int x = 0; x < 4; x++)
      p[x] = a[x] ^ a[4 + x] ^ a[8 + x];
    for (int x = 0; x < 4; x++) {
      const uint32_t v = p[(x + 3) % 4];
      e[x] = std::rotl(v, 5) ^ std::rotl(v, 14);
    }
    for (int i = 0; i < 12; i++)
      a[i] ^= e[i % 4];
    // rho-west
    uint32_t t[4];
    for (int x = 0; x < 4; x++)
      t[x] = a[4 + (x + 3) % 4];
    for (int x = 0; x < 4; x++) {
      a[4 + x] = t[x];
      a[8 + x] = std::rotl(a[8 + x], 11);
    }
    a[0] ^= rc[r];
    // chi
    for (int x = 0; x < 4; x++) {
      const uint32_t a0 = a[x], a1 = a[4 + x], a2 = a[8 + x];
      a[x] = a0 ^ (~a1 & a2);
      a[4 + x] = a1 ^ (~a2 & a0);
      a[8 + x] = a2 ^ (~a0 & a1);
    }
    // rho-east
    for (int x = 0; x < 4; x++)
      t[x] = a[8 + (x + 2) % 4];
    for (int x = 0; x < 4; x++) {
      a[4 + x] = std::rotl(a[4 + x], 1);
      a[8 + x] = std::rotl(t[x], 8);
    }
  }
}

// Byte view: 48 bytes, lanes little-endian.
inline void
xoodoo(std::span<uint8_t> state, int rounds, OpCounters* c = nullptr)
{
  require_size(state, 48, "xoodoo state");
  XoodooState a;
  for (int i = 0; i < 12; i++)
    a[i] = load_le32(state.data() + 4 * i);
  xoodoo(a, rounds, c);
  for (int i = 0; i < 12; i++)
    store_le32(state.data() + 4 * i, a[i]);
}

}
