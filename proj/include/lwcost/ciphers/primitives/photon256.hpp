#pragma once
#include "../../core/bytes.hpp"
#include "../counters.hpp"
#include <array>

namespace lwcost::prim {

namespace detail {

inline uint8_t
gf16_mul(uint8_t a, uint8_t b)
{
  uint8_t r = 0;
  for (int i = 0; i < 4; i++) {
    if (b & 1)
      r ^= a;
    b >>= 1;
    a = uint8_t(a << 1);
    if (a & 0x10)
      a ^= 0x13; // x^4 + x + 1
  }
  return r & 15;
}

// Mixing matrix A^8, where A is the serial matrix whose last row is
// (2, 4, 2, 11, 2, 8, 5, 6).
inline const std::array<std::array<uint8_t, 8>, 8>&
photon_mix_matrix()
{
  static const auto m = [] {
    std::array<std::array<uint8_t, 8>, 8> a{}, acc{};
    static constexpr uint8_t last[8] = { 2, 4, 2, 11, 2, 8, 5, 6 };
    for (int i = 0; i < 7; i++)
      a[i][i + 1] = 1;
    for (int j = 0; j < 8; j++)
      a[7][j] = last[j];
    for (int i = 0; i < 8; i++)
      acc[i][i] = 1;
    for (int k = 0; k < 8; k++) {
      std::array<std::array<uint8_t, 8>, 8> next{};
      for (int i = 0; i < 8; i++)
        for (int j = 0; j < 8; j++)
          for (int t = 0; t < 8; t++)
            next[i][j] ^= gf16_mul(a[i][t], acc[t][j]);
      acc = next;
    }
    return acc;
  }();
  return m;
}

}

// PHOTON_256: 8x8 grid of 4-bit cells, cell (row i, column j) is nibble
// 8i + j, low nibble of each byte first.
inline void
photon256(std::span<uint8_t> state, OpCounters* c = nullptr)
{
  static constexpr uint8_t rc[12] = { 1, 3, 7, 14, 13, 11, 6, 12, 9, 2, 5, 10 };
  static constexpr uint8_t ic[8] = { 0, 1, 3, 7, 15, 14, 12, 8 };
  static constexpr uint8_t sbox[16] = { 0xC, 0x5, 0x6, 0xB, 0x9, 0x0, 0xA, 0xD,
                                        0x3, 0xE, 0xF, 0x8, 0x4, 0x7, 0x1, 0x2 };
  require_size(state, 32, "photon256 state");
  tick(c, "photon256");
  const auto& mix = detail::photon_mix_matrix();
  uint8_t s[8][8];
  for (int i = 0; i < 64; i++)
    s[i / 8][i % 8] = (state[i / 2] >> (4 * (i & 1))) & 15;
  for (int r = 0; r < 12; r++) {
    for (int i = 0; i < 8; i++)
      s[i][0] ^= rc[r] ^ ic[i];
    for (int i = 0; i < 8; i++)
      for (int j = 0; j < 8; j++)
        s[i][j] = sbox[s[i][j]];
    for (int i = 1; i < 8; i++) {
      uint8_t row[8];
      for (int j = 0; j < 8; j++)
        row[j] = s[i][(j + i) % 8];
      for (int j = 0; j < 8; j++)
        s[i][j] = row[j];
    }
    for (int j = 0; j < 8; j++) {
      uint8_t col[8];
      for (int i = 0; i < 8; i++) {
        uint8_t v = 0;
        for (int k = 0; k < 8; k++)
          v ^= detail::gf16_mul(mix[i][k], s[k][j]);
        col[i] = v;
      }
      for (int i = 0; i < 8; i++)
        s[i][j] = col[i];
    }
  }
  for (int i = 0; i < 32; i++)
    state[i] = uint8_t(s[(2 * i) / 8][(2 * i) % 8] | s[(2 * i + 1) / 8][(2 * i + 1) % 8] << 4);
}

}
