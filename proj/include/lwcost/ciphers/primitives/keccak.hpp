#pragma once
#include "../../core/bytes.hpp"
#include "../counters.hpp"
#include <array>
#include <bit>

namespace lwcost::prim {

// Keccak-p over lanes of type Lane (uint8_t for Keccak-f[200], uint64_t for
// Keccak-f[1600]); runs the last `rounds` rounds of the full schedule.
template<typename Lane>
void
keccak_p(std::array<Lane, 25>& st, int rounds)
{
  static constexpr uint64_t rc[24] = {
    0x0000000000000001, 0x0000000000008082, 0x800000000000808a,
    0x8000000080008000, 0x000000000000808b, 0x0000000080000001,
    0x8000000080008081, 0x8000000000008009, 0x000000000000008a,
    0x0000000000000088, 0x0000000080008009, 0x000000008000000a,
    0x000000008000808b, 0x800000000000008b, 0x8000000000008089,
    0x8000000000008003, 0x8000000000008002, 0x8000000000000080,
    0x000000000000800a, 0x800000008000000a, 0x8000000080008081,
    0x8000000000008080, 0x0000000080000001, 0x8000000080008008,
  };
  static constexpr int rotc[24] = { 1,  3,  6,  10, 15, 21, 28, 36,
                                    45, 55, 2,  14, 27, 41, 56, 8,
                                    25, 43, 62, 18, 39, 61, 20, 44 };
  static constexpr int piln[24] = { 10, 7,  11, 17, 18, 3, 5,  16,
                                    8,  21, 24, 4,  15, 23, 19, 13,
                                    12, 2,  20, 14, 22, 9,  6,  1 };
  constexpr int w = int(sizeof(Lane) * 8);
  constexpr int full = 12 + 2 * std::countr_zero(unsigned(w));
  auto rotl = [](Lane v, int n) -> Lane {
    n %= w;
    return n == 0 ? v : Lane(Lane(v << n) | Lane(v >> (w - n)));
  };
  for (int r = full - rounds; r < full; r++) {
    Lane bc[5];
    for (int i = 0; i < 5; i++)
      bc[i] = st[i] ^ st[i + 5] ^ st[i + 10] ^ st[i + 15] ^ st[i + 20];
    for (int i = 0; i < 5; i++) {
      const Lane t = bc[(i + 4) % 5] ^ rotl(bc[(i + 1) % 5], 1);
      for (int j = 0; j < 25; j += 5)
        st[j + i] ^= t;
    }
    Lane t = st[1];
    for (int i = 0; i < 24; i++) {
      const int j = piln[i];
      const Lane tmp = st[j];
      st[j] = rotl(t, rotc[i]);
      t = tmp;
    }
    for (int j = 0; j < 25; j += 5) {
      for (int i = 0; i < 5; i++)
        bc[i] = st[j + i];
      for (int i = 0; i < 5; i++)
        st[j + i] ^= Lane(~bc[(i + 1) % 5] & bc[(i + 2) % 5]);
    }
    st[0] ^= Lane(rc[r]);
  }
}

// Keccak-f[200]: 25 one-byte lanes, 18 rounds.
inline void
keccak_f200(std::span<uint8_t> state, OpCounters* c = nullptr)
{
  require_size(state, 25, "keccak-f[200] state");
  tick(c, "keccak_f200");
  std::array<uint8_t, 25> st{};
  std::copy(state.begin(), state.end(), st.begin());
  keccak_p(st, 18);
  std::copy(st.begin(), st.end(), state.begin());
}

}
