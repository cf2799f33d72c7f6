#pragma once
#include "../../core/bytes.hpp"
#include "../counters.hpp"
#include <array>

namespace lwcost::prim {

// Grain-128AEADv2 registers. Bit i of a register is bit i % 32 of word
// i / 32; keys and nonces load little-endian.
struct GrainState
{
  std::array<uint32_t, 4> lfsr{};
  std::array<uint32_t, 4> nfsr{};
};

enum class GrainFeed
{
  None,     // keystream generation
  Output,   // initialization: pre-output fed back into both registers
  OutputKey // initialization with key words added
};

namespace detail {

inline uint32_t
grain_tap(const std::array<uint32_t, 4>& w, int k)
{
  const int q = k >> 5, r = k & 31;
  return r == 0 ? w[q] : (w[q] >> r) | (w[q + 1] << (32 - r));
}

}

// Clocks the cipher 32 times and returns the 32 pre-output bits y_t..y_t+31
// (bit j = y_t+j). With GrainFeed::OutputKey, klfsr/knfsr are the key words
// added to the LFSR and NFSR feedback.
inline uint32_t
grain_update(GrainState& st,
             GrainFeed feed = GrainFeed::None,
             uint32_t klfsr = 0,
             uint32_t knfsr = 0,
             OpCounters* c = nullptr)
{
  using detail::grain_tap;
  tick(c, "grain_ks32");
  const auto& s = st.lfsr;
  const auto& b = st.nfsr;
  const uint32_t s0 = grain_tap(s, 0), s7 = grain_tap(s, 7), s8 = grain_tap(s, 8),
                 s13 = grain_tap(s, 13), s20 = grain_tap(s, 20), s38 = grain_tap(s, 38),
                 s42 = grain_tap(s, 42), s60 = grain_tap(s, 60), s70 = grain_tap(s, 70),
                 s79 = grain_tap(s, 79), s81 = grain_tap(s, 81), s93 = grain_tap(s, 93),
                 s94 = grain_tap(s, 94), s96 = grain_tap(s, 96);
  const uint32_t b0 = grain_tap(b, 0), b2 = grain_tap(b, 2), b3 = grain_tap(b, 3),
                 b11 = grain_tap(b, 11), b12 = grain_tap(b, 12), b13 = grain_tap(b, 13),
                 b15 = grain_tap(b, 15), b17 = grain_tap(b, 17), b18 = grain_tap(b, 18),
                 b22 = grain_tap(b, 22), b24 = grain_tap(b, 24), b25 = grain_tap(b, 25),
                 b26 = grain_tap(b, 26), b27 = grain_tap(b, 27), b36 = grain_tap(b, 36),
                 b40 = grain_tap(b, 40), b45 = grain_tap(b, 45), b48 = grain_tap(b, 48),
                 b56 = grain_tap(b, 56), b59 = grain_tap(b, 59), b61 = grain_tap(b, 61),
                 b64 = grain_tap(b, 64), b65 = grain_tap(b, 65), b67 = grain_tap(b, 67),
                 b68 = grain_tap(b, 68), b70 = grain_tap(b, 70), b73 = grain_tap(b, 73),
                 b78 = grain_tap(b, 78), b82 = grain_tap(b, 82), b84 = grain_tap(b, 84),
                 b88 = grain_tap(b, 88), b89 = grain_tap(b, 89), b91 = grain_tap(b, 91),
                 b92 = grain_tap(b, 92), b93 = grain_tap(b, 93), b95 = grain_tap(b, 95),
                 b96 = grain_tap(b, 96);

  const uint32_t h = (b12 & s8) ^ (s13 & s20) ^ (b95 & s42) ^ (s60 & s79) ^
                     (b12 & b95 & s94);
  const uint32_t y = h ^ s93 ^ b2 ^ b15 ^ b36 ^ b45 ^ b64 ^ b73 ^ b89;
  const uint32_t l = s0 ^ s7 ^ s38 ^ s70 ^ s81 ^ s96;
  const uint32_t f = b0 ^ b26 ^ b56 ^ b91 ^ b96 ^ (b3 & b67) ^ (b11 & b13) ^
                     (b17 & b18) ^ (b27 & b59) ^ (b40 & b48) ^ (b61 & b65) ^
                     (b68 & b84) ^ (b22 & b24 & b25) ^ (b70 & b78 & b82) ^
                     (b88 & b92 & b93 & b95);
  uint32_t nl = l, nn = s0 ^ f;
  if (feed != GrainFeed::None) {
    nl ^= y;
    nn ^= y;
  }
  if (feed == GrainFeed::OutputKey) {
    nl ^= klfsr;
    nn ^= knfsr;
  }
  st.lfsr = { st.lfsr[1], st.lfsr[2], st.lfsr[3], nl };
  st.nfsr = { st.nfsr[1], st.nfsr[2], st.nfsr[3], nn };
  return y;
}

}
