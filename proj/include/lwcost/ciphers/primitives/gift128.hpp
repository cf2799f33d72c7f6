#pragma once
#include "../../core/bytes.hpp"
#include "../counters.hpp"
#include <array>

namespace lwcost::prim {

namespace detail {

inline uint32_t
gift_rowperm(uint32_t s, int b0, int b1, int b2, int b3)
{
  uint32_t t = 0;
  for (int b = 0; b < 8; b++) {
    t |= ((s >> (4 * b + 0)) & 1) << (b + 8 * b0);
    t |= ((s >> (4 * b + 1)) & 1) << (b + 8 * b1);
    t |= ((s >> (4 * b + 2)) & 1) << (b + 8 * b2);
    t |= ((s >> (4 * b + 3)) & 1) << (b + 8 * b3);
  }
  return t;
}

}

// GIFT-128 in the bitsliced byte order used by GIFT-COFB: block bytes load
// big-endian into four 32-bit slices, key bytes into eight 16-bit words.
inline std::array<uint8_t, 16>
gift128(std::span<const uint8_t> block, std::span<const uint8_t> key, OpCounters* c = nullptr)
{
  static constexpr uint8_t rc[40] = {
    0x01, 0x03, 0x07, 0x0F, 0x1F, 0x3E, 0x3D, 0x3B, 0x37, 0x2F,
    0x1E, 0x3C, 0x39, 0x33, 0x27, 0x0E, 0x1D, 0x3A, 0x35, 0x2B,
    0x16, 0x2C, 0x18, 0x30, 0x21, 0x02, 0x05, 0x0B, 0x17, 0x2E,
    0x1C, 0x38, 0x31, 0x23, 0x06, 0x0D, 0x1B, 0x36, 0x2D, 0x1A,
  };
  require_size(block, 16, "gift128 block");
  require_size(key, 16, "gift128 key");
  tick(c, "gift128");
  uint32_t s[4];
  uint16_t w[8];
  for (int i = 0; i < 4; i++)
    s[i] = uint32_t(block[4 * i]) << 24 | uint32_t(block[4 * i + 1]) << 16 |
           uint32_t(block[4 * i + 2]) << 8 | block[4 * i + 3];
  for (int i = 0; i < 8; i++)
    w[i] = uint16_t(key[2 * i] << 8 | key[2 * i + 1]);
  for (int r = 0; r < 40; r++) {
    s[1] ^= s[0] & s[2];
    s[0] ^= s[1] & s[3];
    s[2] ^= s[0] | s[1];
    s[3] ^= s[2];
    s[1] ^= s[3];
    s[3] ^= 0xffffffff;
    s[2] ^= s[0] & s[1];
    std::swap(s[0], s[3]);

    s[0] = detail::gift_rowperm(s[0], 0, 3, 2, 1);
    s[1] = detail::gift_rowperm(s[1], 1, 0, 3, 2);
    s[2] = detail::gift_rowperm(s[2], 2, 1, 0, 3);
    s[3] = detail::gift_rowperm(s[3], 3, 2, 1, 0);

    s[2] ^= uint32_t(w[2]) << 16 | w[3];
    s[1] ^= uint32_t(w[6]) << 16 | w[7];
    s[3] ^= 0x80000000u ^ rc[r];

    const uint16_t t6 = uint16_t(w[6] >> 2 | w[6] << 14);
    const uint16_t t7 = uint16_t(w[7] >> 12 | w[7] << 4);
    w[7] = w[5];
    w[6] = w[4];
    w[5] = w[3];
    w[4] = w[2];
    w[3] = w[1];
    w[2] = w[0];
    w[1] = t7;
    w[0] = t6;
  }
  std::array<uint8_t, 16> out;
  for (int i = 0; i < 4; i++) {
    out[4 * i] = uint8_t(s[i] >> 24);
    out[4 * i + 1] = uint8_t(s[i] >> 16);
    out[4 * i + 2] = uint8_t(s[i] >> 8);
    out[4 * i + 3] = uint8_t(s[i]);
  }
  return out;
}

// Maps a block between the nibble representation of the original GIFT-128
// description (bit 4i+j of the big-endian 128-bit value) and the slice
// representation above (bit i of big-endian word j).
inline std::array<uint8_t, 16>
gift128_nibbles_to_slices(std::span<const uint8_t> in)
{
  require_size(in, 16, "gift128 block");
  std::array<uint8_t, 16> out{};
  for (int b = 0; b < 128; b++) {
    const int v = (in[15 - b / 8] >> (b % 8)) & 1;
    const int i = b / 4, j = b % 4;
    out[4 * j + 3 - i / 8] |= uint8_t(v << (i % 8));
  }
  return out;
}

inline std::array<uint8_t, 16>
gift128_slices_to_nibbles(std::span<const uint8_t> in)
{
  require_size(in, 16, "gift128 block");
  std::array<uint8_t, 16> out{};
  for (int b = 0; b < 128; b++) {
    const int i = b / 4, j = b % 4;
    const int v = (in[4 * j + 3 - i / 8] >> (i % 8)) & 1;
    out[15 - b / 8] |= uint8_t(v << (b % 8));
  }
  return out;
}

}
