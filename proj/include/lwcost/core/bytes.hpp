#pragma once
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lwcost {

using Bytes = std::vector<uint8_t>;
using ByteView = std::span<const uint8_t>;

// Raised for malformed inputs: wrong key/nonce/tag length, bad hex, bad
// primitive width. Authentication failure is not an exception.
struct ParameterError : std::invalid_argument
{
  using std::invalid_argument::invalid_argument;
};

inline std::string
to_hex(ByteView data)
{
  static constexpr char digits[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(data.size() * 2);
  for (uint8_t b : data) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 15]);
  }
  return out;
}

inline Bytes
from_hex(std::string_view hex)
{
  auto nibble = [&](char c) -> uint8_t {
    if (c >= '0' && c <= '9')
      return uint8_t(c - '0');
    if (c >= 'A' && c <= 'F')
      return uint8_t(c - 'A' + 10);
    if (c >= 'a' && c <= 'f')
      return uint8_t(c - 'a' + 10);
    throw ParameterError("invalid hex digit '" + std::string(1, c) + "'");
  };
  if (hex.size() % 2 != 0)
    throw ParameterError("hex string has odd length");
  Bytes out(hex.size() / 2);
  for (size_t i = 0; i < out.size(); i++)
    out[i] = uint8_t(nibble(hex[2 * i]) << 4 | nibble(hex[2 * i + 1]));
  return out;
}

inline uint32_t
load_le32(const uint8_t* p)
{
  return uint32_t(p[0]) | uint32_t(p[1]) << 8 | uint32_t(p[2]) << 16 |
         uint32_t(p[3]) << 24;
}

inline void
store_le32(uint8_t* p, uint32_t v)
{
  p[0] = uint8_t(v);
  p[1] = uint8_t(v >> 8);
  p[2] = uint8_t(v >> 16);
  p[3] = uint8_t(v >> 24);
}

inline uint64_t
load_be64(const uint8_t* p)
{
  uint64_t v = 0;
  for (int i = 0; i < 8; i++)
    v = v << 8 | p[i];
  return v;
}

inline void
store_be64(uint8_t* p, uint64_t v)
{
  for (int i = 7; i >= 0; i--) {
    p[i] = uint8_t(v);
    v >>= 8;
  }
}

inline uint64_t
load_le64(const uint8_t* p)
{
  uint64_t v = 0;
  for (int i = 7; i >= 0; i--)
    v = v << 8 | p[i];
  return v;
}

inline void
store_le64(uint8_t* p, uint64_t v)
{
  for (int i = 0; i < 8; i++) {
    p[i] = uint8_t(v);
    v >>= 8;
  }
}

// Compares full length without early exit on the first differing byte.
inline bool
ct_equal(ByteView a, ByteView b)
{
  if (a.size() != b.size())
    return false;
  uint8_t acc = 0;
  for (size_t i = 0; i < a.size(); i++)
    acc |= uint8_t(a[i] ^ b[i]);
  return acc == 0;
}

inline void
require_size(ByteView data, size_t want, const char* what)
{
  if (data.size() != want)
    throw ParameterError(std::string(what) + " must be " +
                         std::to_string(want) + " bytes, got " +
                         std::to_string(data.size()));
}

}
