#pragma once
#include "aead.hpp"
#include "primitives/tinyjambu_p.hpp"

namespace lwcost {

// TinyJAMBU-128 v2: 128-bit key, 96-bit nonce, 64-bit tag. Words are
// little-endian; partial blocks xor bytes into the state directly.
class TinyJambuAead : public Aead
{
public:
  TinyJambuAead()
    : Aead({ { Family::TinyJambu, Variant::TinyJambu128 }, 16, 12, 8 })
  {
  }

protected:
  void crypt(ByteView key, ByteView nonce, ByteView ad, ByteView in, uint8_t* out,
             uint8_t* tag, bool decrypt, OpCounters& c) const override
  {
    std::array<uint32_t, 4> k, s{};
    for (int i = 0; i < 4; i++)
      k[i] = load_le32(key.data() + 4 * i);
    auto byte_xor = [&](int pos, uint8_t v) { s[pos / 4] ^= uint32_t(v) << (8 * (pos % 4)); };
    auto byte_at = [&](int pos) { return uint8_t(s[pos / 4] >> (8 * (pos % 4))); };

    c.enter(Phase::Init);
    prim::tinyjambu_p(s, k, 1024, &c);
    for (int i = 0; i < 3; i++) {
      s[1] ^= 0x10;
      prim::tinyjambu_p(s, k, 640, &c);
      s[3] ^= load_le32(nonce.data() + 4 * i);
    }

    c.enter(Phase::Ad);
    for (size_t i = 0; i < ad.size(); i += 4) {
      const size_t n = std::min<size_t>(4, ad.size() - i);
      s[1] ^= 0x30;
      prim::tinyjambu_p(s, k, 640, &c);
      for (size_t j = 0; j < n; j++)
        byte_xor(12 + int(j), ad[i + j]);
      if (n < 4)
        s[1] ^= uint32_t(n);
    }

    c.enter(Phase::Msg);
    for (size_t i = 0; i < in.size(); i += 4) {
      const size_t n = std::min<size_t>(4, in.size() - i);
      s[1] ^= 0x50;
      prim::tinyjambu_p(s, k, 1024, &c);
      for (size_t j = 0; j < n; j++) {
        out[i + j] = uint8_t(byte_at(8 + int(j)) ^ in[i + j]);
        byte_xor(12 + int(j), decrypt ? out[i + j] : in[i + j]);
      }
      if (n < 4)
        s[1] ^= uint32_t(n);
    }

    c.enter(Phase::Finalize);
    s[1] ^= 0x70;
    prim::tinyjambu_p(s, k, 1024, &c);
    store_le32(tag, s[2]);
    s[1] ^= 0x70;
    prim::tinyjambu_p(s, k, 640, &c);
    store_le32(tag + 4, s[2]);
  }
};

}
