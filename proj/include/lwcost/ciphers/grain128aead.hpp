#pragma once
#include "aead.hpp"
#include "primitives/grain.hpp"

namespace lwcost {

namespace detail {

// Length prefix of the authenticated stream: short form below 128, else
// 0x80 | byte count followed by the big-endian length.
inline Bytes
der_length(uint64_t len)
{
  if (len < 128)
    return { uint8_t(len) };
  Bytes be;
  for (uint64_t v = len; v; v >>= 8)
    be.insert(be.begin(), uint8_t(v));
  be.insert(be.begin(), uint8_t(0x80 | be.size()));
  return be;
}

}

// Grain-128AEADv2: 128-bit key, 96-bit nonce, 64-bit tag. Each data byte
// consumes 16 pre-output bits; even bits are keystream, odd bits feed the
// authenticator.
class Grain128AeadAead : public Aead
{
public:
  Grain128AeadAead()
    : Aead({ { Family::Grain128Aead, Variant::Grain128AeadV2 }, 16, 12, 8 })
  {
  }

protected:
  struct Auth
  {
    uint64_t acc = 0;
    uint64_t reg = 0;

    void bit(bool m, bool a)
    {
      if (m)
        acc ^= reg;
      reg = reg >> 1 | uint64_t(a) << 63;
    }
  };

  void crypt(ByteView key, ByteView nonce, ByteView ad, ByteView in, uint8_t* out,
             uint8_t* tag, bool decrypt, OpCounters& c) const override
  {
    prim::GrainState st;
    uint32_t k[4];
    for (int i = 0; i < 4; i++) {
      k[i] = load_le32(key.data() + 4 * i);
      st.nfsr[i] = k[i];
    }
    for (int i = 0; i < 3; i++)
      st.lfsr[i] = load_le32(nonce.data() + 4 * i);
    st.lfsr[3] = 0x7fffffff;

    c.enter(Phase::Init);
    for (int i = 0; i < 10; i++)
      prim::grain_update(st, prim::GrainFeed::Output, 0, 0, &c);
    prim::grain_update(st, prim::GrainFeed::OutputKey, k[2], k[0], &c);
    prim::grain_update(st, prim::GrainFeed::OutputKey, k[3], k[1], &c);
    Auth au;
    au.acc = prim::grain_update(st, prim::GrainFeed::None, 0, 0, &c);
    au.acc |= uint64_t(prim::grain_update(st, prim::GrainFeed::None, 0, 0, &c)) << 32;
    au.reg = prim::grain_update(st, prim::GrainFeed::None, 0, 0, &c);
    au.reg |= uint64_t(prim::grain_update(st, prim::GrainFeed::None, 0, 0, &c)) << 32;

    uint32_t word = 0;
    int left = 0; // bytes still available in `word`
    auto next16 = [&]() {
      if (left == 0) {
        word = prim::grain_update(st, prim::GrainFeed::None, 0, 0, &c);
        left = 2;
      }
      const uint16_t z = uint16_t(word);
      word >>= 16;
      left--;
      return z;
    };
    // Returns the keystream byte and authenticates `m` with the odd bits.
    auto process = [&](uint8_t m_in, bool plain_known, uint8_t& m_out) {
      const uint16_t z = next16();
      uint8_t ks = 0;
      for (int j = 0; j < 8; j++)
        ks |= uint8_t(((z >> (2 * j)) & 1) << j);
      m_out = plain_known ? m_in : uint8_t(m_in ^ ks);
      for (int j = 0; j < 8; j++)
        au.bit((m_out >> j) & 1, (z >> (2 * j + 1)) & 1);
      return ks;
    };

    c.enter(Phase::Ad);
    uint8_t m;
    for (uint8_t b : detail::der_length(ad.size()))
      process(b, true, m);
    for (uint8_t b : ad)
      process(b, true, m);

    c.enter(Phase::Msg);
    for (size_t i = 0; i < in.size(); i++) {
      const uint8_t ks = process(in[i], !decrypt, m);
      out[i] = uint8_t(in[i] ^ ks);
    }

    c.enter(Phase::Finalize);
    au.acc ^= au.reg;
    store_le64(tag, au.acc);
  }
};

}
