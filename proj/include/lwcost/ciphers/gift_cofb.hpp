#pragma once
#include "aead.hpp"
#include "primitives/gift128.hpp"

namespace lwcost {

namespace detail {

using Block16 = std::array<uint8_t, 16>;

inline void
cofb_double(uint8_t* s)
{
  uint8_t t[8];
  for (int i = 0; i < 7; i++)
    t[i] = uint8_t(s[i] << 1 | s[i + 1] >> 7);
  t[7] = uint8_t((s[7] << 1) ^ ((s[0] >> 7) * 27));
  std::copy(t, t + 8, s);
}

inline void
cofb_triple(uint8_t* s)
{
  uint8_t t[8];
  std::copy(s, s + 8, t);
  cofb_double(t);
  for (int i = 0; i < 8; i++)
    s[i] ^= t[i];
}

// G(Y) = (Y[1], Y[0] <<< 1) on 64-bit halves.
inline void
cofb_g(Block16& y)
{
  Block16 t;
  for (int i = 0; i < 8; i++)
    t[i] = y[8 + i];
  for (int i = 0; i < 7; i++)
    t[8 + i] = uint8_t(y[i] << 1 | y[i + 1] >> 7);
  t[15] = uint8_t(y[7] << 1 | y[0] >> 7);
  y = t;
}

inline Block16
cofb_pad(const uint8_t* d, size_t n)
{
  Block16 out{};
  std::copy(d, d + std::min<size_t>(n, 16), out.begin());
  if (n < 16)
    out[n] = 0x80;
  return out;
}

}

// GIFT-COFB v1.1 with GIFT-128.
class GiftCofbAead : public Aead
{
public:
  GiftCofbAead()
    : Aead({ { Family::GiftCofb, Variant::GiftCofb }, 16, 16, 16 })
  {
  }

protected:
  void crypt(ByteView key, ByteView nonce, ByteView ad, ByteView in, uint8_t* out,
             uint8_t* tag, bool decrypt, OpCounters& c) const override
  {
    using namespace detail;
    Block16 x;
    // Y <- G(Y) then X = Y ^ pad(block) with the offset on the top half.
    auto absorb = [&](Block16& y, const uint8_t* d, size_t n, const uint8_t* off) {
      cofb_g(y);
      const Block16 p = cofb_pad(d, n);
      for (int i = 0; i < 16; i++)
        x[i] = uint8_t(y[i] ^ p[i]);
      for (int i = 0; i < 8; i++)
        x[i] ^= off[i];
      y = prim::gift128(x, key, &c);
    };

    c.enter(Phase::Init);
    Block16 y = prim::gift128(nonce, key, &c);
    uint8_t off[8];
    std::copy(y.begin(), y.begin() + 8, off);

    c.enter(Phase::Ad);
    const bool empty_a = ad.empty(), empty_m = in.empty();
    size_t alen = ad.size(), i = 0;
    for (; alen > 16; alen -= 16, i += 16) {
      cofb_double(off);
      absorb(y, ad.data() + i, 16, off);
    }
    cofb_triple(off);
    if (alen % 16 != 0 || empty_a)
      cofb_triple(off);
    if (empty_m) {
      cofb_triple(off);
      cofb_triple(off);
    }
    absorb(y, ad.data() + i, alen, off);

    c.enter(Phase::Msg);
    size_t mlen = in.size();
    i = 0;
    uint8_t m[16];
    auto block = [&](size_t n) {
      for (size_t j = 0; j < n; j++) {
        out[i + j] = uint8_t(y[j] ^ in[i + j]);
        m[j] = decrypt ? out[i + j] : in[i + j];
      }
      absorb(y, m, n, off);
    };
    for (; mlen > 16; mlen -= 16, i += 16) {
      cofb_double(off);
      block(16);
    }
    if (!empty_m) {
      cofb_triple(off);
      if (mlen % 16 != 0)
        cofb_triple(off);
      block(mlen);
    }

    c.enter(Phase::Finalize);
    std::copy(y.begin(), y.end(), tag);
  }
};

}
