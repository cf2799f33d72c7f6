#pragma once
#include "aead.hpp"
#include "primitives/skinny.hpp"

namespace lwcost {

namespace detail {

using Block16 = std::array<uint8_t, 16>;

// 56-bit block counter, multiplied by x in GF(2^56) per step.
inline void
romulus_lfsr(std::array<uint8_t, 7>& cnt)
{
  const uint8_t fb = cnt[6] >> 7;
  for (int i = 6; i > 0; i--)
    cnt[i] = uint8_t(cnt[i] << 1 | cnt[i - 1] >> 7);
  cnt[0] = uint8_t(cnt[0] << 1) ^ (fb ? 0x95 : 0);
}

// Zero padding with the byte count in the last byte for partial blocks.
inline Block16
romulus_pad(const uint8_t* d, size_t n)
{
  Block16 out{};
  std::copy(d, d + n, out.begin());
  if (n < 16)
    out[15] = uint8_t(n & 0x0f);
  return out;
}

inline uint8_t
romulus_g(uint8_t s)
{
  return uint8_t((s >> 1) ^ (s & 0x80) ^ ((s & 0x01) << 7));
}

}

// Romulus-N v1.3 over SKINNY-128-384+.
class RomulusNAead : public Aead
{
public:
  RomulusNAead()
    : Aead({ { Family::RomulusN, Variant::RomulusN }, 16, 16, 16 })
  {
  }

protected:
  void crypt(ByteView key, ByteView nonce, ByteView ad, ByteView in, uint8_t* out,
             uint8_t* tag, bool decrypt, OpCounters& c) const override
  {
    using namespace detail;
    Block16 s{};
    std::array<uint8_t, 7> cnt{ 1 };
    auto tbc = [&](const uint8_t* tweak, uint8_t domain) {
      uint8_t tk[48] = {};
      std::copy(cnt.begin(), cnt.end(), tk);
      tk[7] = domain;
      std::copy(tweak, tweak + 16, tk + 16);
      std::copy(key.begin(), key.end(), tk + 32);
      s = prim::skinny128(s, tk, 40, &c);
    };

    // AD in pairs: the first block of a pair is added to the state, the
    // second is the tweak. The closing nonce call is booked under init.
    c.enter(Phase::Ad);
    size_t i = 0;
    bool last_full = false;
    if (ad.empty()) {
      romulus_lfsr(cnt);
    } else {
      while (i < ad.size()) {
        const size_t n1 = std::min<size_t>(16, ad.size() - i);
        const Block16 p = romulus_pad(ad.data() + i, n1);
        for (int j = 0; j < 16; j++)
          s[j] ^= p[j];
        i += n1;
        last_full = n1 == 16;
        romulus_lfsr(cnt);
        if (i < ad.size()) {
          const size_t n2 = std::min<size_t>(16, ad.size() - i);
          const Block16 t = romulus_pad(ad.data() + i, n2);
          i += n2;
          last_full = n2 == 16;
          tbc(t.data(), 0x08);
          romulus_lfsr(cnt);
        }
      }
    }
    c.enter(Phase::Init);
    tbc(nonce.data(), last_full ? 0x18 : 0x1a);

    c.enter(Phase::Msg);
    cnt = { 1 };
    if (in.empty()) {
      romulus_lfsr(cnt);
      tbc(nonce.data(), 0x15);
    }
    for (i = 0; i < in.size();) {
      const size_t n = std::min<size_t>(16, in.size() - i);
      for (size_t j = 0; j < n; j++)
        out[i + j] = uint8_t(romulus_g(s[j]) ^ in[i + j]);
      const Block16 p = romulus_pad(decrypt ? out + i : in.data() + i, n);
      for (int j = 0; j < 16; j++)
        s[j] ^= p[j];
      i += n;
      romulus_lfsr(cnt);
      tbc(nonce.data(), i < in.size() ? 0x04 : (n == 16 ? 0x14 : 0x15));
    }

    c.enter(Phase::Finalize);
    for (int j = 0; j < 16; j++)
      tag[j] = romulus_g(s[j]);
  }
};

}
