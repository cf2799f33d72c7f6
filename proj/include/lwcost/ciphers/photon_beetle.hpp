#pragma once
#include "aead.hpp"
#include "primitives/photon256.hpp"

namespace lwcost {

// PHOTON-Beetle-AEAD[128]: rate 16 bytes, state N || K.
class PhotonBeetleAead : public Aead
{
public:
  PhotonBeetleAead()
    : Aead({ { Family::PhotonBeetle, Variant::PhotonBeetleAead128 }, 16, 16, 16 })
  {
  }

protected:
  static constexpr size_t rate_ = 16;

  static uint8_t select(bool c1, bool c2, uint8_t o1, uint8_t o2, uint8_t o3, uint8_t o4)
  {
    if (c1 && c2)
      return o1;
    if (c1)
      return o2;
    if (c2)
      return o3;
    return o4;
  }

  void crypt(ByteView key, ByteView nonce, ByteView ad, ByteView in, uint8_t* out,
             uint8_t* tag, bool decrypt, OpCounters& c) const override
  {
    std::array<uint8_t, 32> s;
    std::copy(nonce.begin(), nonce.end(), s.begin());
    std::copy(key.begin(), key.end(), s.begin() + 16);

    c.enter(Phase::Init);
    if (ad.empty() && in.empty()) {
      s[31] ^= 1 << 5;
      c.enter(Phase::Finalize);
      prim::photon256(s, &c);
      std::copy(s.begin(), s.begin() + 16, tag);
      return;
    }
    const uint8_t c0 = select(!in.empty(), ad.size() % rate_ == 0, 1, 2, 3, 4);
    const uint8_t c1 = select(!ad.empty(), in.size() % rate_ == 0, 1, 2, 5, 6);

    c.enter(Phase::Ad);
    if (!ad.empty()) {
      for (size_t i = 0; i < ad.size(); i += rate_) {
        prim::photon256(s, &c);
        const size_t n = std::min(rate_, ad.size() - i);
        for (size_t j = 0; j < n; j++)
          s[j] ^= ad[i + j];
        if (n < rate_)
          s[n] ^= 0x01;
      }
      s[31] ^= uint8_t(c0 << 5);
    }

    c.enter(Phase::Msg);
    if (!in.empty()) {
      for (size_t i = 0; i < in.size(); i += rate_) {
        prim::photon256(s, &c);
        const size_t n = std::min(rate_, in.size() - i);
        // Shuffle: (S2, S1 >>> 1) over the two 8-byte halves of the rate.
        uint8_t sh[16];
        for (int j = 0; j < 8; j++) {
          sh[j] = s[8 + j];
          sh[8 + j] = uint8_t(s[j] >> 1 | (s[(j + 1) % 8] & 1) << 7);
        }
        for (size_t j = 0; j < n; j++) {
          out[i + j] = uint8_t(sh[j] ^ in[i + j]);
          s[j] ^= decrypt ? out[i + j] : in[i + j];
        }
        if (n < rate_)
          s[n] ^= 0x01;
      }
      s[31] ^= uint8_t(c1 << 5);
    }

    c.enter(Phase::Finalize);
    prim::photon256(s, &c);
    std::copy(s.begin(), s.begin() + 16, tag);
  }
};

}
