#pragma once
#include "aead.hpp"
#include "primitives/sparkle.hpp"

namespace lwcost {

// Schwaemm256-128 over SPARKLE384: rate 8 words, capacity 4 words, nonce 32
// bytes, key and tag 16 bytes. Words little-endian.
class Schwaemm256_128Aead : public Aead
{
public:
  Schwaemm256_128Aead()
    : Aead({ { Family::Sparkle, Variant::Schwaemm256_128 }, 16, 32, 16 })
  {
  }

protected:
  static constexpr size_t rate_ = 32;
  static constexpr int slim_ = 7, big_ = 11;
  using State = std::array<uint32_t, 12>;

  // Feistel swap of the rate halves, xor of the padded block, then rate
  // whitening with the capacity.
  static void rho(State& s, const uint8_t* in, size_t n)
  {
    uint8_t buf[rate_] = {};
    std::copy(in, in + n, buf);
    if (n < rate_)
      buf[n] = 0x80;
    for (int i = 0; i < 4; i++) {
      const uint32_t t = s[i];
      s[i] = s[i + 4];
      s[i + 4] ^= t;
    }
    for (int i = 0; i < 8; i++)
      s[i] ^= load_le32(buf + 4 * i) ^ s[8 + i % 4];
  }

  void absorb(State& s, ByteView in, uint8_t* out, bool decrypt, uint32_t c_part,
              uint32_t c_full, OpCounters& c) const
  {
    size_t i = 0;
    auto step = [&](size_t n) {
      if (!out) {
        rho(s, in.data() + i, n);
        return;
      }
      uint8_t rate[rate_], m[rate_];
      for (int w = 0; w < 8; w++)
        store_le32(rate + 4 * w, s[w]);
      for (size_t j = 0; j < n; j++) {
        out[i + j] = uint8_t(rate[j] ^ in[i + j]);
        m[j] = decrypt ? out[i + j] : in[i + j];
      }
      rho(s, m, n);
    };
    for (; in.size() - i > rate_; i += rate_) {
      step(rate_);
      prim::sparkle(s, 6, slim_, &c);
    }
    const size_t n = in.size() - i;
    s[11] ^= n < rate_ ? c_part : c_full;
    step(n);
    prim::sparkle(s, 6, big_, &c);
  }

  void crypt(ByteView key, ByteView nonce, ByteView ad, ByteView in, uint8_t* out,
             uint8_t* tag, bool decrypt, OpCounters& c) const override
  {
    State s;
    for (int i = 0; i < 8; i++)
      s[i] = load_le32(nonce.data() + 4 * i);
    for (int i = 0; i < 4; i++)
      s[8 + i] = load_le32(key.data() + 4 * i);

    c.enter(Phase::Init);
    prim::sparkle(s, 6, big_, &c);
    c.enter(Phase::Ad);
    if (!ad.empty())
      absorb(s, ad, nullptr, false, 0x04000000, 0x05000000, c);
    c.enter(Phase::Msg);
    if (!in.empty())
      absorb(s, in, out, decrypt, 0x06000000, 0x07000000, c);
    c.enter(Phase::Finalize);
    for (int i = 0; i < 4; i++)
      store_le32(tag + 4 * i, s[8 + i] ^ load_le32(key.data() + 4 * i));
  }
};

}
