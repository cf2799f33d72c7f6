#pragma once
#include "aead.hpp"
#include "primitives/ascon_p.hpp"

namespace lwcost {

// ISAP-A-128a (sB=1, sE=6) and ISAP-A-128 (sB=sE=12) over Ascon-p, v2.
// Encryption always derives the session key, also for empty messages.
class IsapAead : public Aead
{
public:
  explicit IsapAead(Variant v)
    : Aead({ { Family::Isap, v }, 16, 16, 16 })
    , sb_(v == Variant::IsapA128a ? 1 : 12)
    , se_(v == Variant::IsapA128a ? 6 : 12)
  {
  }

protected:
  static constexpr int sh_ = 12, sk_ = 12;

  uint64_t iv(uint8_t id) const
  {
    const uint8_t b[8] = { id, 128, 64, 1, sh_, uint8_t(sb_), uint8_t(se_), sk_ };
    return load_be64(b);
  }

  // Re-keying: absorbs y one bit per p^sB call; returns the state words.
  prim::AsconState rekey(ByteView key, uint8_t id, const uint8_t* y, size_t ylen, OpCounters& c) const
  {
    prim::AsconState x{ load_be64(key.data()), load_be64(key.data() + 8), iv(id), 0, 0 };
    prim::ascon_p(x, sk_, &c);
    const size_t bits = ylen * 8;
    for (size_t i = 0; i + 1 < bits; i++) {
      x[0] ^= uint64_t((y[i / 8] >> (7 - i % 8)) & 1) << 63;
      prim::ascon_p(x, sb_, &c);
    }
    x[0] ^= uint64_t(y[ylen - 1] & 1) << 63;
    prim::ascon_p(x, sk_, &c);
    return x;
  }

  void absorb(prim::AsconState& x, ByteView data, OpCounters& c) const
  {
    size_t i = 0;
    for (; data.size() - i >= 8; i += 8) {
      x[0] ^= load_be64(data.data() + i);
      prim::ascon_p(x, sh_, &c);
    }
    uint8_t last[8] = {};
    std::copy(data.begin() + i, data.end(), last);
    last[data.size() - i] = 0x80;
    x[0] ^= load_be64(last);
    prim::ascon_p(x, sh_, &c);
  }

  void mac(ByteView key, ByteView nonce, ByteView ad, ByteView ct, uint8_t* tag, OpCounters& c) const
  {
    c.enter(Phase::Init);
    prim::AsconState x{ load_be64(nonce.data()), load_be64(nonce.data() + 8), iv(1), 0, 0 };
    prim::ascon_p(x, sh_, &c);
    c.enter(Phase::Ad);
    absorb(x, ad, c);
    x[4] ^= 1;
    c.enter(Phase::Msg);
    absorb(x, ct, c);
    c.enter(Phase::Init);
    uint8_t y[16];
    store_be64(y, x[0]);
    store_be64(y + 8, x[1]);
    const auto k = rekey(key, 2, y, 16, c);
    x[0] = k[0];
    x[1] = k[1];
    c.enter(Phase::Finalize);
    prim::ascon_p(x, sh_, &c);
    store_be64(tag, x[0]);
    store_be64(tag + 8, x[1]);
  }

  void keystream(ByteView key, ByteView nonce, ByteView in, uint8_t* out, OpCounters& c) const
  {
    c.enter(Phase::Init);
    prim::AsconState x = rekey(key, 3, nonce.data(), nonce.size(), c);
    x[3] = load_be64(nonce.data());
    x[4] = load_be64(nonce.data() + 8);
    c.enter(Phase::Msg);
    for (size_t i = 0; i < in.size(); i += 8) {
      prim::ascon_p(x, se_, &c);
      uint8_t ks[8];
      store_be64(ks, x[0]);
      for (size_t j = 0; j < 8 && i + j < in.size(); j++)
        out[i + j] = uint8_t(in[i + j] ^ ks[j]);
    }
  }

  void crypt(ByteView key, ByteView nonce, ByteView ad, ByteView in, uint8_t* out,
             uint8_t* tag, bool decrypt, OpCounters& c) const override
  {
    if (decrypt) {
      mac(key, nonce, ad, in, tag, c);
      keystream(key, nonce, in, out, c);
    } else {
      keystream(key, nonce, in, out, c);
      mac(key, nonce, ad, ByteView(out, in.size()), tag, c);
    }
  }

private:
  int sb_;
  int se_;
};

}
