#pragma once
#include "aead.hpp"
#include "primitives/ascon_p.hpp"

namespace lwcost {

namespace detail {

// Byte j of the state in big-endian word order.
inline uint8_t
ascon_get(const prim::AsconState& x, size_t j)
{
  return uint8_t(x[j / 8] >> (56 - 8 * (j % 8)));
}

inline void
ascon_xor(prim::AsconState& x, size_t j, uint8_t v)
{
  x[j / 8] ^= uint64_t(v) << (56 - 8 * (j % 8));
}

inline void
ascon_set(prim::AsconState& x, size_t j, uint8_t v)
{
  ascon_xor(x, j, uint8_t(ascon_get(x, j) ^ v));
}

// Duplexes up to `rate` bytes; in decryption the state takes the ciphertext.
inline void
ascon_duplex(prim::AsconState& x, const uint8_t* in, uint8_t* out, size_t n, bool decrypt)
{
  for (size_t j = 0; j < n; j++) {
    if (decrypt) {
      out[j] = uint8_t(ascon_get(x, j) ^ in[j]);
      ascon_set(x, j, in[j]);
    } else {
      ascon_xor(x, j, in[j]);
      out[j] = ascon_get(x, j);
    }
  }
}

}

// Ascon-128 (rate 8, p^6) and Ascon-128a (rate 16, p^8), v1.2.
class AsconAead : public Aead
{
public:
  explicit AsconAead(Variant v)
    : Aead({ { Family::Ascon, v }, 16, 16, 16 })
    , rate_(v == Variant::Ascon128a ? 16 : 8)
    , pb_(v == Variant::Ascon128a ? 8 : 6)
  {
  }

protected:
  void crypt(ByteView key, ByteView nonce, ByteView ad, ByteView in, uint8_t* out,
             uint8_t* tag, bool decrypt, OpCounters& c) const override
  {
    using namespace detail;
    const uint64_t iv = uint64_t(128) << 56 | uint64_t(rate_ * 8) << 48 |
                        uint64_t(12) << 40 | uint64_t(pb_) << 32;
    const uint64_t k0 = load_be64(key.data()), k1 = load_be64(key.data() + 8);
    prim::AsconState x{ iv, k0, k1, load_be64(nonce.data()), load_be64(nonce.data() + 8) };

    c.enter(Phase::Init);
    prim::ascon_p(x, 12, &c);
    x[3] ^= k0;
    x[4] ^= k1;

    c.enter(Phase::Ad);
    if (!ad.empty()) {
      size_t i = 0;
      for (; ad.size() - i >= rate_; i += rate_) {
        for (size_t j = 0; j < rate_; j++)
          ascon_xor(x, j, ad[i + j]);
        prim::ascon_p(x, pb_, &c);
      }
      for (size_t j = 0; i + j < ad.size(); j++)
        ascon_xor(x, j, ad[i + j]);
      ascon_xor(x, ad.size() - i, 0x80);
      prim::ascon_p(x, pb_, &c);
    }
    x[4] ^= 1;

    c.enter(Phase::Msg);
    size_t i = 0;
    for (; in.size() - i >= rate_; i += rate_) {
      ascon_duplex(x, in.data() + i, out + i, rate_, decrypt);
      prim::ascon_p(x, pb_, &c);
    }
    ascon_duplex(x, in.data() + i, out + i, in.size() - i, decrypt);
    ascon_xor(x, in.size() - i, 0x80);

    c.enter(Phase::Finalize);
    x[rate_ / 8] ^= k0;
    x[rate_ / 8 + 1] ^= k1;
    prim::ascon_p(x, 12, &c);
    store_be64(tag, x[3] ^ k0);
    store_be64(tag + 8, x[4] ^ k1);
  }

private:
  size_t rate_;
  int pb_;
};

}
