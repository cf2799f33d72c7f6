#pragma once
#include "aead.hpp"
#include "primitives/xoodoo.hpp"

namespace lwcost {

namespace detail {

// Cyclist in keyed mode over Xoodoo[12].
class Cyclist
{
public:
  static constexpr size_t r_kin = 44, r_kout = 24, r_absorb = 44;

  Cyclist(ByteView key, ByteView id, OpCounters* c)
    : c_(c)
  {
    Bytes k(key.begin(), key.end());
    k.insert(k.end(), id.begin(), id.end());
    k.push_back(uint8_t(id.size()));
    absorb_any(k, r_kin, 0x02);
  }

  void absorb(ByteView x) { absorb_any(x, r_absorb, 0x03); }

  // At least one block is processed, also for empty input.
  void crypt(ByteView in, uint8_t* out, bool decrypt)
  {
    uint8_t cu = 0x80;
    size_t i = 0;
    do {
      const size_t n = std::min(r_kout, in.size() - i);
      up(cu);
      cu = 0;
      uint8_t block[r_kout];
      for (size_t j = 0; j < n; j++) {
        out[i + j] = uint8_t(in[i + j] ^ s_[j]);
        block[j] = decrypt ? out[i + j] : in[i + j];
      }
      down(ByteView(block, n), 0);
      i += n;
    } while (i < in.size());
  }

  void squeeze(uint8_t* out, size_t len)
  {
    up(0x40);
    size_t i = 0;
    for (;;) {
      const size_t n = std::min(r_kout, len - i);
      std::copy(s_.begin(), s_.begin() + n, out + i);
      i += n;
      if (i == len)
        return;
      down({}, 0);
      up(0);
    }
  }

  void set_counters(OpCounters* c) { c_ = c; }

private:
  std::array<uint8_t, 48> s_{};
  bool phase_up_ = true;
  OpCounters* c_;

  void up(uint8_t cu)
  {
    s_[47] ^= cu;
    prim::xoodoo(s_, 12, c_);
    phase_up_ = true;
  }

  void down(ByteView x, uint8_t cd)
  {
    for (size_t j = 0; j < x.size(); j++)
      s_[j] ^= x[j];
    s_[x.size()] ^= 0x01;
    s_[47] ^= cd;
    phase_up_ = false;
  }

  void absorb_any(ByteView x, size_t rate, uint8_t cd)
  {
    size_t i = 0;
    do {
      const size_t n = std::min(rate, x.size() - i);
      if (!phase_up_)
        up(0);
      down(x.subspan(i, n), cd);
      cd = 0;
      i += n;
    } while (i < x.size());
  }
};

}

// Xoodyak AEAD: Cyclist(K), Absorb(N), Absorb(A), Crypt(M), Squeeze(16).
class XoodyakAead : public Aead
{
public:
  XoodyakAead()
    : Aead({ { Family::Xoodyak, Variant::Xoodyak }, 16, 16, 16 })
  {
  }

protected:
  void crypt(ByteView key, ByteView nonce, ByteView ad, ByteView in, uint8_t* out,
             uint8_t* tag, bool decrypt, OpCounters& c) const override
  {
    c.enter(Phase::Init);
    detail::Cyclist cy(key, {}, &c);
    cy.absorb(nonce);
    c.enter(Phase::Ad);
    cy.absorb(ad);
    c.enter(Phase::Msg);
    cy.crypt(in, out, decrypt);
    c.enter(Phase::Finalize);
    cy.squeeze(tag, 16);
  }
};

}
