#pragma once
#include "aead.hpp"
#include "primitives/keccak.hpp"
#include "primitives/spongent.hpp"
#include <vector>

namespace lwcost {

// Elephant v2: Dumbo (Spongent-pi[160]), Jumbo (Spongent-pi[176]) and
// Delirium (Keccak-f[200]). Key 16 bytes, nonce 12 bytes.
class ElephantAead : public Aead
{
public:
  explicit ElephantAead(Variant v)
    : Aead({ { Family::Elephant, v }, 16, 12, v == Variant::Delirium ? 16u : 8u })
    , v_(v)
    , n_(v == Variant::Dumbo ? 20 : v == Variant::Jumbo ? 22 : 25)
  {
  }

protected:
  using Block = std::vector<uint8_t>;

  void perm(Block& b, OpCounters& c) const
  {
    if (v_ == Variant::Dumbo)
      prim::spongent(b, 160, &c);
    else if (v_ == Variant::Jumbo)
      prim::spongent(b, 176, &c);
    else
      prim::keccak_f200(b, &c);
  }

  static uint8_t rotl(uint8_t x, int k) { return uint8_t(x << k | x >> (8 - k)); }

  Block lfsr_step(const Block& x) const
  {
    uint8_t t;
    if (v_ == Variant::Dumbo)
      t = uint8_t(rotl(x[0], 3) ^ (x[3] << 7) ^ (x[13] >> 7));
    else if (v_ == Variant::Jumbo)
      t = uint8_t(rotl(x[0], 1) ^ (x[3] << 7) ^ (x[19] >> 7));
    else
      t = uint8_t(rotl(x[0], 1) ^ rotl(x[2], 1) ^ (x[13] << 1));
    Block out(x.begin() + 1, x.end());
    out.push_back(t);
    return out;
  }

  static void xor_into(Block& d, const Block& s)
  {
    for (size_t i = 0; i < d.size(); i++)
      d[i] ^= s[i];
  }

  // Block i of N || A with 0x01 padding and an extra padding block when the
  // total length is a multiple of the block size.
  Block ad_block(ByteView ad, ByteView nonce, size_t i) const
  {
    Block out(n_, 0);
    size_t len = 0;
    if (i == 0) {
      std::copy(nonce.begin(), nonce.end(), out.begin());
      len = nonce.size();
    }
    const size_t off = i * n_ - (i != 0) * nonce.size();
    if (i != 0 && off == ad.size()) {
      out[0] = 0x01;
      return out;
    }
    const size_t room = n_ - len, left = ad.size() - off;
    if (room <= left) {
      std::copy(ad.begin() + off, ad.begin() + off + room, out.begin() + len);
    } else {
      std::copy(ad.begin() + off, ad.end(), out.begin() + len);
      out[len + left] = 0x01;
    }
    return out;
  }

  Block c_block(const uint8_t* ct, size_t clen, size_t i) const
  {
    Block out(n_, 0);
    const size_t off = i * n_;
    if (off == clen) {
      out[0] = 0x01;
      return out;
    }
    const size_t left = clen - off;
    if (left >= n_) {
      std::copy(ct + off, ct + off + n_, out.begin());
    } else {
      std::copy(ct + off, ct + clen, out.begin());
      out[left] = 0x01;
    }
    return out;
  }

  void crypt(ByteView key, ByteView nonce, ByteView ad, ByteView in, uint8_t* out,
             uint8_t* tag, bool decrypt, OpCounters& c) const override
  {
    const size_t mlen = in.size();
    const size_t nb_c = 1 + mlen / n_;
    const size_t nb_m = mlen % n_ ? nb_c : nb_c - 1;
    const size_t nb_ad = 1 + (nonce.size() + ad.size()) / n_;
    const size_t nb_it = std::max(nb_c + 1, nb_ad - 1);
    const uint8_t* ct = decrypt ? in.data() : out;

    c.enter(Phase::Init);
    Block l(n_, 0);
    std::copy(key.begin(), key.end(), l.begin());
    perm(l, c);

    Block prev(n_, 0), cur = l, next;
    Block t = ad_block(ad, nonce, 0);
    size_t off = 0;
    for (size_t i = 0; i < nb_it; i++, off += n_) {
      next = lfsr_step(cur);
      if (i < nb_m) {
        c.enter(Phase::Msg);
        Block b(n_, 0);
        std::copy(nonce.begin(), nonce.end(), b.begin());
        xor_into(b, cur);
        xor_into(b, next);
        perm(b, c);
        xor_into(b, cur);
        xor_into(b, next);
        const size_t r = i == nb_m - 1 ? mlen - off : n_;
        for (size_t j = 0; j < r; j++)
          out[off + j] = uint8_t(b[j] ^ in[off + j]);
      }
      if (i > 0 && i <= nb_c) {
        c.enter(Phase::Msg);
        Block b = c_block(ct, mlen, i - 1);
        xor_into(b, prev);
        xor_into(b, next);
        perm(b, c);
        xor_into(b, prev);
        xor_into(b, next);
        xor_into(t, b);
      }
      if (i + 1 < nb_ad) {
        c.enter(Phase::Ad);
        Block b = ad_block(ad, nonce, i + 1);
        xor_into(b, next);
        perm(b, c);
        xor_into(b, next);
        xor_into(t, b);
      }
      prev = std::move(cur);
      cur = std::move(next);
    }

    c.enter(Phase::Finalize);
    xor_into(t, l);
    perm(t, c);
    xor_into(t, l);
    std::copy(t.begin(), t.begin() + params().tag_len, tag);
  }

private:
  Variant v_;
  size_t n_;
};

}
