#pragma once
#include "../core/bytes.hpp"
#include "../cost_model/algorithm.hpp"
#include "counters.hpp"
#include <algorithm>
#include <memory>

namespace lwcost {

struct AeadParams
{
  AlgorithmId algorithm;
  size_t key_len;
  size_t nonce_len;
  size_t tag_len;
};

struct SealResult
{
  Bytes ciphertext;
  Bytes tag;
  OpCounters counters;
};

struct OpenResult
{
  bool ok = false;
  Bytes plaintext; // empty unless ok
  OpCounters counters;
};

// One-shot AEAD instance. Counters accumulate across operations until
// reset_counters(); each result also carries the counts of that operation.
// Not safe to share between threads during an operation.
class Aead
{
public:
  explicit Aead(AeadParams p)
    : params_(p)
  {
  }
  virtual ~Aead() = default;

  const AeadParams& params() const { return params_; }
  const OpCounters& counters() const { return counters_; }
  void reset_counters() { counters_.reset(); }

  SealResult seal(ByteView key, ByteView nonce, ByteView ad, ByteView pt)
  {
    check(key, nonce);
    SealResult r;
    r.ciphertext.resize(pt.size());
    r.tag.resize(params_.tag_len);
    r.counters.bytes_ad = ad.size();
    r.counters.bytes_msg = pt.size();
    crypt(key, nonce, ad, pt, r.ciphertext.data(), r.tag.data(), false, r.counters);
    counters_.merge(r.counters);
    return r;
  }

  OpenResult open(ByteView key, ByteView nonce, ByteView ad, ByteView ct, ByteView tag)
  {
    check(key, nonce);
    require_size(tag, params_.tag_len, "tag");
    OpenResult r;
    Bytes pt(ct.size()), expected(params_.tag_len);
    r.counters.bytes_ad = ad.size();
    r.counters.bytes_msg = ct.size();
    crypt(key, nonce, ad, ct, pt.data(), expected.data(), true, r.counters);
    counters_.merge(r.counters);
    r.ok = ct_equal(expected, tag);
    if (r.ok)
      r.plaintext = std::move(pt);
    else
      std::fill(pt.begin(), pt.end(), uint8_t(0));
    return r;
  }

protected:
  // Encrypts (or decrypts) `in` into `out` (same length) and writes the tag
  // computed over the ciphertext. The tag is not checked here.
  virtual void crypt(ByteView key,
                     ByteView nonce,
                     ByteView ad,
                     ByteView in,
                     uint8_t* out,
                     uint8_t* tag,
                     bool decrypt,
                     OpCounters& c) const = 0;

private:
  AeadParams params_;
  OpCounters counters_;

  void check(ByteView key, ByteView nonce) const
  {
    require_size(key, params_.key_len, "key");
    require_size(nonce, params_.nonce_len, "nonce");
  }
};

}
