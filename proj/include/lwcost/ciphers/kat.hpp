#pragma once
#include "make_aead.hpp"
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

namespace lwcost {

// One record of an LWC-style KAT file. `ct` is ciphertext || tag.
struct KatRecord
{
  int count = 0;
  Bytes key;
  Bytes nonce;
  Bytes pt;
  Bytes ad;
  Bytes ct;
};

struct KatFormatError : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

inline std::vector<KatRecord>
parse_kat(std::istream& in, const std::string& source = "<stream>")
{
  std::vector<KatRecord> out;
  KatRecord cur;
  int seen = 0; // bit per field
  int lineno = 0;
  auto flush = [&]() {
    if (seen == 0)
      return;
    if (seen != 0x3f)
      throw KatFormatError(source + ":" + std::to_string(lineno) +
                           ": incomplete record " + std::to_string(cur.count));
    out.push_back(std::move(cur));
    cur = KatRecord{};
    seen = 0;
  };
  std::string line;
  while (std::getline(in, line)) {
    lineno++;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw KatFormatError(source + ":" + std::to_string(lineno) + ": expected 'Field = value'");
    std::string field = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    while (!field.empty() && field.back() == ' ')
      field.pop_back();
    while (!value.empty() && value.front() == ' ')
      value.erase(value.begin());
    try {
      if (field == "Count") {
        flush();
        cur.count = std::stoi(value);
        seen |= 1;
      } else if (field == "Key") {
        cur.key = from_hex(value);
        seen |= 2;
      } else if (field == "Nonce") {
        cur.nonce = from_hex(value);
        seen |= 4;
      } else if (field == "PT") {
        cur.pt = from_hex(value);
        seen |= 8;
      } else if (field == "AD") {
        cur.ad = from_hex(value);
        seen |= 16;
      } else if (field == "CT") {
        cur.ct = from_hex(value);
        seen |= 32;
      } else {
        throw KatFormatError("unknown field '" + field + "'");
      }
    } catch (const std::exception& e) {
      throw KatFormatError(source + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  flush();
  return out;
}

inline std::vector<KatRecord>
parse_kat_file(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw KatFormatError("cannot open KAT file " + path.string());
  return parse_kat(in, path.string());
}

inline std::string
format_kat(const std::vector<KatRecord>& records)
{
  std::ostringstream os;
  for (const auto& r : records)
    os << "Count = " << r.count << "\nKey = " << to_hex(r.key)
       << "\nNonce = " << to_hex(r.nonce) << "\nPT = " << to_hex(r.pt)
       << "\nAD = " << to_hex(r.ad) << "\nCT = " << to_hex(r.ct) << "\n\n";
  return os.str();
}

// Records in the usual generator layout: key and nonce 00 01 02 ..., every
// (|M|, |A|) pair up to max_len with |A| varying fastest.
inline std::vector<KatRecord>
generate_kat(const AlgorithmId& alg, size_t max_len = 32)
{
  auto aead = make_aead(alg);
  const auto& p = aead->params();
  auto seq = [](size_t n) {
    Bytes b(n);
    for (size_t i = 0; i < n; i++)
      b[i] = uint8_t(i);
    return b;
  };
  std::vector<KatRecord> out;
  int count = 1;
  for (size_t m = 0; m <= max_len; m++)
    for (size_t a = 0; a <= max_len; a++) {
      KatRecord r{ count++, seq(p.key_len), seq(p.nonce_len), seq(m), seq(a), {} };
      auto s = aead->seal(r.key, r.nonce, r.ad, r.pt);
      r.ct = s.ciphertext;
      r.ct.insert(r.ct.end(), s.tag.begin(), s.tag.end());
      out.push_back(std::move(r));
    }
  return out;
}

struct KatResult
{
  size_t total = 0;
  size_t passed = 0;
  size_t skipped = 0;
  std::vector<int> failed; // record counts

  bool ok() const { return total > 0 && failed.empty(); }
};

// Checks seal output, open of the expected value, and rejection of a
// corrupted tag. Records rejected by `filter` are skipped.
inline KatResult
run_kat(const AlgorithmId& alg,
        const std::vector<KatRecord>& records,
        const std::function<bool(const KatRecord&)>& filter = {})
{
  auto aead = make_aead(alg);
  const size_t tag_len = aead->params().tag_len;
  KatResult res;
  for (const auto& r : records) {
    if (filter && !filter(r)) {
      res.skipped++;
      continue;
    }
    res.total++;
    bool ok = r.ct.size() == r.pt.size() + tag_len;
    if (ok) {
      try {
        auto s = aead->seal(r.key, r.nonce, r.ad, r.pt);
        Bytes got = s.ciphertext;
        got.insert(got.end(), s.tag.begin(), s.tag.end());
        ok = got == r.ct;
        const ByteView ct(r.ct.data(), r.pt.size());
        Bytes tag(r.ct.begin() + r.pt.size(), r.ct.end());
        auto o = aead->open(r.key, r.nonce, r.ad, ct, tag);
        ok = ok && o.ok && o.plaintext == r.pt;
        tag[0] ^= 1;
        ok = ok && !aead->open(r.key, r.nonce, r.ad, ct, tag).ok;
      } catch (const ParameterError&) {
        ok = false;
      }
    }
    if (ok)
      res.passed++;
    else
      res.failed.push_back(r.count);
  }
  return res;
}

}
