#include <gtest/gtest.h>
#include <lwcost/lwcost.hpp>

using namespace lwcost;

namespace {

std::string
hex(ByteView v)
{
  return to_hex(v);
}

std::string
upper(std::string s)
{
  for (auto& ch : s)
    ch = char(std::toupper(static_cast<unsigned char>(ch)));
  return s;
}

}

// GIFT-128 reference vectors are stated on the nibble representation; the
// bit-sliced core needs the plaintext and ciphertext mapped across.
TEST(Gift128, PublishedVectors)
{
  struct V
  {
    const char *key, *pt, *ct;
  };
  const V vectors[] = {
    { "00000000000000000000000000000000", "00000000000000000000000000000000", "cd0bd738388ad3f668b15a36ceb6ff92" },
    { "fedcba9876543210fedcba9876543210", "fedcba9876543210fedcba9876543210", "8422241a6dbf5a9346af468409ee0152" },
    { "d0f5c59a7700d3e799028fa9f90ad837", "e39c141fa57dba43f08a85b6a91f86c1", "13ede67cbdcc3dbf400a62d6977265ea" },
  };
  for (const auto& v : vectors) {
    const auto in = prim::gift128_nibbles_to_slices(from_hex(v.pt));
    const auto out = prim::gift128(in, from_hex(v.key));
    EXPECT_EQ(hex(prim::gift128_slices_to_nibbles(out)), upper(v.ct));
  }
}

TEST(Gift128, SliceMappingIsInvertible)
{
  Bytes b(16);
  for (int i = 0; i < 16; i++)
    b[i] = uint8_t(i * 37 + 11);
  const auto s = prim::gift128_nibbles_to_slices(b);
  const auto back = prim::gift128_slices_to_nibbles(s);
  EXPECT_EQ(Bytes(back.begin(), back.end()), b);
}

TEST(Skinny, PublishedVectors)
{
  EXPECT_EQ(hex(prim::skinny128(from_hex("a3994b66ad85a3459f44e92b08f550cb"),
                                from_hex("df889548cfc7ea52d296339301797449ab588a34a47f1ab2dfe9c8293fbea9a5"
                                         "ab1afac2611012cd8cef952618c3ebe8"),
                                56)),
            "94ECF589E2017C601B38C6346A10DCFA");
  EXPECT_EQ(hex(prim::skinny128(from_hex("f20adb0eb08b648a3b2eeed1f0adda14"),
                                from_hex("4f55cfb0520cac52fd92c15f37073e93"),
                                40)),
            "22FF30D498EA62D7E45B476E33675B74");
  EXPECT_THROW(prim::skinny128(Bytes(16), Bytes(20), 40), ParameterError);
}

// The generic Keccak-p round also drives Keccak-f[200]; check it at lane
// width 64 through SHA3-256 of the empty string.
TEST(Keccak, Sha3EmptyString)
{
  std::array<uint64_t, 25> st{};
  st[0] ^= 0x06;
  st[16] ^= uint64_t(0x80) << 56;
  prim::keccak_p(st, 24);
  Bytes out(32);
  for (int i = 0; i < 4; i++)
    store_le64(out.data() + 8 * i, st[i]);
  EXPECT_EQ(hex(out), "A7FFC6F8BF1ED76651C14756A061D662F580FF4DE43B49FA82D80A4B80F8434A");
}

TEST(Xoodoo, CyclistSelfTestVector)
{
  const Bytes key = from_hex("5a4b3c2d1e0f00f1e2d3c4b5a6978879");
  const Bytes id = from_hex("6b4c2d0eefd0b19272533415f6d7b899");
  detail::Cyclist cy(key, id, nullptr);
  cy.absorb(from_hex("32f3b47535f6"));
  const Bytes pt = from_hex("e465e566e667e7");
  Bytes out(pt.size() + 16);
  cy.crypt(pt, out.data(), false);
  cy.squeeze(out.data() + pt.size(), 16);
  EXPECT_EQ(hex(out), "6E68081C7EACBF72E2A677A60E442748D7A86E788EB9D4");
}

TEST(Primitives, WidthErrors)
{
  Bytes b(10);
  EXPECT_THROW(prim::keccak_f200(b), ParameterError);
  EXPECT_THROW(prim::photon256(b), ParameterError);
  EXPECT_THROW(prim::xoodoo(std::span<uint8_t>(b), 12), ParameterError);
  EXPECT_THROW(prim::ascon_p(std::span<uint8_t>(b), 12), ParameterError);
  Bytes s20(20);
  EXPECT_THROW(prim::spongent(s20, 100), ParameterError);
  EXPECT_THROW(prim::spongent(s20, 176), ParameterError);
  std::array<uint32_t, 12> sp{};
  EXPECT_THROW(prim::sparkle(sp, 5, 7), ParameterError);
  EXPECT_THROW(prim::sparkle(std::span<uint32_t>(sp.data(), 8), 6, 7), ParameterError);
  std::array<uint32_t, 4> tj{}, k{};
  EXPECT_THROW(prim::tinyjambu_p(tj, k, 500), ParameterError);
  EXPECT_THROW(prim::gift128(Bytes(15), Bytes(16)), ParameterError);
}

namespace {

// Applies `f` to a state derived from `seed`, returning the output bytes.
template<typename F>
Bytes
run(size_t width, uint8_t seed, F f)
{
  Bytes s(width);
  for (size_t i = 0; i < width; i++)
    s[i] = uint8_t(seed * 31 + i);
  f(s);
  return s;
}

struct Case
{
  const char* label;
  size_t width;
  std::function<void(Bytes&, OpCounters*)> call;
};

std::vector<Case>
cases()
{
  return {
    { "ascon_p12", 40, [](Bytes& s, OpCounters* c) { prim::ascon_p(std::span<uint8_t>(s), 12, c); } },
    { "ascon_p6", 40, [](Bytes& s, OpCounters* c) { prim::ascon_p(std::span<uint8_t>(s), 6, c); } },
    { "keccak_f200", 25, [](Bytes& s, OpCounters* c) { prim::keccak_f200(s, c); } },
    { "spongent160", 20, [](Bytes& s, OpCounters* c) { prim::spongent(s, 160, c); } },
    { "spongent176", 22, [](Bytes& s, OpCounters* c) { prim::spongent(s, 176, c); } },
    { "photon256", 32, [](Bytes& s, OpCounters* c) { prim::photon256(s, c); } },
    { "xoodoo12", 48, [](Bytes& s, OpCounters* c) { prim::xoodoo(std::span<uint8_t>(s), 12, c); } },
    { "gift128", 16,
      [](Bytes& s, OpCounters* c) {
        const Bytes key(16, 0x5c);
        const auto o = prim::gift128(s, key, c);
        std::copy(o.begin(), o.end(), s.begin());
      } },
    { "skinny128_384p", 16,
      [](Bytes& s, OpCounters* c) {
        const Bytes tk(48, 0x3a);
        const auto o = prim::skinny128(s, tk, 40, c);
        std::copy(o.begin(), o.end(), s.begin());
      } },
    { "sparkle384_7", 48,
      [](Bytes& s, OpCounters* c) {
        std::array<uint32_t, 12> w;
        std::memcpy(w.data(), s.data(), 48);
        prim::sparkle(w, 6, 7, c);
        std::memcpy(s.data(), w.data(), 48);
      } },
    { "tinyjambu_p1024", 16,
      [](Bytes& s, OpCounters* c) {
        std::array<uint32_t, 4> w, k{ 1, 2, 3, 4 };
        std::memcpy(w.data(), s.data(), 16);
        prim::tinyjambu_p(w, k, 1024, c);
        std::memcpy(s.data(), w.data(), 16);
      } },
  };
}

}

TEST(Primitives, DistinctInputsGiveDistinctOutputs)
{
  for (const auto& cs : cases()) {
    std::set<Bytes> seen;
    for (uint8_t seed = 0; seed < 32; seed++)
      seen.insert(run(cs.width, seed, [&](Bytes& s) { cs.call(s, nullptr); }));
    EXPECT_EQ(seen.size(), 32u) << cs.label;
  }
}

TEST(Primitives, CounterAddsExactlyOne)
{
  for (const auto& cs : cases()) {
    OpCounters c;
    c.enter(Phase::Msg);
    Bytes s(cs.width, 1);
    cs.call(s, &c);
    EXPECT_EQ(c.total_calls(), 1u) << cs.label;
    EXPECT_EQ(c.at(Phase::Msg).at(cs.label), 1u) << cs.label;
    cs.call(s, &c);
    EXPECT_EQ(c.total_calls(), 2u) << cs.label;
  }
}

TEST(Primitives, Grain32ClocksPerTick)
{
  prim::GrainState st;
  st.lfsr = { 1, 2, 3, 4 };
  st.nfsr = { 5, 6, 7, 8 };
  OpCounters c;
  const auto y1 = prim::grain_update(st, prim::GrainFeed::None, 0, 0, &c);
  const auto y2 = prim::grain_update(st, prim::GrainFeed::None, 0, 0, &c);
  EXPECT_EQ(c.at(Phase::Init).at("grain_ks32"), 2u);
  EXPECT_NE(y1, y2);
}
