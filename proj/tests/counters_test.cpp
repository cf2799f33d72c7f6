#include <gtest/gtest.h>
#include <lwcost/lwcost.hpp>

using namespace lwcost;

namespace {

std::vector<uint64_t>
cipher_grid(uint64_t r)
{
  return { 0, 1, r - 1, r, r + 1, 2 * r, 2 * r + 1, 64, 255 };
}

void
expect_plan_match(const AlgorithmId& alg, const std::vector<uint64_t>& ga, const std::vector<uint64_t>& gm)
{
  auto aead = make_aead(alg);
  const auto& p = aead->params();
  const Bytes k(p.key_len, 0x11), n(p.nonce_len, 0x22);
  for (uint64_t a : ga)
    for (uint64_t m : gm) {
      const Bytes ad(a, 0x33), pt(m, 0x44);
      const auto s = aead->seal(k, n, ad, pt);
      const auto expected = plan(alg, a, m);
      EXPECT_TRUE(same_counts(s.counters, expected))
        << variant_key(alg.variant) << " |A|=" << a << " |M|=" << m;
      const auto o = aead->open(k, n, ad, s.ciphertext, s.tag);
      EXPECT_EQ(o.counters, s.counters) << variant_key(alg.variant) << " open";
    }
}

}

TEST(Counters, MatchPlanOnCipherGrid)
{
  for (const auto& alg : all_variants()) {
    const auto sp = schedule_params(alg);
    expect_plan_match(alg, cipher_grid(sp.rate_ad), cipher_grid(sp.rate_msg));
  }
}

TEST(Counters, MatchPlanOnDefaultGrid)
{
  for (const auto& alg : primary_algorithms()) {
    const auto sp = schedule_params(alg);
    expect_plan_match(alg, default_grid(sp.rate_ad), default_grid(sp.rate_msg));
  }
}

TEST(Counters, AsconEmptyAdSkip)
{
  auto aead = make_aead(primary(Family::Ascon));
  const auto s = aead->seal(Bytes(16), Bytes(16), {}, Bytes(8));
  EXPECT_EQ(s.counters.calls(Phase::Ad), 0u);
}

TEST(Counters, MergeAddsPerPhase)
{
  OpCounters a, b;
  a.enter(Phase::Ad);
  a.tick("x");
  b.enter(Phase::Ad);
  b.tick("x");
  b.enter(Phase::Msg);
  b.tick("y");
  a.merge(b);
  EXPECT_EQ(a.at(Phase::Ad).at("x"), 2u);
  EXPECT_EQ(a.at(Phase::Msg).at("y"), 1u);
  EXPECT_EQ(a.total_calls(), 3u);
  a.reset();
  EXPECT_EQ(a, OpCounters{});
}

TEST(Counters, AccumulateAcrossOperations)
{
  auto aead = make_aead(primary(Family::GiftCofb));
  const auto s1 = aead->seal(Bytes(16), Bytes(16), Bytes(5), Bytes(40));
  const auto s2 = aead->seal(Bytes(16), Bytes(16), Bytes(17), Bytes(3));
  EXPECT_EQ(aead->counters().total_calls(), s1.counters.total_calls() + s2.counters.total_calls());
}
