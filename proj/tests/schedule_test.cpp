#include <gtest/gtest.h>
#include <lwcost/schedule/plan_json.hpp>

using namespace lwcost;

TEST(BlockCount, Examples)
{
  EXPECT_EQ(block_count(16, 8), 2u);
  EXPECT_EQ(block_count(17, 8), 3u);
  EXPECT_EQ(block_count(0, 8), 0u);
}

TEST(Plan, AsconEmptyAdIsSkipped)
{
  const auto p = plan(primary(Family::Ascon), 0, 8);
  EXPECT_EQ(p.ad_calls(), 0u);
  EXPECT_EQ(p.init_calls(), 1u);
  EXPECT_EQ(p.finalize_calls(), 1u);
  // 8 bytes pad to two blocks; the last one feeds finalization directly.
  EXPECT_EQ(p.msg_calls(), 1u);
  EXPECT_EQ(plan_json(p)["phases"]["ad"], 0);
}

TEST(Plan, GiftCofbEmptyInputs)
{
  const auto p = plan(primary(Family::GiftCofb), 0, 0);
  // Empty AD is padded to one block; an empty message adds nothing.
  EXPECT_EQ(p.ad_calls() + p.msg_calls(), 1u);
  EXPECT_EQ(p.total_calls(), 2u);
}

TEST(Plan, TinyJambuLabels)
{
  const auto p = plan(primary(Family::TinyJambu), 8, 8);
  EXPECT_EQ(p.at(Phase::Ad).size(), 1u);
  EXPECT_EQ(p.at(Phase::Ad).count("tinyjambu_p640"), 1u);
  EXPECT_EQ(p.at(Phase::Msg).size(), 1u);
  EXPECT_EQ(p.at(Phase::Msg).count("tinyjambu_p1024"), 1u);
}

TEST(Plan, MonotoneInLengths)
{
  for (const auto& alg : primary_algorithms())
    for (uint64_t a = 0; a < 100; a += 7)
      for (uint64_t m = 0; m < 100; m += 9) {
        const auto p = plan(alg, a, m);
        EXPECT_LE(p.ad_calls(), plan(alg, a + 1, m).ad_calls()) << variant_key(alg.variant);
        EXPECT_LE(p.msg_calls(), plan(alg, a, m + 1).msg_calls()) << variant_key(alg.variant);
      }
}

TEST(PredictedCost, Examples)
{
  PhasePlan empty;
  EXPECT_EQ(predicted_cost(empty, CostParams{}), CostBreakdown{});

  PhasePlan p;
  p.primitives[size_t(Phase::Ad)]["ascon_p6"] = 2;
  p.primitives[size_t(Phase::Msg)]["ascon_p6"] = 3;
  EXPECT_EQ(predicted_cost(p, CostParams{}).total, Cost(5));

  PhasePlan tj;
  tj.primitives[size_t(Phase::Init)]["tinyjambu_p640"] = 6;
  tj.primitives[size_t(Phase::Ad)]["tinyjambu_p640"] = 2;
  tj.primitives[size_t(Phase::Msg)]["tinyjambu_p1024"] = 2;
  tj.primitives[size_t(Phase::Finalize)]["tinyjambu_p1024"] = 4;
  EXPECT_EQ(predicted_cost(tj, CostParams{}).total, Cost(14));

  CostParams w;
  w.b_640 = Cost(3);
  w.b_1024 = Cost(5);
  w.c_A = Cost(1);
  const auto c = predicted_cost(tj, w);
  EXPECT_EQ(c.init, Cost(18));
  EXPECT_EQ(c.process_ad, Cost(2 * 3 + 2));
  EXPECT_EQ(c.process_msg, Cost(10));
  EXPECT_EQ(c.finalize, Cost(20));
}

TEST(PredictedCost, PhasesSumToTotal)
{
  CostParams params;
  params.b = Cost(12);
  params.P = Cost(7);
  params.c_A = Cost(1, 3);
  for (const auto& alg : primary_algorithms())
    for (uint64_t a : { 0, 1, 31, 64, 200 })
      for (uint64_t m : { 0, 2, 33, 129 }) {
        const auto c = predicted_cost(plan(alg, a, m), params);
        EXPECT_EQ(c.total, c.init + c.process_ad + c.process_msg + c.finalize);
      }
}

TEST(Plan, GrainKeystreamWords)
{
  // AD stream is DER(len) || AD, and both streams go through 16-bit words.
  const auto p = plan(primary(Family::Grain128Aead), 0, 0);
  EXPECT_EQ(p.ad_calls(), 1u);
  EXPECT_EQ(p.msg_calls(), 0u);
  EXPECT_EQ(der_length_bytes(127), 1u);
  EXPECT_EQ(der_length_bytes(128), 2u);
  EXPECT_EQ(der_length_bytes(256), 3u);
}

TEST(PlanJson, Shape)
{
  const auto j = plan_json(plan(primary(Family::Xoodyak), 44, 24));
  EXPECT_EQ(j["algorithm"], "Xoodyak");
  EXPECT_EQ(j["len_A"], 44);
  EXPECT_EQ(j["total"].get<uint64_t>(),
            j["phases"]["init"].get<uint64_t>() + j["phases"]["ad"].get<uint64_t>() +
              j["phases"]["msg"].get<uint64_t>() + j["phases"]["finalize"].get<uint64_t>());
}
