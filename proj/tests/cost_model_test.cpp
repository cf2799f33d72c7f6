#include <gtest/gtest.h>
#include <lwcost/cost_model/registry_json.hpp>
#include <lwcost/cost_model/phases.hpp>

#include <fstream>
#include <map>
#include <random>

using namespace lwcost;

namespace {

std::map<std::string, std::string>
load_golden()
{
  std::ifstream in(std::string(LWCOST_GOLDEN) + "/cost_rows.txt");
  std::map<std::string, std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#')
      continue;
    const auto tab = line.find('\t');
    rows[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return rows;
}

}

TEST(Init, Examples)
{
  CostParams p;
  EXPECT_EQ(eval_init(p), Cost(0));
  p.c_k = Cost(1);
  p.c_n = Cost(1);
  EXPECT_EQ(eval_init(p), Cost(2));
  CostParams tj;
  tj.b_640 = Cost(1);
  tj.c_k = Cost(3) * tj.b_640;
  EXPECT_EQ(eval_init(tj), Cost(3));
}

TEST(Process, Examples)
{
  CostParams p;
  auto r = eval_process(0, 0, Cost(12), p);
  EXPECT_EQ(r.ad, Cost(0));
  EXPECT_EQ(r.msg, Cost(0));
  r = eval_process(2, 3, Cost(12), p);
  EXPECT_EQ(r.ad, Cost(24));
  EXPECT_EQ(r.msg, Cost(36));
  p.c_A = Cost(2);
  p.c_M = Cost(5);
  r = eval_process(1, 1, Cost(10), p);
  EXPECT_EQ(r.ad, Cost(12));
  EXPECT_EQ(r.msg, Cost(15));
}

TEST(Finalize, Examples)
{
  CostParams p;
  EXPECT_EQ(eval_finalize(p), Cost(0));
  p.c_f = Cost(7);
  EXPECT_EQ(eval_finalize(p), Cost(7));
  p.b = Cost(12);
  p.c_f = Cost(2) * p.b;
  EXPECT_EQ(eval_finalize(p), Cost(24));
}

TEST(Total, Examples)
{
  CostParams p;
  EXPECT_EQ(eval_total(0, 0, Cost(0), p), CostBreakdown{});
  p.c_k = p.c_n = Cost(1);
  p.c_f = Cost(4);
  const auto t = eval_total(2, 3, Cost(12), p);
  EXPECT_EQ(t.total, Cost(66));
  EXPECT_EQ(t.init, Cost(2));
  EXPECT_EQ(t.finalize, Cost(4));

  CostParams q;
  q.c_A = Cost(9);
  const auto a0 = eval_total(0, 5, Cost(3), q);
  EXPECT_EQ(a0.process_ad, Cost(0));
  q.c_A = Cost(0);
  EXPECT_EQ(eval_total(0, 5, Cost(3), q).total, a0.total);
}

TEST(Total, DecompositionOnRandomRationals)
{
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int64_t> small(0, 50);
  std::uniform_int_distribution<int64_t> den(1, 9);
  auto rnd = [&] { return Cost(small(rng), den(rng)); };
  for (int i = 0; i < 500; i++) {
    CostParams p;
    p.c_k = rnd();
    p.c_n = rnd();
    p.c_A = rnd();
    p.c_M = rnd();
    p.c_f = rnd();
    const auto t = eval_total(uint64_t(small(rng)), uint64_t(small(rng)), rnd(), p);
    EXPECT_EQ(t.total, t.init + t.process_ad + t.process_msg + t.finalize);
  }
}

TEST(CostParams, Validation)
{
  CostParams p;
  EXPECT_NO_THROW(validate(p));
  p.r = Cost(0);
  EXPECT_THROW(validate(p), std::invalid_argument);
  CostParams q;
  q.c_f = Cost(-1);
  EXPECT_THROW(validate(q), std::invalid_argument);
}

TEST(CeilDiv, Rational)
{
  EXPECT_EQ(ceil_div(Cost(16), Cost(8)), Cost(2));
  EXPECT_EQ(ceil_div(Cost(17), Cost(8)), Cost(3));
  EXPECT_EQ(ceil_div(Cost(0), Cost(8)), Cost(0));
  EXPECT_EQ(ceil_div(Cost(1, 2), Cost(1)), Cost(1));
}

TEST(Expr, Render)
{
  using namespace expr;
  EXPECT_EQ(render_expr(sum({ param("blocks_A", "ℓ_A"), param("blocks_M", "ℓ_M") })), "ℓ_A + ℓ_M");
  EXPECT_EQ(render_expr(product({ constant(Cost(2)), ceil_div(param("len_A", "|A|"), param("r")), param("b") })),
            "2·⌈|A|/r⌉·b");
  EXPECT_EQ(render_expr(constant(Cost(0))), "0");
}

TEST(Expr, Eval)
{
  EXPECT_EQ(eval_expr(expr::constant(Cost(5)), {}), Cost(5));
  EXPECT_THROW(eval_expr(expr::param("b"), {}), UnboundParameter);

  const AlgorithmId sp = primary(Family::Sparkle);
  CostParams p;
  p.r = Cost(32);
  p.d = Cost(32);
  EXPECT_EQ(eval_expr(expr_for(sp), bindings_for(sp, 32, 32, p)), Cost(8));

  const AlgorithmId tj = primary(Family::TinyJambu);
  // Row lengths are in bits: 4 bytes = 32 bits.
  EXPECT_EQ(eval_expr(expr_for(tj), bindings_for(tj, 4, 4, CostParams{})), Cost(14));
}

TEST(Expr, ZeroDenominator)
{
  const auto e = expr::ceil_div(expr::param("len_A", "|A|"), expr::param("r"));
  EXPECT_THROW(eval_expr(e, { { "len_A", Cost(3) }, { "r", Cost(0) } }), std::domain_error);
}

TEST(Expr, ParseRoundTripsEveryRow)
{
  for (const auto& alg : primary_algorithms()) {
    const auto e = expr_for(alg);
    const auto text = render_expr(e);
    const auto back = parse_expr(text);
    EXPECT_EQ(render_expr(back), text);
    // Same value under the same bindings.
    const auto b = bindings_for(alg, 40, 72, default_params(alg));
    EXPECT_EQ(eval_expr(back, b), eval_expr(e, b)) << text;
  }
  EXPECT_THROW(parse_expr("ℓ_A + "), ExprParseError);
  EXPECT_THROW(parse_expr("zz"), ExprParseError);
  EXPECT_THROW(parse_expr("⌈|A|/r"), ExprParseError);
}

TEST(Registry, MatchesGolden)
{
  const auto rows = load_golden();
  ASSERT_EQ(rows.size(), 10u);
  for (const auto& alg : primary_algorithms()) {
    const auto key = family_key(alg.family);
    ASSERT_TRUE(rows.count(key)) << key;
    EXPECT_EQ(render_expr(expr_for(alg)), rows.at(key)) << key;
  }
}

TEST(Registry, Examples)
{
  EXPECT_EQ(render_expr(expr_for(Family::GiftCofb)), "ℓ_A + ℓ_M");
  EXPECT_EQ(render_expr(expr_for(Family::Grain128Aead)), "|M| + |AD|");
  const auto sp = expr_for(Family::Sparkle);
  EXPECT_EQ(sp.kind, CostExpr::Kind::Sum);
  EXPECT_EQ(sp.children.size(), 4u);
}

TEST(Registry, Json)
{
  const auto j = registry_json();
  ASSERT_EQ(j.size(), 10u);
  for (const auto& row : j) {
    EXPECT_TRUE(row.contains("expression_text"));
    EXPECT_FALSE(row["parameters"].empty());
  }
  const auto tj = registry_entry_json(primary(Family::TinyJambu));
  bool saw_bits = false;
  for (const auto& p : tj["parameters"])
    if (p["symbol"] == "|A|")
      saw_bits = p["meaning"].get<std::string>().find("bits") != std::string::npos;
  EXPECT_TRUE(saw_bits);
}

TEST(Algorithm, Parse)
{
  EXPECT_EQ(parse_algorithm("gift-cofb").family, Family::GiftCofb);
  EXPECT_EQ(parse_algorithm("ascon-128a").variant, Variant::Ascon128a);
  EXPECT_EQ(parse_algorithm("Dumbo").variant, Variant::Dumbo);
  EXPECT_EQ(parse_algorithm("ASCON").variant, Variant::Ascon128);
  try {
    parse_algorithm("nope");
    FAIL();
  } catch (const UnknownAlgorithm& e) {
    EXPECT_NE(std::string(e.what()).find("xoodyak"), std::string::npos);
  }
  EXPECT_EQ(primary_algorithms().size(), 10u);
}
