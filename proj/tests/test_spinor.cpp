#include <gtest/gtest.h>

#include "hyclif/random.hpp"
#include "hyclif/text.hpp"
#include "hyclif/spinor.hpp"

using namespace hyclif;

namespace {

TEST(Ideal, ThetaStarBasics) {
  const auto ctx = AlgebraContext::make(2);
  EXPECT_EQ(theta_star(ctx), wedge(Multivecfor::t(ctx, 1), Multivecfor::t(ctx, 2)));
  EXPECT_TRUE(gp(theta_star(ctx), theta_star(ctx)).is_zero());
  EXPECT_EQ(wedge(e_star(ctx), theta_star(ctx)), orientation(ctx));
}

TEST(Ideal, SpanAtN1) {
  const auto ctx = AlgebraContext::make(1);
  const auto e1 = Multivecfor::e(ctx, 1), t1 = Multivecfor::t(ctx, 1);
  const IdealBasis ideal = ideal_span(t1);
  EXPECT_EQ(ideal.dim(), 2u);
  EXPECT_TRUE(ideal.contains(t1));
  EXPECT_TRUE(ideal.contains(one(ctx) + wedge(e1, t1)));
  EXPECT_FALSE(ideal.contains(e1));
  EXPECT_EQ(gp(wedge(e1, t1), t1), -t1);
  EXPECT_EQ(ideal_span(one(ctx)).dim(), 4u);
  EXPECT_THROW(ideal_span(Multivecfor(ctx)), Error);
}

TEST(Ideal, DimensionAndMinimality) {
  for (int n = 1; n <= 3; ++n) {
    const auto ctx = AlgebraContext::make(n);
    EXPECT_EQ(ideal_span(theta_star(ctx)).dim(), std::size_t{1} << n);
    EXPECT_TRUE(minimality_check(theta_star(ctx)));
    EXPECT_FALSE(minimality_check(one(ctx)));
  }
  EXPECT_THROW(minimality_check(theta_star(AlgebraContext::make(4))), Error);
}

TEST(Ideal, EmbedExtractRoundtrip) {
  Rng rng(4);
  const auto ctx = AlgebraContext::make(3);
  for (int i = 0; i < 20; ++i) {
    const auto u = random_supported(rng, ctx, ctx->e_mask());
    ASSERT_EQ(ideal_extract(ideal_embed(u)), u);
  }
  EXPECT_THROW(ideal_extract(Multivecfor::e(ctx, 1)), Error);
  EXPECT_THROW(ideal_embed(Multivecfor::t(ctx, 1)), Error);
}

TEST(Ideal, ModuleActionFormula) {
  Rng rng(6);
  const auto ctx = AlgebraContext::make(2);
  for (int i = 0; i < 30; ++i) {
    const Vecfor x = random_vecfor(rng, 2);
    const auto u = random_supported(rng, ctx, ctx->e_mask());
    const auto xv = Vecfor(x.vec(), Vector(2)).to_multivecfor(ctx);
    const auto xf = Vecfor(Vector(2), x.form()).to_multivecfor(ctx);
    ASSERT_EQ(ideal_module_action(x, u), wedge(xv, u) + Scalar(2) * lcontract(xf, u));
  }
}

TEST(Spinor, ComposeExamples) {
  const auto ctx1 = AlgebraContext::make(1);
  SpinorRep s = SpinorRep::zero(1);
  s.grade[0][0] = 2;
  s.grade[1][0] = 3;
  EXPECT_EQ(spinor_compose(ctx1, s), Multivecfor::scalar(ctx1, 2) + Scalar(3) * Multivecfor::t(ctx1, 1));
  EXPECT_TRUE(spinor_compose(ctx1, SpinorRep::zero(1)).is_zero());

  const auto ctx2 = AlgebraContext::make(2);
  SpinorRep f = SpinorRep::zero(2);
  f.grade[2][0] = 1;  // f₁₂ = 1, f₂₁ = −1 implied
  EXPECT_EQ(spinor_compose(ctx2, f), theta_star(ctx2));
}

TEST(Spinor, DecomposeRejectsMixedSupport) {
  const auto ctx = AlgebraContext::make(2);
  EXPECT_THROW(spinor_decompose(Multivecfor::e(ctx, 1)), Error);
}

TEST(Spinor, JsonKeys) {
  const auto ctx = AlgebraContext::make(4);
  Rng rng(10);
  const auto u = random_supported(rng, ctx, ctx->t_mask());
  const SpinorRep s = spinor_decompose(u);
  const Json j = to_json(s);
  for (const char* key : {"s", "v", "f", "g3", "p"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["p"].is_object());
  EXPECT_EQ(j["g3"].size(), 4u);
  EXPECT_EQ(spinor_from_json(4, j), s);
  EXPECT_EQ(spinor_compose(ctx, s), u);
  EXPECT_THROW(spinor_from_json(2, Json{{"q", 1}}), Error);
}

TEST(Spinor, TopGradeAtN2IsAList) {
  SpinorRep s = SpinorRep::zero(2);
  s.grade[2][0] = 5;
  const Json j = to_json(s);
  EXPECT_TRUE(j["f"].is_array());
  EXPECT_FALSE(j.contains("p"));
}

}  // namespace
