#include <gtest/gtest.h>

#include "hyclif/hyperbolic_space.hpp"
#include "hyclif/random.hpp"
#include "hyclif/text.hpp"

using namespace hyclif;

namespace {

const Scalar h = Scalar::inv_sqrt2();

TEST(Vecfor, Classification) {
  EXPECT_EQ(classify(Vecfor::e(1, 1) + Vecfor::t(1, 1)), (Classification{Causality::positive, true}));
  EXPECT_EQ(classify(Vecfor::e(1, 1)), (Classification{Causality::null, false}));
  EXPECT_EQ(classify(Vecfor::e(1, 1, -1) + Vecfor::t(1, 1)), (Classification{Causality::negative, true}));
  EXPECT_EQ(classify(Vecfor::e(1, 1, 2) + Vecfor::t(1, 1)).causality, Causality::positive);
}

TEST(Vecfor, ConjugateAndBracket) {
  const Vecfor x = Vecfor::e(1, 1) + Vecfor::t(1, 1);
  EXPECT_EQ(conjugate(x), Vecfor::e(1, 1, -1) + Vecfor::t(1, 1));
  EXPECT_EQ(bracket(Vecfor::e(1, 1), Vecfor::t(1, 1)), Scalar(-1));
  Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const Vecfor a = random_vecfor(rng, 3), b = random_vecfor(rng, 3);
    ASSERT_TRUE(bracket(a, a).is_zero());
    ASSERT_TRUE((bracket(a, b) + bracket(b, a)).is_zero());
    ASSERT_TRUE(bilinear(conjugate(a), a).is_zero());
  }
}

TEST(SigmaBasis, ComponentsOfE1) {
  const Vector c = sigma_components(Vecfor::e(1, 1));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], h);
  EXPECT_EQ(c[1], -h);
}

TEST(SigmaBasis, GramIsDiagonal) {
  for (int n = 1; n <= 4; ++n) {
    Vector d(static_cast<std::size_t>(2 * n), 1);
    for (int k = n; k < 2 * n; ++k) d[static_cast<std::size_t>(k)] = -1;
    EXPECT_EQ(gram_matrix(sigma_basis(n)), Matrix::diagonal(d)) << "n = " << n;
  }
}

TEST(SigmaBasis, OrientationAtN1) {
  const auto ctx = AlgebraContext::make(1);
  EXPECT_EQ(orientation_sigma(ctx), wedge(Multivecfor::e(ctx, 1), Multivecfor::t(ctx, 1)));
  for (int n = 1; n <= 4; ++n) {
    const auto c = AlgebraContext::make(n);
    EXPECT_EQ(bilinear(orientation(c), orientation(c)), Scalar(n % 2 ? -1 : 1));
  }
}

TEST(SigmaBasis, OrientationInvariantUnderBasisChange) {
  Rng rng(17);
  for (int n = 1; n <= 3; ++n) {
    const auto ctx = AlgebraContext::make(n);
    for (int i = 0; i < 10; ++i)
      ASSERT_EQ(orientation_from_dual_pair(ctx, random_invertible(rng, static_cast<std::size_t>(n))), orientation(ctx));
  }
}

TEST(SecondOrder, GramEntries) {
  const Matrix g = second_order_gram(1);
  ASSERT_EQ(g.rows(), 4u);
  EXPECT_EQ(g(0, 0), Scalar(1));
  EXPECT_EQ(g(2, 2), Scalar(-1));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) {
        EXPECT_TRUE(g(i, j).is_zero());
      }
}

TEST(RhoB, Examples) {
  const SymmetricForm one(Matrix::identity(1));
  const RhoSplit a = rho_b_split(one, Vecfor::e(1, 1) + Vecfor::t(1, 1));
  EXPECT_EQ(a.plus, Vector{Scalar::sqrt2()});
  EXPECT_EQ(a.minus, Vector{Scalar()});
  EXPECT_EQ(rho_b_pairing(one, a, a), Scalar(2));
  const RhoSplit b = rho_b_split(one, Vecfor::e(1, 1));
  EXPECT_EQ(b.plus, Vector{h});
  EXPECT_EQ(b.minus, Vector{-h});
  EXPECT_TRUE(rho_b_pairing(one, b, b).is_zero());
}

TEST(RhoB, SingularFormRejected) { EXPECT_THROW(SymmetricForm(Matrix(1, 1)), Error); }

TEST(NullSubspace, Examples) {
  const Subspace s = Subspace::span(Ambient::V, 2, {Vector{1, 0}});
  const Subspace sp = null_subspace(s);
  EXPECT_EQ(sp.ambient(), Ambient::V_dual);
  EXPECT_EQ(sp, Subspace::span(Ambient::V_dual, 2, {Vector{0, 1}}));
  EXPECT_EQ(null_subspace(Subspace::whole(Ambient::V, 3)).dim(), 0u);
  EXPECT_EQ(null_subspace(null_subspace(s)), s);
}

TEST(NullSubspace, IsotropicI) {
  const Subspace s = Subspace::span(Ambient::V, 2, {Vector{1, 0}});
  const Subspace i = isotropic_I(s);
  EXPECT_EQ(i.ambient(), Ambient::H_V);
  EXPECT_EQ(i, Subspace::span(Ambient::H_V, 2, {Vector{1, 0, 0, 0}, Vector{0, 0, 0, 1}}));
  EXPECT_TRUE(totally_isotropic(i));
  EXPECT_FALSE(totally_isotropic(Subspace::span(Ambient::H_V, 1, {Vector{1, 1}})));
}

TEST(NullSubspace, MixedAmbientsRejected) {
  const Subspace a = Subspace::whole(Ambient::V, 2);
  const Subspace b = Subspace::whole(Ambient::V_dual, 2);
  EXPECT_THROW(a + b, Error);
}

}  // namespace
