#include <gtest/gtest.h>

#include "hyclif/endomorphisms.hpp"
#include "hyclif/random.hpp"
#include "hyclif/text.hpp"

using namespace hyclif;

namespace {

TEST(DualMap, Identity) {
  EXPECT_EQ(dual_map(LinMapV::identity(3)), LinMapVDual::identity(3));
  EXPECT_EQ(isotropic_extension(LinMapV::identity(2)), HEndo::identity(4));
}

TEST(DualMap, TransposeLaws) {
  Rng rng(21);
  for (int i = 0; i < 50; ++i) {
    const LinMapV phi(random_matrix(rng, 3, 3)), psi(random_matrix(rng, 3, 3));
    ASSERT_EQ(dual_map(dual_map(phi)), phi);
    ASSERT_EQ(dual_map(phi * psi), dual_map(psi) * dual_map(phi));
    ASSERT_EQ(dual_map(phi).det(), phi.det());
  }
}

TEST(IsotropicExtension, BlockDiagonalAndStable) {
  Matrix m(2, 2);
  m(0, 0) = 1;  // e1 ↦ e1, e2 ↦ 0
  const HEndo ext = isotropic_extension(LinMapV(m));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_TRUE(ext.matrix()(i, 2 + j).is_zero());
      EXPECT_TRUE(ext.matrix()(2 + i, j).is_zero());
    }
  const Subspace s = Subspace::span(Ambient::V, 2, {Vector{1, 0}});
  EXPECT_TRUE(stabilizes(isotropic_I(s), ext.matrix()));
}

TEST(IsotropicExtension, CompositionReversesOnDualBlock) {
  // e1 ↦ e2 and e2 ↦ 0, composed both ways
  Matrix a(2, 2), b(2, 2);
  a(1, 0) = 1;
  b(0, 1) = 1;
  const LinMapV phi(a), psi(b);
  const Matrix lhs = isotropic_extension(phi * psi).matrix();
  const Matrix naive = (isotropic_extension(phi) * isotropic_extension(psi)).matrix();
  EXPECT_NE(lhs, naive);
  const Matrix dual_block = (dual_map(psi) * dual_map(phi)).matrix();
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(lhs(2 + i, 2 + j), dual_block(i, j));
}

TEST(VecforEndo, Examples) {
  const Vecfor x = Vecfor::e(1, 1) + Vecfor::t(1, 1);
  EXPECT_EQ(vecfor_endo(x)(Vector{1}), Vector{1});
  const Vecfor y = Vecfor::e(2, 1) + Vecfor::t(2, 1);
  EXPECT_EQ(vecfor_endo(y)(Vector{0, 1}), (Vector{0, 0}));
  const Vecfor z(Vector{1, 2}, Vector{3, 4});
  EXPECT_EQ(vecfor_endo(z).rank(), 1u);
}

TEST(Projection, SigmaPattern) {
  for (int n = 1; n <= 3; ++n) {
    const auto sig = sigma_basis(n);
    for (int k = 0; k < n; ++k) {
      Vector dp(static_cast<std::size_t>(2 * n)), dr(static_cast<std::size_t>(2 * n), 1);
      dp[static_cast<std::size_t>(k)] = dp[static_cast<std::size_t>(n + k)] = 1;
      dr[static_cast<std::size_t>(k)] = dr[static_cast<std::size_t>(n + k)] = -1;
      EXPECT_EQ(endo_matrix_sigma(projection(sig[static_cast<std::size_t>(k)])), Matrix::diagonal(dp));
      EXPECT_EQ(endo_matrix_sigma(reflection(sig[static_cast<std::size_t>(k)])), Matrix::diagonal(dr));
    }
  }
  EXPECT_EQ(endo_matrix_sigma(projection(sigma_basis(1)[0])), Matrix::identity(2));
  EXPECT_EQ(endo_matrix_sigma(reflection(sigma_basis(1)[0])), Scalar(-1) * Matrix::identity(2));
}

TEST(Projection, NullVecforRejected) {
  try {
    (void)projection(Vecfor::e(1, 1));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::domain);
  }
  EXPECT_THROW((void)reflection(Vecfor::t(2, 2)), Error);
}

TEST(Projection, RandomLaws) {
  Rng rng(31);
  for (int i = 0; i < 50; ++i) {
    const Vecfor x = random_non_null_vecfor(rng, 2);
    const HEndo p = projection(x), r = reflection(x);
    ASSERT_EQ(p * p, p);
    ASSERT_EQ(r * r, HEndo::identity(4));
    ASSERT_TRUE(is_self_dual(p.matrix(), witt_gram(2)));
    ASSERT_TRUE(is_orthogonal(r.matrix(), witt_gram(2)));
  }
}

TEST(Hyperplane, Examples) {
  const HyperplaneRep rep = hyperplane_representation(Vector{1, 0}, 1);
  ASSERT_EQ(rep.s0_basis.size(), 1u);
  EXPECT_EQ(rep.s0_basis[0], (Vector{0, 1}));
  EXPECT_EQ(rep.point, (Vector{1, 0}));
  const HyperplaneRep doubled = hyperplane_representation(Vector{2, 0}, 1);
  EXPECT_EQ(doubled.point, Scalar(Rational(1, 2)) * rep.point);
  EXPECT_THROW(hyperplane_representation(Vector{0, 0}, 1), Error);
}

}  // namespace
