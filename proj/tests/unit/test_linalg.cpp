#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "slodowy/errors.hpp"
#include "slodowy/exact/linalg.hpp"

using namespace slodowy;
using exact::MPoly;
using exact::PolyMatrix;
using exact::Scalar;
using exact::ScalarMatrix;

TEST(Linalg, DeterminantMatchesCofactorExpansion) {
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int k = 0; k < 20; ++k) {
      auto m = oracle::random_matrix(n, n, 4, rng);
      ASSERT_EQ(exact::determinant(m), oracle::cofactor_det(m));
    }
}

TEST(Linalg, CharpolyMatchesCofactorDeterminant) {
  std::mt19937_64 rng(2);
  MPoly lambda = MPoly::variable("lambda");
  for (std::size_t n = 1; n <= 4; ++n)
    for (int k = 0; k < 10; ++k) {
      auto m = oracle::random_matrix(n, n, 5, rng);
      PolyMatrix t = PolyMatrix::identity(n) * lambda - exact::to_poly(m);
      ASSERT_EQ(exact::charpoly(m), oracle::cofactor_det(t));
    }
}

TEST(Linalg, SymbolicCharpolyMatchesCofactorDeterminant) {
  PolyMatrix m(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = MPoly::variable("m" + std::to_string(i) + std::to_string(j));
  m = exact::unify_env(m);
  MPoly lambda = MPoly::variable("lambda");
  EXPECT_EQ(exact::charpoly(m), oracle::cofactor_det(PolyMatrix(PolyMatrix::identity(3) * lambda - m)));
}

TEST(Linalg, PfaffianSquaredIsDeterminant) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 2; n <= 8; n += 2)
    for (int k = 0; k < 10; ++k) {
      auto m = oracle::random_skew(n, 3, rng);
      Scalar pf = exact::pfaffian(m);
      ASSERT_EQ(pf * pf, oracle::cofactor_det(m));
    }
}

TEST(Linalg, PfaffianOfStandardBlock) {
  auto m = oracle::from_rows({{0, 1}, {-1, 0}});
  EXPECT_EQ(exact::pfaffian(m), Scalar(1));
}

TEST(Linalg, PfaffianRejectsNonSkew) {
  EXPECT_THROW(exact::pfaffian(oracle::from_rows({{0, 1}, {1, 0}})), StructureError);
  EXPECT_THROW(exact::pfaffian(ScalarMatrix(3, 3)), StructureError);
}

TEST(Linalg, KernelAndRank) {
  auto m = oracle::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(exact::rank(m), 2u);
  auto ker = exact::kernel_basis(m);
  ASSERT_EQ(ker.size(), 1u);
  for (std::size_t i = 0; i < 3; ++i) {
    Scalar s(0);
    for (std::size_t j = 0; j < 3; ++j) s += m(i, j) * ker[0][j];
    EXPECT_TRUE(s.is_zero());
  }
}

TEST(Linalg, InverseOverQSqrt2) {
  auto m = oracle::from_rows({{Scalar::sqrt2(), 1}, {1, Scalar::sqrt2()}});
  auto inv = exact::inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, ScalarMatrix::identity(2));
  EXPECT_FALSE(exact::inverse(oracle::from_rows({{1, 2}, {2, 4}})).has_value());
}

TEST(Linalg, SolveLinearReportsInconsistency) {
  auto m = oracle::from_rows({{1, 1}, {1, 1}});
  EXPECT_FALSE(exact::solve_linear(m, {Scalar(1), Scalar(2)}).particular.has_value());
  auto sol = exact::solve_linear(m, {Scalar(2), Scalar(2)});
  ASSERT_TRUE(sol.particular.has_value());
  EXPECT_EQ(sol.kernel.size(), 1u);
}
