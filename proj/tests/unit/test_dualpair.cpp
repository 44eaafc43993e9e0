#include <gtest/gtest.h>

#include "oracles.hpp"
#include "slodowy/dualpair/dualpair.hpp"
#include "slodowy/errors.hpp"
#include "slodowy/liealg/algebra.hpp"

using namespace slodowy;
using namespace slodowy::dualpair;
using exact::Scalar;

namespace {

Scalar form(const ScalarMatrix& G, const ScalarMatrix& a, std::size_t ca, const ScalarMatrix& b, std::size_t cb) {
  Scalar s(0);
  for (std::size_t i = 0; i < G.rows(); ++i)
    for (std::size_t j = 0; j < G.cols(); ++j) s += a(i, ca) * G(i, j) * b(j, cb);
  return s;
}

std::vector<std::size_t> power_ranks(const ScalarMatrix& m, std::size_t count) {
  std::vector<std::size_t> r = {m.rows()};
  ScalarMatrix p = ScalarMatrix::identity(m.rows());
  for (std::size_t k = 1; k <= count; ++k) {
    p = p * m;
    r.push_back(exact::rank(p));
  }
  return r;
}

}  // namespace

TEST(DualPair, AdjointOfZero) {
  auto cfg = make_config(3);
  EXPECT_TRUE(adjoint(cfg, ScalarMatrix(4, 6)).is_zero());
}

TEST(DualPair, AdjointDefiningIdentity) {
  auto cfg = make_config(3);
  std::mt19937_64 rng(5);
  auto X = oracle::random_matrix(4, 6, 3, rng);
  auto Xs = adjoint(cfg, X);
  auto I6 = ScalarMatrix::identity(6), I4 = ScalarMatrix::identity(4);
  auto XI = X * I6;
  auto XsI = Xs * I4;
  for (std::size_t v = 0; v < 6; ++v)
    for (std::size_t u = 0; u < 4; ++u) ASSERT_EQ(form(cfg.G_U, XI, v, I4, u), form(cfg.G_V, I6, v, XsI, u));
}

TEST(DualPair, DoubleAdjointIsMinusIdentity) {
  auto cfg = make_config(4);
  std::mt19937_64 rng(6);
  for (int k = 0; k < 10; ++k) {
    auto X = oracle::random_matrix(6, 8, 3, rng);
    ASSERT_EQ(adjoint_of_adjoint(cfg, adjoint(cfg, X)), -X);
  }
}

TEST(DualPair, ShapeMismatch) {
  auto cfg = make_config(3);
  EXPECT_THROW(adjoint(cfg, ScalarMatrix(6, 4)), DimensionError);
  EXPECT_THROW(make_config(liealg::standard_symmetric_form(6), liealg::standard_symmetric_form(4)), StructureError);
}

TEST(DualPair, MapsLandInTheRightAlgebras) {
  auto cfg = make_config(3);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 20; ++k) {
    auto m = kp_maps(cfg, oracle::random_matrix(4, 6, 3, rng));
    ASSERT_TRUE(in_sp_u(cfg, m.pi));
    ASSERT_TRUE(in_so_v(cfg, m.rho));
    ASSERT_LE(exact::rank(m.rho), 4u);
  }
  auto zero = kp_maps(cfg, ScalarMatrix(4, 6));
  EXPECT_TRUE(zero.pi.is_zero() && zero.rho.is_zero());
}

TEST(DualPair, PfaffianVanishesOnImage) {
  std::mt19937_64 rng(9);
  for (int n : {3, 4}) {
    auto cfg = make_config(n);
    EXPECT_TRUE(pfaffian_locus_check(cfg, ScalarMatrix(cfg.dim_u(), cfg.dim_v())));
    for (int k = 0; k < 100; ++k)
      ASSERT_TRUE(pfaffian_locus_check(cfg, oracle::random_matrix(cfg.dim_u(), cfg.dim_v(), 3, rng)));
  }
}

TEST(DualPair, PfaffianNonzeroOffImage) {
  auto cfg = make_config(3);
  std::mt19937_64 rng(10);
  // A generic element of so(V) has full rank, so it is not rho of anything.
  auto s = oracle::random_skew(6, 3, rng);
  while (exact::pfaffian(s).is_zero()) s = oracle::random_skew(6, 3, rng);
  ScalarMatrix z = cfg.G_V_inv * s;  // G_V z = s is skew, so z is in so(V)
  EXPECT_TRUE(in_so_v(cfg, z));
  EXPECT_FALSE(exact::pfaffian(cfg.G_V * z).is_zero());
}

TEST(DualPair, NonzeroSpectraAgree) {
  std::mt19937_64 rng(11);
  for (int n : {3, 4}) {
    auto cfg = make_config(n);
    for (int k = 0; k < 100; ++k) {
      auto m = kp_maps(cfg, oracle::random_matrix(cfg.dim_u(), cfg.dim_v(), 2, rng));
      auto cr = exact::charpoly_coefficients(m.rho), cp = exact::charpoly_coefficients(m.pi);
      for (std::size_t j = 0; j < cp.size(); ++j) ASSERT_EQ(cr[j], cp[j]);
      ASSERT_TRUE(cr[cp.size()].is_zero() && cr[cp.size() + 1].is_zero());
    }
  }
}

TEST(DualPair, RankSequencesInterlace) {
  // r_{k+1}(XX*) <= r_k(X*X) <= r_{k-1}(XX*), on random and on nilpotent samples.
  std::mt19937_64 rng(12);
  auto check = [](const KPConfig& cfg, const ScalarMatrix& X) {
    auto m = kp_maps(cfg, X);
    auto rp = power_ranks(m.pi, cfg.dim_v() + 1), rr = power_ranks(m.rho, cfg.dim_v() + 1);
    for (std::size_t k = 1; k + 1 < rp.size(); ++k) {
      ASSERT_LE(rp[k + 1], rr[k]);
      ASSERT_LE(rr[k], rp[k - 1]);
    }
  };
  for (int n : {3, 4}) {
    auto cfg = make_config(n);
    for (int k = 0; k < 100; ++k) check(cfg, oracle::random_matrix(cfg.dim_u(), cfg.dim_v(), 2, rng));
  }
  for (auto [n, i] : std::vector<std::pair<int, int>>{{3, 3}, {3, 1}, {4, 3}, {4, 1}, {4, 4}})
    check(make_config(n), kp_find_element(n, i).X);
}

TEST(DualPair, SameIndexRankComparisonFailsInGeneral) {
  // A rank one X whose adjoint has non-isotropic image: X*X = 0 while XX* != 0.
  auto cfg = make_config(2);
  ScalarMatrix X(2, 4);
  X(0, 0) = 1;
  X(0, 3) = 1;
  auto m = kp_maps(cfg, X);
  EXPECT_TRUE(m.rho.is_zero());
  EXPECT_FALSE(m.pi.is_zero());
}

TEST(DualPair, Equivariance) {
  std::mt19937_64 rng(13);
  auto cfg = make_config(3);
  for (int k = 0; k < 10; ++k) {
    auto A = random_unipotent(cfg.G_V, rng);
    auto B = random_unipotent(cfg.G_U, rng);
    ASSERT_EQ(A.transpose() * cfg.G_V * A, cfg.G_V);
    ASSERT_EQ(B.transpose() * cfg.G_U * B, cfg.G_U);
    auto X = oracle::random_matrix(4, 6, 2, rng);
    auto Ai = *exact::inverse(A), Bi = *exact::inverse(B);
    auto m = kp_maps(cfg, X);
    auto mt = kp_maps(cfg, B * X * Ai);
    ASSERT_EQ(mt.pi, B * m.pi * Bi);
    ASSERT_EQ(mt.rho, A * m.rho * Ai);
  }
}

TEST(DualPair, JordanTypesOfWitnesses) {
  struct Case {
    int n, i;
    const char *rho, *pi;
  };
  for (Case c : {Case{3, 3, "[3,3]", "[2,2]"}, Case{4, 3, "[5,3]", "[4,2]"}, Case{4, 1, "[7,1]", "[6]"},
                 Case{5, 5, "[5,5]", "[4,4]"}, Case{4, 4, "[4,4]", "[3,3]"}, Case{2, 2, "[2,2]", "[1,1]"}}) {
    auto el = kp_find_element(c.n, c.i);
    EXPECT_EQ(el.rho_type.to_string(), c.rho);
    EXPECT_EQ(el.pi_type.to_string(), c.pi);
    EXPECT_TRUE(el.surjective);
  }
}

TEST(DualPair, WitnessPreconditions) {
  EXPECT_THROW(kp_find_element(4, 2), InputError);
  EXPECT_THROW(kp_find_element(3, 4), InputError);
  EXPECT_THROW(kp_find_element(1, 1), InputError);
}

TEST(DualPair, OmegaIsSymplectic) {
  for (int n = 2; n <= 4; ++n) {
    auto om = omega_matrix(make_config(n));
    EXPECT_EQ(om.transpose(), -om);
    EXPECT_TRUE(exact::inverse(om).has_value());
  }
}

TEST(DualPair, MutualCommutants) {
  for (int n = 2; n <= 4; ++n) {
    auto rep = commutant_check(make_config(n));
    EXPECT_EQ(rep.violations, 0u) << rep.first_violation;
  }
}

TEST(DualPair, BracketAntisymmetric) {
  PoissonStructure ps(make_config(2));
  auto X = ps.symbolic_X();
  auto f = X(0, 0) * X(1, 2), g = X(0, 3) + X(1, 1) * X(1, 1);
  EXPECT_EQ(ps.bracket(f, g), -ps.bracket(g, f));
  EXPECT_TRUE(ps.bracket(f, f).is_zero());
}

TEST(DualPair, MomentIdentityConstant) {
  for (int n = 2; n <= 3; ++n) {
    auto rep = moment_identity_check(make_config(n));
    ASSERT_TRUE(rep.constant.has_value());
    EXPECT_EQ(*rep.constant, Scalar(1));
    EXPECT_EQ(rep.violations, 0u);
  }
}
