#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "slodowy/f4/f4.hpp"

using namespace slodowy::f4;

TEST(F4Roots, CountsAndLengths) {
  auto rs = f4_roots();
  EXPECT_EQ(rs.roots.size(), 48u);
  EXPECT_EQ(rs.long_count(), 24u);
  EXPECT_EQ(rs.short_count(), 24u);
  EXPECT_EQ(rs.positive_count(), 24u);
}

TEST(F4Roots, HighestRoot) { EXPECT_EQ(f4_roots().highest_root(), (SimpleCoords{2, 3, 4, 2})); }

TEST(F4Roots, SimpleRootsAreUnitVectors) {
  auto rs = f4_roots();
  for (int k = 0; k < 4; ++k) {
    SimpleCoords e{};
    e[k] = 1;
    auto it = std::find(rs.euclidean.begin(), rs.euclidean.end(), rs.simple_roots[k]);
    ASSERT_NE(it, rs.euclidean.end());
    EXPECT_EQ(rs.roots[it - rs.euclidean.begin()], e);
  }
}

TEST(F4Roots, AxiomsOfARootSystem) {
  auto rs = f4_roots();
  std::set<Doubled> all(rs.euclidean.begin(), rs.euclidean.end());
  for (const auto& a : rs.euclidean) {
    Doubled neg;
    for (int i = 0; i < 4; ++i) neg[i] = -a[i];
    ASSERT_TRUE(all.count(neg));
    for (const auto& b : rs.euclidean) {
      ASSERT_TRUE(all.count(reflect(b, a)));
      int c = coroot_pairing(b, a);
      ASSERT_TRUE(c >= -3 && c <= 3);
    }
  }
}

TEST(F4Roots, CartanMatrixShape) {
  // Double edge between alpha2 and alpha3, with alpha3 short.
  auto rs = f4_roots();
  const auto& s = rs.simple_roots;
  EXPECT_EQ(coroot_pairing(s[1], s[2]), -2);
  EXPECT_EQ(coroot_pairing(s[2], s[1]), -1);
  EXPECT_EQ(coroot_pairing(s[0], s[1]), -1);
  EXPECT_EQ(coroot_pairing(s[3], s[2]), -1);
  EXPECT_EQ(coroot_pairing(s[0], s[2]), 0);
}

TEST(F4Grading, Dimensions) {
  auto g = f4_grading();
  EXPECT_EQ(g.dims[2], 8);
  EXPECT_EQ(g.dims[0], 8);
  int total = 0;
  for (const auto& [k, d] : g.dims) {
    total += d;
    EXPECT_EQ(g.dims.at(-k), d);
  }
  EXPECT_EQ(total, 52);
}

TEST(F4Grading, GradeZeroRoots) {
  auto zero = f4_grading().roots_of_grade(0);
  std::set<SimpleCoords> got(zero.begin(), zero.end());
  std::set<SimpleCoords> want = {{1, 0, 0, 0}, {-1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, -1, 0}};
  EXPECT_EQ(got, want);
}

TEST(F4Grading, GradeTwoRoots) {
  auto two = f4_grading().roots_of_grade(2);
  std::set<SimpleCoords> got(two.begin(), two.end());
  std::set<SimpleCoords> want = {{0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 0}, {0, 1, 1, 0},
                                 {0, 1, 2, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {1, 1, 2, 0}};
  EXPECT_EQ(got, want);
}

TEST(F4Grading, AdditiveOnRoots) {
  auto rs = f4_roots();
  auto g = f4_grading();
  for (const auto& a : rs.roots)
    for (const auto& b : rs.roots) {
      SimpleCoords s;
      for (int i = 0; i < 4; ++i) s[i] = a[i] + b[i];
      if (rs.index_of(s) >= 0) ASSERT_EQ(g.grade_of_root.at(s), g.grade_of_root.at(a) + g.grade_of_root.at(b));
    }
}

TEST(F4Module, BiweightsMatchRootSpaces) {
  EXPECT_EQ(grade2_module().dim(), 8u);
  EXPECT_EQ(grade2_biweights(), module_biweights());
}

TEST(F4Module, RaisingOperatorsCommuteAndRaise) {
  auto m = grade2_module();
  EXPECT_EQ(m.e1 * m.e3, m.e3 * m.e1);
  for (std::size_t j = 0; j < m.dim(); ++j)
    for (std::size_t i = 0; i < m.dim(); ++i) {
      if (!m.e1(i, j).is_zero()) EXPECT_EQ(m.biweights[i].first, m.biweights[j].first + 2);
      if (!m.e3(i, j).is_zero()) EXPECT_EQ(m.biweights[i].second, m.biweights[j].second + 2);
    }
}

TEST(F4Module, TwoInvariantHyperplanes) {
  auto hp = f4_invariant_hyperplanes();
  ASSERT_EQ(hp.size(), 2u);
  EXPECT_EQ(hp[0].bidegree, std::make_pair(0, 1));
  EXPECT_EQ(hp[1].bidegree, std::make_pair(1, 2));
  EXPECT_TRUE(hp[0].invariant);
  EXPECT_TRUE(hp[1].invariant);
}

TEST(F4Betti, SubsubregularFibre) {
  auto b = f4_betti_subsubregular();
  EXPECT_EQ(b.base, 2);
  EXPECT_EQ(b.component_counts, (std::vector<int>{1, 1}));
  EXPECT_EQ(b.b2, 4);
}
