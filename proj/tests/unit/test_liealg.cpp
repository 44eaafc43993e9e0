#include <gtest/gtest.h>

#include "slodowy/errors.hpp"
#include "slodowy/liealg/algebra.hpp"
#include "slodowy/liealg/slice.hpp"
#include "slodowy/liealg/triple.hpp"

using namespace slodowy;
using namespace slodowy::liealg;
using classify::Family;
using classify::Partition;

namespace {

// Centralizer dimension of a nilpotent of Jordan type d, from the transpose partition.
int centralizer_dim(Kind k, const Partition& d) {
  std::vector<int> t;
  for (int p : d.parts)
    for (int i = 0; i < p; ++i) {
      if (static_cast<int>(t.size()) <= i) t.push_back(0);
      ++t[i];
    }
  int sq = 0;
  for (int c : t) sq += c * c;
  int odd = 0;
  for (int p : d.parts) odd += p % 2;
  switch (k) {
    case Kind::sl: return sq - 1;
    case Kind::sp: return (sq + odd) / 2;
    case Kind::so: return (sq - odd) / 2;
  }
  return -1;
}

}  // namespace

TEST(Algebra, Dimensions) {
  EXPECT_EQ(make_algebra(Kind::sl, 2).dim(), 8u);
  EXPECT_EQ(make_algebra(Kind::sp, 3).dim(), 21u);
  EXPECT_EQ(make_algebra(Kind::so, 7).dim(), 21u);
  EXPECT_EQ(make_algebra(Kind::so, 8).dim(), 28u);
}

TEST(Algebra, BracketClosesAndCoordsRoundTrip) {
  auto g = make_algebra(Kind::sp, 2);
  for (const auto& a : g.basis)
    for (const auto& b : g.basis) {
      auto c = bracket(g, a, b);
      ASSERT_TRUE(g.contains(c));
      ASSERT_EQ(g.element(g.coords(c)), c);
    }
}

TEST(Algebra, NonMemberRejected) {
  auto g = make_algebra(Kind::sp, 2);
  EXPECT_THROW(g.coords(ScalarMatrix::identity(4)), MembershipError);
}

TEST(Algebra, JordanTypeRequiresNilpotent) {
  EXPECT_THROW(jordan_type(ScalarMatrix::identity(2)), NotNilpotentError);
}

TEST(Triple, IrreducibleBlock) {
  auto t = irreducible_block(4);
  EXPECT_EQ(commutator(t.x, t.y), t.h);
  EXPECT_EQ(commutator(t.h, t.x), t.x * Scalar(2));
  EXPECT_EQ(jordan_type(t.x).to_string(), "[4]");
}

TEST(TripleProperty, JacobsonMorozovForAllOrbits) {
  struct Case {
    Kind k;
    Family f;
    int rank;
  };
  for (Case c : {Case{Kind::sl, Family::A, 3}, Case{Kind::sp, Family::C, 2}, Case{Kind::sp, Family::C, 3},
                 Case{Kind::sp, Family::C, 4}, Case{Kind::so, Family::B, 2}, Case{Kind::so, Family::B, 3},
                 Case{Kind::so, Family::D, 4}}) {
    for (const auto& d : classify::valid_partitions(c.f, c.rank)) {
      auto jm = jm_triple(c.k, d);
      ASSERT_NO_THROW(check_triple(jm.algebra, jm.triple)) << d.to_string();
      ASSERT_EQ(jordan_type(jm.triple.x), d);
      auto chart = slodowy_slice(jm.algebra, jm.triple);
      ASSERT_EQ(static_cast<int>(chart.dim()), centralizer_dim(c.k, d)) << d.to_string();
      ASSERT_EQ(orbit_dim(jm.algebra, jm.triple.x) + chart.dim(), jm.algebra.dim());
      for (int w : chart.coord_weights) ASSERT_GE(w, 2);
    }
  }
}

TEST(Triple, BrokenTripleReported) {
  auto jm = jm_triple(Kind::sp, classify::parse_partition("2,2"));
  auto t = jm.triple;
  t.y = t.y * Scalar(2);
  EXPECT_THROW(check_triple(jm.algebra, t), StructureError);
}

TEST(Slice, SuppliedBasisMustSpanKernel) {
  auto jm = jm_triple(Kind::sp, classify::parse_partition("2,2"));
  auto chart = slodowy_slice(jm.algebra, jm.triple);
  auto basis = chart.kernel_basis;
  basis.pop_back();
  auto names = chart.coord_names;
  names.pop_back();
  EXPECT_ANY_THROW(slodowy_slice_with_basis(jm.algebra, jm.triple, basis, names));
}
