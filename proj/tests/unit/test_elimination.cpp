#include <gtest/gtest.h>

#include "slodowy/errors.hpp"
#include "slodowy/exact/elimination.hpp"

using namespace slodowy;
using exact::MPoly;

namespace {
const exact::VarList kVars = {"s", "t", "x", "y"};
MPoly P(const std::string& s) { return MPoly::parse(s, kVars); }
}  // namespace

TEST(Elimination, TriangularBackSubstitution) {
  auto r = exact::eliminate_triangular({P("2*s - x"), P("t + s*y - x^2"), P("s*t - x")}, {"s", "t"});
  ASSERT_EQ(r.substitutions.size(), 2u);
  EXPECT_EQ(r.as_map().at("s"), P("1/2*x"));
  EXPECT_EQ(r.as_map().at("t"), P("x^2 - 1/2*x*y"));
  ASSERT_EQ(r.residuals.size(), 1u);
  EXPECT_EQ(r.residuals[0], P("1/2*x^3 - 1/4*x^2*y - x"));
}

TEST(Elimination, NonConstantLeadingCoefficientRejected) {
  EXPECT_ANY_THROW(exact::eliminate_triangular({P("x*s - 1")}, {"s"}));
}

TEST(Elimination, MembershipCertificateReexpands) {
  exact::Weights w{{"s", 1}, {"t", 1}, {"x", 1}, {"y", 1}};
  std::vector<MPoly> gens = {P("x^2 - y"), P("x*y - s")};
  MPoly g = P("x^3 - x*y") * P("t") + P("x*y - s") * P("x + y");
  auto cof = exact::ideal_membership_bounded(g, gens, w, 2);
  ASSERT_TRUE(cof.has_value());
  EXPECT_EQ((*cof)[0] * gens[0] + (*cof)[1] * gens[1], g);
}

TEST(Elimination, NonMemberHasNoCertificate) {
  exact::Weights w{{"s", 1}, {"t", 1}, {"x", 1}, {"y", 1}};
  EXPECT_FALSE(exact::ideal_membership_bounded(P("x"), {P("x^2"), P("y")}, w, 4).has_value());
}

TEST(Elimination, BoundTooSmallFindsNothing) {
  exact::Weights w{{"s", 1}, {"t", 1}, {"x", 1}, {"y", 1}};
  MPoly g = P("x^4*y");
  EXPECT_FALSE(exact::ideal_membership_bounded(g, {P("y")}, w, 3).has_value());
  EXPECT_TRUE(exact::ideal_membership_bounded(g, {P("y")}, w, 4).has_value());
}

TEST(Elimination, MonomialsOfWeight) {
  exact::VarList v = {"a", "p"};
  exact::Weights w{{"a", 2}, {"p", 3}};
  EXPECT_EQ(exact::monomials_of_weight(v, w, 6).size(), 2u);  // a^3, p^2
  EXPECT_EQ(exact::monomials_of_weight(v, w, 1).size(), 0u);
}
