#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "slodowy/errors.hpp"
#include "slodowy/exact/json_io.hpp"
#include "slodowy/exact/mpoly.hpp"

using namespace slodowy;
using exact::MPoly;
using exact::Scalar;

namespace {
MPoly P(const std::string& s, const exact::VarList& v = {}) { return MPoly::parse(s, v); }
}  // namespace

TEST(MPoly, ArithmeticAcrossEnvironments) {
  MPoly x = MPoly::variable("x"), y = MPoly::variable("y");
  MPoly s = (x + y) * (x - y);
  EXPECT_EQ(s, P("x^2 - y^2"));
  EXPECT_EQ(pow(x + y, 3), P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  EXPECT_TRUE((s - s).is_zero());
}

TEST(MPoly, CanonicalTextUsesGrevlex) {
  MPoly p = P("y + x^2 + x*y^2 - 1", {"x", "y"});
  EXPECT_EQ(p.to_string(), "x*y^2 + x^2 + y - 1");
  EXPECT_EQ(P("-x + 2/3*x*y", {"x", "y"}).to_string(), "2/3*x*y - x");
}

TEST(MPoly, ParseRejectsDivisionByVariable) { EXPECT_THROW(P("x/y"), InputError); }

TEST(MPoly, ParseRejectsGarbage) {
  EXPECT_THROW(P("x +"), InputError);
  EXPECT_THROW(P("x^-1"), InputError);
}

TEST(MPoly, DerivativeAndCoefficient) {
  MPoly p = P("x^3*y + 2*x*y^2 + 5", {"x", "y"});
  EXPECT_EQ(p.derivative("x"), P("3*x^2*y + 2*y^2", {"x", "y"}));
  EXPECT_EQ(p.coefficient("y", 2), P("2*x", {"x", "y"}));
  EXPECT_EQ(p.total_degree(), 4);
}

TEST(MPoly, SubstitutionIsSimultaneous) {
  MPoly p = P("x*y + x", {"x", "y"});
  MPoly q = p.substitute({{"x", P("y")}, {"y", P("x")}});
  EXPECT_EQ(q, P("x*y + y"));
}

TEST(MPoly, EvaluateWithSqrt2) {
  MPoly p = P("x^2 - 2");
  EXPECT_TRUE(p.evaluate({{"x", Scalar::sqrt2()}}).is_zero());
}

TEST(MPoly, WeightedDegree) {
  exact::Weights w{{"a", 2}, {"p", 3}};
  EXPECT_EQ(P("a^3 + p^2").weighted_degree(w), 6);
  EXPECT_FALSE(P("a + p").weighted_degree(w).has_value());
  EXPECT_EQ(P("a + p").weighted_components(w).size(), 2u);
}

TEST(MPoly, DivisionByMonic) {
  MPoly d = P("t^2 + x", {"t", "x"});
  MPoly q = P("t^3 + x*t + 1", {"t", "x"});
  MPoly p = d * q + P("t - x", {"t", "x"});
  auto r = exact::divide_by_monic(p, d, "t");
  EXPECT_EQ(r.quotient, q);
  EXPECT_EQ(r.remainder, P("t - x", {"t", "x"}));
}

TEST(MPoly, DuplicateVariablesRejected) { EXPECT_ANY_THROW(exact::make_env({"x", "x"})); }

TEST(MPolyProperty, TextRoundTripOnRandomPolynomials) {
  std::mt19937_64 rng(2024);
  const exact::VarList vars = {"a", "b", "x"};
  for (int k = 0; k < 1000; ++k) {
    MPoly p = P(oracle::random_poly_text(vars, rng), vars);
    std::string s1 = p.to_string();
    MPoly q = P(s1, vars);
    ASSERT_EQ(q, p) << s1;
    ASSERT_EQ(q.to_string(), s1);
  }
}

TEST(MPolyProperty, JsonRoundTrip) {
  std::mt19937_64 rng(7);
  const exact::VarList vars = {"u", "v"};
  for (int k = 0; k < 200; ++k) {
    MPoly p = P(oracle::random_poly_text(vars, rng), vars);
    ASSERT_EQ(exact::mpoly_from_json(exact::to_json(p)), p);
  }
}

TEST(MPolyProperty, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(99);
  const exact::VarList vars = {"x", "y"};
  for (int k = 0; k < 100; ++k) {
    MPoly a = P(oracle::random_poly_text(vars, rng), vars), b = P(oracle::random_poly_text(vars, rng), vars),
          c = P(oracle::random_poly_text(vars, rng), vars);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
  }
}
