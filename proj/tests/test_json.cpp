#include <gtest/gtest.h>

#include "mouldkit/json_io.hpp"
#include "support.hpp"

using namespace mk;

TEST(Json, PolyRoundTripRandomized) {
  proptest::Gen g(proptest::seed_from_env() + 60);
  for (int t = 0; t < 20; ++t) {
    int r = g.uniform(0, 4);
    MultiPoly p = g.poly(r, 0, 3);
    Json j = to_json(p);
    EXPECT_EQ(poly_from_json(Json::parse(j.dump()), r), p);
  }
  EXPECT_EQ(poly_from_json(Json("u1^2-1/2*u2"), 2), MultiPoly::parse("u1^2-1/2*u2", 2));
  EXPECT_THROW(poly_from_json(Json(3), 2), JsonFormatError);
}

TEST(Json, FractionRoundTrip) {
  FormalFraction f = FormalFraction::with_factors(MultiPoly::parse("u1-3*u2", 2),
                                                  {MultiPoly::parse("u1", 2), MultiPoly::parse("u1+u2", 2)});
  FormalFraction back = fraction_from_json(Json::parse(to_json(f).dump()), 2);
  EXPECT_TRUE(back.equals(f));
}

TEST(Json, MouldRoundTrip) {
  proptest::Gen g(proptest::seed_from_env() + 61);
  PolyMould m = g.ari_mould(4, 4, 2);
  EXPECT_EQ(poly_mould_from_json(Json::parse(to_json(m).dump())), m);
  RatMould q = dar_inv(m);
  EXPECT_EQ(rat_mould_from_json(Json::parse(to_json(q).dump())), q);
  Json text = {{"cap", 2}, {"values", {{"2", "u1-u2"}}}};
  PolyMould t = poly_mould_from_json(text);
  EXPECT_EQ(t[2], MultiPoly::parse("u1-u2", 2));
  EXPECT_THROW(poly_mould_from_json(Json{{"values", 1}}), JsonFormatError);
}

TEST(Json, NCPolyAndCPoly) {
  NCPoly p = NCPoly::parse("ab-ba+1/3*aab", 5);
  EXPECT_EQ(ncpoly_from_json(Json::parse(to_json(p).dump())), p);
  CPoly c = CPoly::parse("c2*c1-1/2*c3");
  EXPECT_EQ(cpoly_from_json(Json::parse(to_json(c).dump())), c);
  EXPECT_EQ(to_json(c)["text"], c.to_string());
}

TEST(Json, DerivationRoundTrip) {
  Derivation D = bracket_der(epsilon(0, 7), epsilon(4, 7));
  EXPECT_EQ(derivation_from_json(Json::parse(to_json(D).dump())), D);
}

TEST(Json, QSeriesSkipsZeros) {
  QSeriesL s = QSeriesL::monomial(4, 1, 2, 1, Rational(-3, 7));
  Json j = to_json(s);
  EXPECT_EQ(j["N"], 4);
  ASSERT_EQ(j["terms"].size(), 1u);
  EXPECT_EQ(j["terms"][0]["num"], "-3");
  EXPECT_EQ(j["terms"][0]["den"], "7");
}
