#include <gtest/gtest.h>

#include "mouldkit/mould.hpp"
#include "mouldkit/ncpoly.hpp"
#include "support.hpp"

using namespace mk;

namespace {

MultiPoly P(const char* s, int r) { return MultiPoly::parse(s, r); }

PolyMould depth_only(int cap, int r, const char* s) {
  PolyMould m(cap);
  m.set(r, P(s, r));
  return m;
}

PolyMould f_mould(int n, int cap) {
  NCPoly a = NCPoly::a(n + 2), b = NCPoly::b(n + 2);
  return ma_lie(lie_bracket(ad_pow(b, n, a), a)).truncate(cap);
}

}  // namespace

TEST(Ma, Monomials) {
  EXPECT_EQ(ma(CPoly::parse("c3"))[1], P("u1^2", 1));
  EXPECT_EQ(ma(CPoly::parse("c1*c2"))[2], P("-u2", 2));
  EXPECT_EQ(ma(CPoly::parse("c2*c1"))[2], P("-u1", 2));
  EXPECT_EQ(ma(CPoly::parse("c1"))[1], P("1", 1));
  EXPECT_EQ(ma(CPoly::parse("c2*c3*c1"))[3], P("-u1*u2^2", 3));
}

TEST(Ma, InverseRandomized) {
  proptest::Gen g(proptest::seed_from_env() + 40);
  for (int t = 0; t < 30; ++t) {
    CPoly c;
    for (int k = 0; k < 4; ++k) {
      CPoly::Mono mono(g.uniform(1, 3));
      for (auto& x : mono) x = g.uniform(1, 4);
      c.add_term(mono, g.rational());
    }
    EXPECT_EQ(ma_inverse(ma(c)), c);
  }
}

TEST(Ma, AdAIsMinusSum) {
  NCPoly a = NCPoly::a(7);
  for (const auto& e : lie_basis(6)) {
    if (e.lyndon == "a") continue;
    NCPoly x = e.poly.truncate(7);
    PolyMould lhs = ma_lie(lie_bracket(a, x));
    PolyMould rhs = mul_by_minus_sum(ma_lie(x).truncate(lhs.cap()));
    EXPECT_EQ(lhs, rhs) << e.lyndon;
  }
}

TEST(Mu, UnitAndDepthTwo) {
  proptest::Gen g(proptest::seed_from_env() + 41);
  PolyMould A = g.ari_mould(4, 4, 2);
  EXPECT_EQ(mu(unit_mould(4), A), A);
  EXPECT_EQ(mu(A, unit_mould(4)), A);
  PolyMould x = depth_only(2, 1, "u1"), y = depth_only(2, 1, "u1^2");
  EXPECT_EQ(mu(x, y)[2], P("u1*u2^2", 2));
}

TEST(Lu, AntisymmetricRandomized) {
  proptest::Gen g(proptest::seed_from_env() + 42);
  for (int t = 0; t < 20; ++t) {
    PolyMould A = g.ari_mould(4, 4, 2), B = g.ari_mould(4, 4, 2);
    EXPECT_TRUE(lu(A, A).is_zero());
    EXPECT_EQ(lu(A, B), -lu(B, A));
  }
}

TEST(Push, DepthTwo) {
  PolyMould m = depth_only(2, 2, "u1^2");
  EXPECT_EQ(push(m)[2], P("u2^2", 2));
  EXPECT_EQ(push(push(m))[2], P("u1^2+2*u1*u2+u2^2", 2));
  EXPECT_EQ(push(push(push(m))), m);
}

TEST(Swap, DepthTwo) {
  PolyMould m = depth_only(2, 2, "u1");
  EXPECT_EQ(swap(m)[2], P("u2", 2));
  EXPECT_EQ(swap(depth_only(2, 2, "u2"))[2], P("u1-u2", 2));
  EXPECT_EQ(swap_inverse(swap(m)), m);
  EXPECT_NE(swap(swap(depth_only(2, 2, "u2"))), depth_only(2, 2, "u2"));
}

TEST(Swap, InverseRandomized) {
  proptest::Gen g(proptest::seed_from_env() + 43);
  for (int t = 0; t < 20; ++t) {
    PolyMould A = g.ari_mould(5, 5, 3);
    EXPECT_EQ(swap_inverse(swap(A)), A);
    EXPECT_EQ(swap(swap_inverse(A)), A);
  }
}

TEST(Dar, DeltaAndInverses) {
  proptest::Gen g(proptest::seed_from_env() + 44);
  for (int t = 0; t < 10; ++t) {
    PolyMould A = g.ari_mould(4, 4, 2);
    EXPECT_EQ(to_poly(dar_inv(dar(A))).value(), A);
    auto back = to_poly(delta_inv(delta(A)));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, A);
  }
  EXPECT_EQ(delta(depth_only(2, 2, "1"))[2], P("u1^2*u2+u1*u2^2", 2));
  EXPECT_FALSE(to_poly(dar_inv(depth_only(2, 2, "1"))).has_value());
}

TEST(Alternal, Examples) {
  EXPECT_TRUE(is_alternal(depth_only(2, 2, "u1-u2")));
  EXPECT_FALSE(is_alternal(depth_only(2, 2, "u1")));
  ShuffleFailure f{};
  EXPECT_FALSE(is_alternal(depth_only(3, 3, "u1*u2"), &f));
  EXPECT_EQ(f.depth, 3);
  EXPECT_EQ(f.split, 1);
  EXPECT_TRUE(is_alternal(ma(CPoly::parse("c1*c2-c2*c1"))));
}

TEST(Bialternal, ConstantWitness) {
  BialternalReport rep = bialternality(depth_only(2, 2, "1"));
  EXPECT_FALSE(rep.alternal);
  EXPECT_TRUE(rep.swap_alternal_up_to_constants);
  EXPECT_EQ(rep.kappa[2], Rational(-1));
  EXPECT_FALSE(rep.ok());
}

TEST(Bialternal, DeltaExamples) {
  EXPECT_FALSE(is_delta_bialternal(depth_only(2, 2, "u1^3*u2-u1*u2^3")));
}

TEST(PushInvariant, Examples) {
  EXPECT_TRUE(is_push_invariant(depth_only(2, 2, "u1^2+u1*u2+u2^2")));
  EXPECT_FALSE(is_push_invariant(depth_only(2, 2, "u1^2")));
  EXPECT_FALSE(is_push_invariant(depth_only(1, 1, "u1")));
  EXPECT_TRUE(is_push_invariant(depth_only(1, 1, "u1^2")));
}

TEST(PushInvariant, GeneratorRandomized) {
  proptest::Gen g(proptest::seed_from_env() + 45);
  for (int t = 0; t < 10; ++t) EXPECT_TRUE(is_push_invariant(g.push_invariant(4, 2)));
}

TEST(PushNeutral, Examples) {
  EXPECT_TRUE(is_push_neutral(depth_only(2, 2, "u1")));
  EXPECT_FALSE(is_push_neutral(depth_only(2, 2, "u1^2")));
  EXPECT_TRUE(is_push_neutral(f_mould(2, 4)));
  EXPECT_TRUE(is_push_neutral(f_mould(4, 4)));
  EXPECT_FALSE(is_push_neutral(f_mould(3, 4)));
}

TEST(PushNeutral, DeltaPreservesMinusSumDoesNot) {
  PolyMould f2 = f_mould(2, 4);
  EXPECT_TRUE(is_push_neutral(delta(f2)));
  EXPECT_FALSE(is_push_neutral(mul_by_minus_sum(f2)));
}

TEST(Arit, Unit) {
  proptest::Gen g(proptest::seed_from_env() + 46);
  PolyMould Pm = g.ari_mould(4, 3, 2);
  EXPECT_TRUE(arit(Pm, unit_mould(4)).is_zero());
}

TEST(Arit, DepthTwo) {
  // arit(P)A = A(u1+u2) (P(u1) - P(u2)) for depth-one P, A
  PolyMould Pm = depth_only(2, 1, "u1^2"), Am = depth_only(2, 1, "u1");
  PolyMould r = arit(Pm, Am);
  EXPECT_EQ(r[2], P("u1^3+u1^2*u2-u1*u2^2-u2^3", 2));
  EXPECT_TRUE(r[1].is_zero());
}

TEST(Arat, FlexionSumSign) {
  proptest::Gen g(proptest::seed_from_env() + 47);
  for (int t = 0; t < 10; ++t) {
    PolyMould Pm = g.ari_mould(4, 3, 2), Am = g.ari_mould(4, 3, 2);
    EXPECT_EQ(arat(Pm, Am), -arat_flexion_sum(Pm, Am));
    EXPECT_EQ(arat(Pm, Am), lu(Pm, Am) - arit(Pm, Am));
  }
}

TEST(Arit, DerivationOfLuRandomized) {
  proptest::Gen g(proptest::seed_from_env() + 48);
  for (int t = 0; t < 10; ++t) {
    PolyMould Pm = g.ari_mould(4, 2, 2), A = g.ari_mould(4, 3, 2), B = g.ari_mould(4, 3, 2);
    EXPECT_EQ(arit(Pm, lu(A, B)), lu(arit(Pm, A), B) + lu(A, arit(Pm, B)));
  }
}

TEST(Arat, PushNeutralitySmallRandomized) {
  proptest::Gen g(proptest::seed_from_env() + 49);
  for (int t = 0; t < 10; ++t) {
    PolyMould Pm = g.ari_mould(3, 2, 1);
    PolyMould inv = g.push_invariant(3, 1);
    RatMould A = dar_inv(inv);
    ASSERT_TRUE(is_push_neutral(A));
    EXPECT_TRUE(is_push_neutral(arat(to_rat(Pm), A)));
    EXPECT_TRUE(is_push_neutral(dar_inv(darit(Pm, inv))));
  }
}

TEST(Darit, PolyCertified) {
  PolyMould Pm = depth_only(2, 1, "u1^2"), Am = depth_only(2, 1, "u1");
  PolyMould d = darit_poly(Pm, Am);
  EXPECT_EQ(to_rat(d), darit(Pm, Am));
}
