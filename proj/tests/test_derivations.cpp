#include <gtest/gtest.h>

#include "mouldkit/derivation.hpp"
#include "mouldkit/ncpoly.hpp"
#include "support.hpp"

using namespace mk;

namespace {

const int W = 8;

NCPoly A() { return NCPoly::a(W); }
NCPoly B() { return NCPoly::b(W); }

}  // namespace

TEST(Epsilon, Eps0) {
  Derivation e0 = epsilon(0, W);
  EXPECT_EQ(e0.val_a(), B());
  EXPECT_TRUE(e0.val_b().is_zero());
  EXPECT_EQ(e0.shift(), 0);
  EXPECT_TRUE(e0.satisfies_der0());
}

TEST(Epsilon, ValuesOnA) {
  for (int k = 0; k <= 3; ++k) {
    Derivation e = epsilon(2 * k, W);
    EXPECT_EQ(e.val_a(), ad_pow(A(), 2 * k, B())) << k;
    EXPECT_EQ(lie_bracket(A(), e.val_b()), lie_bracket(B(), e.val_a()).truncate(W)) << k;
    EXPECT_TRUE(is_lie(e.val_b())) << k;
  }
  EXPECT_THROW(epsilon(3, W), std::domain_error);
  EXPECT_THROW(epsilon(-2, W), std::domain_error);
}

TEST(Epsilon, Eps2IsMinusAdAB) {
  Derivation e2 = epsilon(2, W);
  NCPoly ab = lie_bracket(A(), B());
  EXPECT_EQ(e2.val_a(), -lie_bracket(ab, A()));
  EXPECT_EQ(e2.val_b(), -lie_bracket(ab, B()));
}

TEST(Epsilon, Eps2Central) {
  Derivation e2 = epsilon(2, W);
  for (int k : {0, 4, 6}) EXPECT_TRUE(bracket_der(e2, epsilon(k, W)).is_zero()) << k;
}

TEST(Epsilon, Tilde) {
  EXPECT_EQ(epsilon_tilde(0, W), -epsilon(0, W));
  EXPECT_EQ(epsilon_tilde(4, W), epsilon(4, W));
  EXPECT_EQ(epsilon_tilde(6, W), epsilon(6, W) * Rational(1, 12));
}

TEST(Derivation, KillsAB) {
  for (int k = 0; k <= 3; ++k) {
    Derivation e = epsilon(2 * k, W);
    EXPECT_TRUE(apply(e, lie_bracket(A(), B())).is_zero()) << k;
  }
  EXPECT_THROW(Derivation(B(), B(), W), std::logic_error);
}

TEST(Derivation, ApplyIsLeibnizRandomized) {
  proptest::Gen g(proptest::seed_from_env() + 30);
  Derivation D = epsilon(4, W) + epsilon(0, W) * g.rational();
  auto basis = lie_basis(3);
  for (int t = 0; t < 20; ++t) {
    NCPoly x = basis[g.uniform(0, 4)].poly.truncate(W), y = basis[g.uniform(0, 4)].poly.truncate(W);
    EXPECT_EQ(apply(D, x * y), apply(D, x) * y + x * apply(D, y));
  }
}

TEST(Bracket, Eps0Eps4OnA) {
  // eps0 kills b, so v_a([eps0,e]) = eps0(e(a)) - e(b).
  Derivation e0 = epsilon(0, W), e4 = epsilon(4, W);
  Derivation br = bracket_der(e0, e4);
  EXPECT_EQ(v_a(br), apply(e0, e4.val_a()) - e4.val_b());
  EXPECT_EQ(br.shift(), 4);
  EXPECT_TRUE(br.satisfies_der0());
}

TEST(Bracket, JacobiAndAntisymmetry) {
  Derivation x = epsilon(0, 10), y = epsilon(4, 10), z = epsilon(6, 10);
  EXPECT_EQ(bracket_der(x, y), -bracket_der(y, x));
  Derivation jac = bracket_der(x, bracket_der(y, z)) + bracket_der(y, bracket_der(z, x)) + bracket_der(z, bracket_der(x, y));
  EXPECT_TRUE(jac.is_zero());
}

TEST(FromA, RoundTrip) {
  for (int k : {0, 4, 6}) {
    Derivation e = epsilon(k, W);
    EXPECT_EQ(derivation_from_a(e.val_a(), W), e) << k;
  }
  Derivation br = bracket_der(epsilon(0, W), epsilon(4, W));
  EXPECT_EQ(derivation_from_a(v_a(br), W), br);
}

TEST(FromA, Rejects) {
  EXPECT_THROW(derivation_from_a(NCPoly::parse("ab", W), W), std::invalid_argument);
  // Lie but not push-invariant
  EXPECT_THROW(derivation_from_a(ad_pow(A(), 3, B()), W), NotInImage);
  EXPECT_THROW(derivation_from_a(lie_bracket(B(), ad_pow(A(), 3, B())), W), NotInImage);
}

TEST(SolveAdA, Certified) {
  NCPoly x = lie_bracket(B(), lie_bracket(A(), B()));
  EXPECT_EQ(solve_ad_a(lie_bracket(A(), x)), x);
  EXPECT_THROW(solve_ad_a(B()), NotInImage);
  EXPECT_THROW(solve_ad_a(NCPoly::one(W)), NotInImage);
}

TEST(TransportedBracket, MatchesDerivationBracket) {
  NCPoly f = epsilon(0, W).val_a(), g = epsilon(4, W).val_a();
  EXPECT_EQ(transported_bracket(f, g, W), v_a(bracket_der(epsilon(0, W), epsilon(4, W))));
  EXPECT_EQ(transported_bracket(f, g, W), -transported_bracket(g, f, W));
}

TEST(ExpA, Aminus1) {
  for (int k : {4, 6}) {
    Derivation D = epsilon(k, W);
    EXPECT_EQ(exp_action(D, A(), W), A() - NCPoly::one(W) + exp_a(D.val_a(), W)) << k;
  }
  EXPECT_THROW(exp_a(B(), W), std::domain_error);
  EXPECT_THROW(exp_action(epsilon(0, W), A(), W), std::domain_error);
}

TEST(ExpA, LowWeightTerms) {
  // exp applied to a, D raising weight by 4: a + D(a) + ...
  Derivation D = epsilon(4, W);
  NCPoly e = exp_action(D, A(), W);
  EXPECT_EQ(e.homogeneous(1), A());
  EXPECT_EQ(e.homogeneous(5), D.val_a().homogeneous(5));
}

TEST(ChMult, Affine) {
  Derivation D = epsilon(4, W);
  NCPoly f = epsilon(6, W).val_a();
  NCPoly base = A() - NCPoly::one(W) + exp_a(f, W);
  EXPECT_EQ(exp_action(D, base, W), A() - NCPoly::one(W) + exp_a(ch_transported(D.val_a(), f, W), W));
}

TEST(ChMult, LowOrder) {
  Derivation x = epsilon(4, 12), y = epsilon(6, 12);
  Derivation ch = ch_derivation(x, y, 12);
  // x + y + 1/2 [x,y] through weight 12
  Derivation expect = x + y + bracket_der(x, y) * Rational(1, 2);
  EXPECT_EQ(ch, expect);
}
