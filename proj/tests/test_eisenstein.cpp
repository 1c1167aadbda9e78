#include <gtest/gtest.h>

#include "mouldkit/arith.hpp"
#include "mouldkit/eisenstein.hpp"
#include "support.hpp"

using namespace mk;

namespace {

const int N = 12;

QSeriesL mono(int n, int m, const Rational& c, int M = 2) { return QSeriesL::monomial(N, M, n, m, c); }

}  // namespace

TEST(Eisenstein, Constants) {
  EXPECT_EQ(eisenstein_constant(0), Rational(-1));
  EXPECT_EQ(eisenstein_constant(1), Rational(-1, 24));
  EXPECT_EQ(eisenstein_constant(2), Rational(1, 240));
  EXPECT_EQ(eisenstein_constant(3), Rational(-1, 504));
}

TEST(Eisenstein, QExpansion) {
  QSeriesL g4 = eisenstein_q(2, N);
  EXPECT_EQ(g4.coeff(0, 0), Rational(1, 240));
  EXPECT_EQ(g4.coeff(1, 0), Rational(1));
  EXPECT_EQ(g4.coeff(2, 0), Rational(9));
  EXPECT_EQ(g4.coeff(6, 0), Rational(252));
  EXPECT_EQ(eisenstein_q(0, N), QSeriesL::constant(N, 0, -1));
  EXPECT_EQ(eisenstein_q0(2, N).coeff(0, 0), Rational(0));
  for (int n = 1; n <= N; ++n) EXPECT_EQ(eisenstein_q(3, N).coeff(n, 0), Rational(sigma(5, n))) << n;
}

TEST(PrimitiveDlog, Values) {
  EXPECT_EQ(primitive_dlog(QSeriesL::constant(N, 1, 1)), mono(0, 1, 1));
  EXPECT_EQ(primitive_dlog(mono(1, 0, 1, 1)), mono(1, 0, 1));
  EXPECT_EQ(primitive_dlog(mono(1, 1, 1, 1)), mono(1, 1, 1) - mono(1, 0, 1));
  EXPECT_EQ(primitive_dlog(QSeriesL::constant(N, 1, 1)).l_degree(), 2);
}

TEST(PrimitiveDlog, InvertsDerivativeRandomized) {
  proptest::Gen g(proptest::seed_from_env() + 50);
  for (int t = 0; t < 20; ++t) {
    QSeriesL f(N, 2);
    for (int k = 0; k < 4; ++k) f.set(g.uniform(0, N), g.uniform(0, 2), g.rational());
    QSeriesL F = primitive_dlog(f);
    EXPECT_EQ(F.derivative().truncate(N, 2), f);
    EXPECT_EQ(F.coeff(0, 0), Rational(0));
  }
}

TEST(IterIntegral, Basics) {
  EXPECT_EQ(iter_integral({}), QSeriesL::constant(N, 0, 1).truncate(0, 0));
  QSeriesL I0 = iter_integral({eisenstein_q(0, N)});
  EXPECT_EQ(I0, QSeriesL::monomial(N, 1, 0, 1, 1));
  QSeriesL I00 = iter_integral({eisenstein_q(0, N), eisenstein_q(0, N)});
  EXPECT_EQ(I00, QSeriesL::monomial(N, 2, 0, 2, Rational(1, 2)));
}

TEST(IterIntegral, OracleAgrees) {
  IterEisCache cache(N);
  for (const auto& k : indices_up_to_weight(7)) EXPECT_EQ(cache.get(k), cache.oracle(k)) << index_to_string(k);
}

TEST(IterIntegral, Shuffle) {
  IterEisCache cache(N);
  EisIndex x{2}, y{0, 1};
  QSeriesL rhs = cache.get({2, 0, 1}) + cache.get({0, 2, 1}) + cache.get({0, 1, 2});
  EXPECT_EQ(cache.get(x) * cache.get(y), rhs);
}

TEST(IterIntegral, DerivativeIdentity) {
  IterEisCache cache(N);
  for (const auto& k : indices_up_to_weight(7)) {
    if (k.empty()) continue;
    EisIndex rest(k.begin() + 1, k.end());
    EXPECT_EQ(cache.get(k).derivative(), -(eisenstein_q(k[0], N) * cache.get(rest))) << index_to_string(k);
  }
}

TEST(Index, WeightAndText) {
  EXPECT_EQ(index_weight({}), 0);
  EXPECT_EQ(index_weight({0}), 1);
  EXPECT_EQ(index_weight({2, 0}), 6);
  EXPECT_EQ(parse_index(index_to_string({2, 0, 3})), (EisIndex{2, 0, 3}));
  EXPECT_EQ(indices_up_to_weight(1).size(), 2u);
  for (const auto& k : indices_up_to_weight(6)) EXPECT_LE(index_weight(k), 6);
}

TEST(GCoefficient, HeckeValues) {
  // q^p coefficient of the primitive of G_{2k} - G_{2k}^infinity is (p^{2k-1} + 1)/p
  QSeriesL F2 = primitive_dlog(eisenstein_q0(2, N)), F1 = primitive_dlog(eisenstein_q0(1, N));
  EXPECT_EQ(F2.coeff(2, 0), Rational(9, 2));
  EXPECT_EQ(F1.coeff(3, 0), Rational(4, 3));
  EXPECT_EQ(F2.coeff(5, 0), Rational(126, 5));
  EXPECT_TRUE(g_coefficient_identity_check(3, {2, 3, 5, 7, 11}, N));
  EXPECT_THROW(g_coefficient_identity_check(2, {4}, N), std::domain_error);
}

TEST(Rank, SmallFamilies) {
  EXPECT_EQ(rank_check({{}, {0}}, N, 2).rank, 2);
  EXPECT_EQ(rank_check({{0}, {0}}, N, 2).rank, 1);
  EXPECT_TRUE(rank_check({{0}, {1}, {2}}, 0, 1).truncation_too_small);
  EXPECT_THROW(rank_check({{0, 0}}, N, 1), std::domain_error);
}

TEST(GAction, LowWeight) {
  GAction g = g_action_on_a(5, 6);
  ASSERT_TRUE(g.terms.count("a"));
  EXPECT_EQ(g.terms.at("a").truncate(6, 0), QSeriesL::constant(6, 0, 1));
  EXPECT_TRUE(g_action_residual_zero(g));
}
