#include <gtest/gtest.h>

#include "mouldkit/relations.hpp"
#include "support.hpp"

using namespace mk;

namespace {

MultiPoly P2(const std::string& s) { return MultiPoly::parse(s, 2); }

std::vector<std::vector<Rational>> rows(const std::vector<MultiPoly>& ps, int d) {
  std::vector<std::vector<Rational>> r;
  for (const auto& p : ps) r.push_back(coefficient_vector(p, d));
  return r;
}

std::string displayed(int two_j, int two_k) {
  for (const auto& d : displayed_brackets())
    if (d.two_j == two_j && d.two_k == two_k) return d.poly;
  return "";
}

}  // namespace

TEST(Formulas, FloorDiv) {
  EXPECT_EQ(floor_div(-2, 4), -1);
  EXPECT_EQ(floor_div(-4, 4), -1);
  EXPECT_EQ(floor_div(7, 4), 1);
  EXPECT_EQ(eds2_formula(11), 2);
  EXPECT_EQ(fs2_formula(11), 4);
  EXPECT_EQ(bracket_formula(15), 3);
  EXPECT_EQ(relation_formula(15), 1);
}

TEST(Coefficients, RoundTrip) {
  MultiPoly p = P2("u1^3-2*u1*u2^2+1/3*u2^3");
  auto v = coefficient_vector(p, 3);
  EXPECT_EQ(v, (std::vector<Rational>{1, 0, -2, Rational(1, 3)}));
  EXPECT_EQ(poly_from_vector(v), p);
}

TEST(Symmetries, Examples) {
  EXPECT_TRUE(is_antisymmetric2(P2("u1-u2")));
  EXPECT_FALSE(is_antisymmetric2(P2("u1")));
  EXPECT_TRUE(is_push_invariant2(P2("u1^2+u1*u2+u2^2")));
  EXPECT_TRUE(is_fixed_by_minus_swap2(P2("u1-u2")));
  EXPECT_FALSE(is_fixed_by_minus_swap2(P2("u1+u2")));
}

TEST(Eds2, Dimensions) {
  EXPECT_EQ(eds2_space(5).dim, 1);
  EXPECT_EQ(eds2_space(11).dim, 2);
  for (int n = 5; n <= 21; n += 2) {
    DimensionReport d = eds2_space(n);
    EXPECT_EQ(d.dim, eds2_formula(n)) << n;
    EXPECT_TRUE(d.matches) << n;
    for (const auto& b : d.basis) {
      EXPECT_TRUE(is_antisymmetric2(b)) << n;
      EXPECT_TRUE(is_push_invariant2(b)) << n;
      EXPECT_TRUE(is_fixed_by_minus_swap2(b)) << n;
    }
  }
}

TEST(Eds2, SpannedByBracketAtSeven) {
  PolyMould m = eps_bracket_mould(0, 6);
  DimensionReport d = eds2_space(7);
  ASSERT_EQ(d.dim, 1);
  EXPECT_TRUE(same_span(rows({m[2]}, 5), rows(d.basis, 5)));
}

TEST(Fs2, Dimensions) {
  EXPECT_EQ(fs2_space(5).dim, 2);
  EXPECT_EQ(fs2_space(9).dim, 3);
  EXPECT_EQ(fs2_space(11).dim, 4);
  for (int n = 5; n <= 21; n += 2) {
    DimensionReport f = fs2_space(n), e = eds2_space(n);
    EXPECT_TRUE(f.matches) << n;
    EXPECT_GT(f.dim, e.dim) << n;
    for (const auto& b : f.basis) EXPECT_TRUE(satisfies_fs2(b)) << n;
  }
}

TEST(Fs2, DisplayedBases) {
  for (const auto& [n, polys] : displayed_fs_bases()) {
    if (n == 11) continue;
    std::vector<MultiPoly> ps;
    for (const auto& s : polys) ps.push_back(P2(s));
    EXPECT_TRUE(same_span(rows(ps, n - 2), rows(fs2_space(n).basis, n - 2))) << n;
  }
}

TEST(Fs2, WeightElevenRepair) {
  EXPECT_FALSE(is_antisymmetric2(P2("u1^9+3*u1^5*u2^4-u1^4*u2^5-u2^9")));
  MultiPoly fixed = P2("u1^9+3*u1^5*u2^4-3*u1^4*u2^5-u2^9");
  EXPECT_TRUE(satisfies_fs2(fixed));
}

TEST(EpsBracket, Displays) {
  EXPECT_EQ(eps_bracket_mould(0, 4)[2], P2(displayed(0, 4)));
  EXPECT_EQ(eps_bracket_mould(4, 6)[2], P2(displayed(4, 6)));
  EXPECT_EQ(eps_bracket_mould(0, 10)[2], P2(displayed(0, 10)));
  EXPECT_EQ(eps_bracket_mould(0, 6)[2], P2(displayed(0, 6)) * Rational(2));
  EXPECT_EQ(eps_bracket_mould(0, 8)[2], P2(displayed_bracket_0_8_repaired()) * Rational(3));
}

TEST(EpsBracket, DepthAndSymmetry) {
  for (auto [j, k] : std::vector<std::pair<int, int>>{{0, 4}, {0, 6}, {4, 6}, {0, 8}, {4, 8}}) {
    PolyMould m = eps_bracket_mould(j, k);
    EXPECT_TRUE(m[1].is_zero());
    EXPECT_TRUE(is_antisymmetric2(m[2]));
    EXPECT_TRUE(is_push_invariant2(m[2]));
    EXPECT_TRUE(is_fixed_by_minus_swap2(m[2]));
  }
}

TEST(EpsBracket, InsufficientCap) {
  EXPECT_THROW(eps_bracket_value(0, 4, 4), InsufficientCap);
  EXPECT_THROW(eps_bracket_mould(4, 6, 10), InsufficientCap);
  EXPECT_NO_THROW(eps_bracket_value(0, 4, 5));
}

TEST(EpsBracket, MutationDetected) {
  // flipping one sign in the weight-5 display breaks the match
  std::string s = displayed(0, 4);
  ASSERT_FALSE(s.empty());
  std::size_t pos = s.find_first_of("+-", 1);
  ASSERT_NE(pos, std::string::npos);
  s[pos] = s[pos] == '+' ? '-' : '+';
  PolyMould m = eps_bracket_mould(0, 4);
  EXPECT_NE(m[2], P2(s));
  EXPECT_NE(m[2], -P2(s));
}

TEST(RankTable, Rows) {
  auto table = eps_bracket_rank_table(15, 2);
  auto row = [&](int n) {
    for (const auto& r : table)
      if (r.n == n) return r;
    ADD_FAILURE() << "missing row " << n;
    return RankRow{};
  };
  RankRow r11 = row(11), r15 = row(15), r5 = row(5);
  EXPECT_EQ(r11.brackets, 2);
  EXPECT_EQ(r11.rank, 2);
  EXPECT_EQ(r11.relations, 0);
  EXPECT_EQ(r15.brackets, 3);
  EXPECT_EQ(r15.rank, 2);
  EXPECT_EQ(r15.relations, 1);
  EXPECT_TRUE(r15.brackets_ok() && r15.rank_ok() && r15.relations_ok());
  // [eps0,eps4] sits alone in weight 5
  EXPECT_EQ(r5.brackets, 1);
  EXPECT_EQ(r5.rank, 1);
  EXPECT_FALSE(r5.brackets_ok());
}

TEST(RankTable, JobsAgree) {
  auto a = eps_bracket_rank_table(13, 1), b = eps_bracket_rank_table(13, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].rank, b[i].rank);
    EXPECT_EQ(a[i].pairs, b[i].pairs);
  }
}

TEST(PropT01, EvenOnly) {
  PropT01Report rep = prop_t01_check(8);
  EXPECT_EQ(rep.fn_not_neutral, (std::vector<int>{3, 5, 7}));
  EXPECT_TRUE(rep.fn_wrong_depth.empty());
  EXPECT_TRUE(rep.assembled_neutral);
  EXPECT_EQ(rep.closed_form_sign, -1);
}
