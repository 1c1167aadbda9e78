#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mouldkit/matrix.hpp"
#include "mouldkit/mould.hpp"

namespace mk {

struct InsufficientCap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int floor_div(int a, int b);
int eds2_formula(int n);       // floor((n-5)/6) + 1
int fs2_formula(int n);        // floor((n-2)/3) + 1
int bracket_formula(int n);    // floor((n-3)/4)
int relation_formula(int n);   // floor((n-7)/4) - floor((n-5)/6)

// Coefficients of u1^d, u1^{d-1}u2, ..., u2^d.
std::vector<Rational> coefficient_vector(const MultiPoly& p, int d);
MultiPoly poly_from_vector(const std::vector<Rational>& v);

bool is_antisymmetric2(const MultiPoly& p);         // P(u1,u2) + P(u2,u1) = 0
bool is_push_invariant2(const MultiPoly& p);        // P(u1,u2) = P(u2,-u1-u2)
bool is_fixed_by_minus_swap2(const MultiPoly& p);   // P(-u2,-u1) = P(u1,u2)
bool satisfies_fs2(const MultiPoly& p);             // u0 P(u1,u2) + u1 P(u2,u0) + u2 P(u0,u1) = 0

struct DimensionReport {
  int n = 0;
  int dim = 0;
  int formula = 0;
  std::vector<MultiPoly> basis;
  bool matches = false;
};
DimensionReport eds2_space(int n);
DimensionReport fs2_space(int n);

// v_a([eps_{2j}, eps_{2k}]) at weight cap W (default 2j+2k+1).
NCPoly eps_bracket_value(int two_j, int two_k, int W = -1);
// Depth-2 mould of the above (depth cap 2). Throws InsufficientCap if W < 2j+2k+1.
PolyMould eps_bracket_mould(int two_j, int two_k, int W = -1);

struct RankRow {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // (2j, 2k)
  int brackets = 0, rank = 0, relations = 0;
  int formula_brackets = 0, formula_rank = 0, formula_relations = 0;
  bool brackets_ok() const { return brackets == formula_brackets; }
  bool rank_ok() const { return rank == formula_rank; }
  bool relations_ok() const { return relations == formula_relations; }
};
std::vector<RankRow> eps_bracket_rank_table(int n_max, int jobs = 1);

struct PropT01Report {
  std::vector<int> fn_not_neutral;
  std::vector<int> fn_wrong_depth;
  bool assembled_neutral = false;
  int closed_form_sign = 0;  // ma(ad^n(b)(a)) = sign * (-sum (-1)^{n-k} C(n-1,k-1) u_k) for all n, 0 if neither
  bool ok() const { return fn_not_neutral.empty() && fn_wrong_depth.empty() && assembled_neutral; }
};
PropT01Report prop_t01_check(int n_max);

struct PaperItem {
  std::string item;
  std::string expected_source;
  bool pass = false;
  std::string detail;
};
struct PaperReport {
  int sigma = 1;
  std::vector<PaperItem> items;
  bool all_pass() const;
};
struct VerifyOptions {
  int weight_cap = 31;
};
PaperReport verify_paper_examples(const VerifyOptions& opt = {});

// Displayed values, as printed.
struct DisplayedBracket {
  int two_j, two_k;
  std::string poly;
};
const std::vector<DisplayedBracket>& displayed_brackets();
// (0,8) with the missing operator read as '-'.
std::string displayed_bracket_0_8_repaired();
const std::vector<std::pair<int, std::vector<std::string>>>& displayed_fs_bases();

}  // namespace mk
