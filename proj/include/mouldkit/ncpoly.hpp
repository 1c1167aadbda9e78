#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mouldkit/rational.hpp"

namespace mk {

using Word = std::string;

struct ShortLex {
  bool operator()(const Word& x, const Word& y) const {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  }
};

// Noncommutative polynomial in letters a, b over Q, truncated at weight cap().
class NCPoly {
 public:
  using Terms = std::map<Word, Rational, ShortLex>;
  static constexpr int kUncapped = 1 << 20;

  explicit NCPoly(int cap = kUncapped) : cap_(cap) {}
  static NCPoly word(const Word& w, const Rational& c = 1, int cap = kUncapped);
  static NCPoly one(int cap = kUncapped) { return word("", 1, cap); }
  static NCPoly a(int cap = kUncapped) { return word("a", 1, cap); }
  static NCPoly b(int cap = kUncapped) { return word("b", 1, cap); }

  int cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const Word& w) const;
  void add_term(const Word& w, const Rational& c);

  int min_weight() const;  // -1 for zero
  int max_weight() const;  // -1 for zero
  bool is_homogeneous() const;
  NCPoly homogeneous(int weight) const;
  NCPoly depth_part(int d) const;  // words with exactly d letters b
  NCPoly truncate(int cap) const;
  NCPoly with_cap(int cap) const { return truncate(cap); }

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const Rational& c);
  friend NCPoly operator+(NCPoly x, const NCPoly& y) { return x += y; }
  friend NCPoly operator-(NCPoly x, const NCPoly& y) { return x -= y; }
  friend NCPoly operator*(const NCPoly& x, const NCPoly& y);
  friend NCPoly operator*(NCPoly x, const Rational& c) { return x *= c; }
  friend NCPoly operator*(const Rational& c, NCPoly x) { return x *= c; }
  // Compared at the common (minimum) cap.
  friend bool operator==(const NCPoly& x, const NCPoly& y);
  friend bool operator!=(const NCPoly& x, const NCPoly& y) { return !(x == y); }

  std::string to_string() const;
  static NCPoly parse(const std::string& text, int cap = kUncapped);

 private:
  int cap_;
  Terms terms_;
};

// Polynomial in the letters c_k = ad(a)^{k-1}(b), keyed by (k1, ..., kr).
class CPoly {
 public:
  using Mono = std::vector<int>;
  using Terms = std::map<Mono, Rational>;

  explicit CPoly(int cap = NCPoly::kUncapped) : cap_(cap) {}
  static CPoly mono(const Mono& m, const Rational& c = 1, int cap = NCPoly::kUncapped);

  int cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Mono& m) const;
  void add_term(const Mono& m, const Rational& c);
  static int weight(const Mono& m);

  CPoly operator-() const;
  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const Rational& c);
  friend CPoly operator+(CPoly x, const CPoly& y) { return x += y; }
  friend CPoly operator-(CPoly x, const CPoly& y) { return x -= y; }
  friend CPoly operator*(const CPoly& x, const CPoly& y);
  friend CPoly operator*(CPoly x, const Rational& c) { return x *= c; }
  friend bool operator==(const CPoly& x, const CPoly& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const CPoly& x, const CPoly& y) { return !(x == y); }

  std::string to_string() const;
  static CPoly parse(const std::string& text, int cap = NCPoly::kUncapped);

 private:
  int cap_;
  Terms terms_;
};

struct NotRepresentable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

NCPoly lie_bracket(const NCPoly& p, const NCPoly& q);
NCPoly ad_pow(const NCPoly& x, int n, const NCPoly& y);

// Left-normed bracketing of every word (Dynkin map).
NCPoly dynkin(const NCPoly& p);
bool is_lie(const NCPoly& p);

// c_k expanded as ad(a)^{k-1}(b).
NCPoly c_letter(int k, int cap = NCPoly::kUncapped);
NCPoly expand_c(const CPoly& p);
// Throws NotRepresentable when p is not in the span of c-monomial expansions.
CPoly to_c_coordinates(const NCPoly& p);

// a^{k0} b a^{k1} b ... b a^{kr}  <->  (k0, ..., kr)
std::vector<int> word_to_blocks(const Word& w);
Word blocks_to_word(const std::vector<int>& blocks);
// Block rotation (k0, ..., kr) -> (kr, k0, ..., k_{r-1}), extended linearly.
NCPoly push_word(const NCPoly& p);
bool is_push_invariant_series(const NCPoly& p);

// sum_m (B_m / m!) ad(x)^m (y), B_1 = -1/2, truncated at weight W.
NCPoly ber_apply(const NCPoly& x, const NCPoly& y, int W);

struct TElements {
  NCPoly t01, t02, t12, t01prime;
};
TElements t_elements(int W);

NCPoly shuffle_product(const Word& w1, const Word& w2);

struct LieBasisElement {
  Word lyndon;
  NCPoly poly;
};
// Standard bracketings of the Lyndon words over a < b of length <= W.
std::vector<LieBasisElement> lie_basis(int W);

}  // namespace mk
