#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "mouldkit/rational.hpp"

namespace mk {

// Commutative polynomial in u1..ur over Q. Monomials are packed into 128-bit keys
// whose numeric order is graded lex (u1 > u2 > ...).
class MultiPoly {
 public:
  using Key = unsigned __int128;
  using Terms = std::map<Key, Rational, std::greater<Key>>;
  static constexpr int kMaxVars = 15;
  static constexpr int kMaxDegree = 255;

  MultiPoly() = default;
  explicit MultiPoly(int nvars);

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int i);  // u_{i+1}
  static MultiPoly monomial(int nvars, const std::vector<int>& exps, const Rational& c);
  // u_{i+1} + ... + u_{j}, 0-based half-open [i, j)
  static MultiPoly var_sum(int nvars, int i, int j);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int degree() const;  // -1 for the zero polynomial
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const std::vector<int>& exps) const;
  Rational constant_term() const;
  const Rational& leading_coeff() const;

  static Key pack(const std::vector<int>& exps);
  static std::vector<int> unpack(Key k, int nvars);
  static int key_degree(Key k) { return static_cast<int>(k >> 120); }

  void add_term(Key k, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }
  // Arbitrary total order, used for sorting factor lists.
  friend bool operator<(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(int e) const;
  // images.size() == nvars(); all images share one variable count.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  // Reinterpret as a polynomial in more variables (identity on exponents).
  MultiPoly extend(int nvars) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  MultiPoly homogeneous_part(int d) const;
  // Divide out all coefficients by the content so the result has integer, coprime
  // coefficients and positive leading coefficient. Returns the factor removed.
  Rational make_primitive();
  // q with *this == q * d if it exists.
  bool divide_exact(const MultiPoly& d, MultiPoly& q) const;

  std::string to_string() const;
  static MultiPoly parse(const std::string& text, int nvars);

 private:
  int nvars_ = 0;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace mk
