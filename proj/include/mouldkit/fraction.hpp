#pragma once

#include <string>
#include <vector>

#include "mouldkit/multipoly.hpp"

namespace mk {

// num / (f_1 * ... * f_k) with each factor monic (leading coefficient 1) and the
// factor list sorted. No gcd normalization.
class FormalFraction {
 public:
  FormalFraction() = default;
  explicit FormalFraction(int nvars);
  explicit FormalFraction(MultiPoly num);
  FormalFraction(MultiPoly num, const MultiPoly& den);
  static FormalFraction with_factors(MultiPoly num, const std::vector<MultiPoly>& dens);

  int nvars() const { return num_.nvars(); }
  const MultiPoly& num() const { return num_; }
  const std::vector<MultiPoly>& factors() const { return factors_; }
  MultiPoly den() const;
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return factors_.empty(); }

  FormalFraction operator-() const;
  FormalFraction& operator+=(const FormalFraction& o);
  FormalFraction& operator-=(const FormalFraction& o);
  FormalFraction& operator*=(const Rational& c);
  friend FormalFraction operator+(FormalFraction a, const FormalFraction& b) { return a += b; }
  friend FormalFraction operator-(FormalFraction a, const FormalFraction& b) { return a -= b; }
  friend FormalFraction operator*(const FormalFraction& a, const FormalFraction& b);
  friend FormalFraction operator*(FormalFraction a, const Rational& c) { return a *= c; }
  friend FormalFraction operator*(const Rational& c, FormalFraction a) { return a *= c; }
  // Cross-multiplication equality.
  bool equals(const FormalFraction& o) const;

  FormalFraction substitute(const std::vector<MultiPoly>& images) const;
  FormalFraction extend(int nvars) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  // Exact division of the numerator by the denominator if possible.
  bool to_poly(MultiPoly& out) const;
  // True iff the fraction is a constant c.
  bool is_constant(Rational& c) const;
  // Multiply by a non-constant polynomial; a matching denominator factor is removed instead.
  FormalFraction& mul_factor(const MultiPoly& f);
  // Divide out any denominator factor that exactly divides the numerator.
  void cancel();

  std::string to_string() const;

 private:
  MultiPoly num_;
  std::vector<MultiPoly> factors_;
  void add_factor(MultiPoly f);
};

// True iff sum(fs) == 0 as a rational function, decided by clearing denominators.
bool fraction_sum_is_zero(const std::vector<FormalFraction>& fs);

}  // namespace mk
