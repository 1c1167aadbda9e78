#pragma once

#include <stdexcept>

#include "mouldkit/ncpoly.hpp"

namespace mk {

struct NotInImage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Derivation of the free algebra on a, b given by its values on the generators,
// truncated at weight cap(). Der0 condition: D([a,b]) = 0.
class Derivation {
 public:
  Derivation() : Derivation(NCPoly(0), NCPoly(0), 0, false) {}
  Derivation(NCPoly val_a, NCPoly val_b, int cap, bool check_der0 = true);

  const NCPoly& val_a() const { return a_; }
  const NCPoly& val_b() const { return b_; }
  int cap() const { return cap_; }
  // Smallest weight increase over both generators; NCPoly::kUncapped for zero.
  int shift() const;
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool satisfies_der0() const;

  Derivation operator-() const;
  friend Derivation operator+(const Derivation& x, const Derivation& y);
  friend Derivation operator-(const Derivation& x, const Derivation& y);
  friend Derivation operator*(const Derivation& x, const Rational& c);
  friend bool operator==(const Derivation& x, const Derivation& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  NCPoly a_, b_;
  int cap_;
};

// X with [a, X] = Y and no coefficient on a^m; throws NotInImage.
NCPoly solve_ad_a(const NCPoly& y);

// a -> ad(a)^{2k}(b), b -> solution of [a, X] = [b, ad(a)^{2k}(b)].
Derivation epsilon(int two_k, int W);
// -eps_0 for k = 0, 2/(2k-2)! eps_{2k} otherwise.
Derivation epsilon_tilde(int two_k, int W);

NCPoly apply(const Derivation& D, const NCPoly& p);
Derivation bracket_der(const Derivation& D1, const Derivation& D2);
NCPoly v_a(const Derivation& D);

// D with D(a) = f, D([a,b]) = 0. Throws NotInImage if [b, f] is not in the image of ad(a).
Derivation derivation_from_a(const NCPoly& f, int W);
NCPoly transported_bracket(const NCPoly& f, const NCPoly& g, int W);

// sum_n D^n(p) / n!, D weight-raising.
NCPoly exp_action(const Derivation& D, const NCPoly& p, int W);
// 1 + sum_{n>=1} D_f^n(a) / n!.
NCPoly exp_a(const NCPoly& f, int W);
// log(exp(D1) exp(D2)) as a derivation.
Derivation ch_derivation(const Derivation& D1, const Derivation& D2, int W);
// v_a of ch_derivation of the reconstructed derivations.
NCPoly ch_transported(const NCPoly& f, const NCPoly& g, int W);

}  // namespace mk
