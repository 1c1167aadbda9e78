#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "mouldkit/fraction.hpp"
#include "mouldkit/multipoly.hpp"
#include "mouldkit/ncpoly.hpp"

namespace mk {

template <class V>
struct MouldValue;

template <>
struct MouldValue<MultiPoly> {
  static MultiPoly zero(int r) { return MultiPoly(r); }
  static bool sum_is_zero(const std::vector<MultiPoly>& xs) {
    if (xs.empty()) return true;
    MultiPoly s(xs[0].nvars());
    for (const auto& x : xs) s += x;
    return s.is_zero();
  }
  static MultiPoly times(const MultiPoly& x, const MultiPoly& p) { return x * p; }
  static MultiPoly times_factors(MultiPoly x, const std::vector<MultiPoly>& fs) {
    for (const auto& f : fs) x = x * f;
    return x;
  }
};

template <>
struct MouldValue<FormalFraction> {
  static FormalFraction zero(int r) { return FormalFraction(r); }
  static bool sum_is_zero(const std::vector<FormalFraction>& xs) { return fraction_sum_is_zero(xs); }
  static FormalFraction times(const FormalFraction& x, const MultiPoly& p) { return x * FormalFraction(p); }
  static FormalFraction times_factors(FormalFraction x, const std::vector<MultiPoly>& fs) {
    for (const auto& f : fs) x.mul_factor(f);
    return x;
  }
};

// Depth-indexed family; the depth-r value is a function of u1..ur.
template <class V>
class Mould {
 public:
  explicit Mould(int cap = 0) : cap_(cap) {
    if (cap < 0 || cap > MultiPoly::kMaxVars) throw std::domain_error("mould depth cap must be in [0, 15]");
    for (int r = 0; r <= cap; ++r) vals_.push_back(MouldValue<V>::zero(r));
  }
  int cap() const { return cap_; }
  const V& operator[](int r) const { return vals_.at(r); }
  void set(int r, V v) {
    if (v.nvars() != r) throw std::invalid_argument("mould value has the wrong number of variables");
    vals_.at(r) = std::move(v);
  }
  bool is_zero() const {
    for (const auto& v : vals_)
      if (!v.is_zero()) return false;
    return true;
  }
  Mould truncate(int cap) const {
    Mould m(cap);
    for (int r = 0; r <= std::min(cap, cap_); ++r) m.vals_[r] = vals_[r];
    return m;
  }
  Mould operator-() const {
    Mould m = *this;
    for (auto& v : m.vals_) v = -v;
    return m;
  }
  friend Mould operator+(const Mould& x, const Mould& y) {
    Mould m(std::min(x.cap_, y.cap_));
    for (int r = 0; r <= m.cap_; ++r) m.vals_[r] = x.vals_[r] + y.vals_[r];
    return m;
  }
  friend Mould operator-(const Mould& x, const Mould& y) { return x + (-y); }
  friend Mould operator*(Mould x, const Rational& c) {
    for (auto& v : x.vals_) v *= c;
    return x;
  }
  // Equality as functions at the common depth cap.
  friend bool operator==(const Mould& x, const Mould& y) {
    int cap = std::min(x.cap_, y.cap_);
    for (int r = 0; r <= cap; ++r)
      if (!MouldValue<V>::sum_is_zero({x.vals_[r], -y.vals_[r]})) return false;
    return true;
  }
  friend bool operator!=(const Mould& x, const Mould& y) { return !(x == y); }

 private:
  int cap_;
  std::vector<V> vals_;
};

using PolyMould = Mould<MultiPoly>;
using RatMould = Mould<FormalFraction>;

// ---- construction -------------------------------------------------------

// c_{k1}...c_{kr} -> (-1)^{k1+...+kr-r} u1^{k1-1} ... ur^{kr-1}. Depth cap defaults to the max depth.
PolyMould ma(const CPoly& p, int depth_cap = -1);
// ma of the c-coordinates of a Lie element with no linear a term.
PolyMould ma_lie(const NCPoly& p, int depth_cap = -1);
// Inverse of ma within each (weight, depth) block.
CPoly ma_inverse(const PolyMould& m);
// The mould equal to 1 in depth 0 and 0 elsewhere.
PolyMould unit_mould(int cap);
RatMould to_rat(const PolyMould& m);
// Exact division of every depth; nullopt if some depth is not polynomial.
std::optional<PolyMould> to_poly(const RatMould& m);

// ---- generic helpers ----------------------------------------------------

namespace detail {

inline std::vector<MultiPoly> shifted_vars(int count, int r, int offset) {
  std::vector<MultiPoly> im;
  for (int k = 0; k < count; ++k) im.push_back(MultiPoly::variable(r, offset + k));
  return im;
}

// Substitution into r variables; constants are only re-typed.
template <class V>
V subst(const V& x, const std::vector<MultiPoly>& images, int r) {
  return x.nvars() == 0 ? x.extend(r) : x.substitute(images);
}

template <class V>
V place(const V& x, int r, int offset) {
  return subst(x, shifted_vars(x.nvars(), r, offset), r);
}

inline MultiPoly var_product(int r) {
  MultiPoly p = MultiPoly::constant(r, 1);
  for (int i = 0; i < r; ++i) p = p * MultiPoly::variable(r, i);
  return p;
}

// All shuffles of (0..i-1) with (i..r-1), as permutations.
std::vector<std::vector<int>> shuffles(int i, int r);

}  // namespace detail

// ---- operators ----------------------------------------------------------

template <class V>
Mould<V> mu(const Mould<V>& P, const Mould<V>& Q) {
  Mould<V> m(std::min(P.cap(), Q.cap()));
  for (int r = 0; r <= m.cap(); ++r) {
    V s = MouldValue<V>::zero(r);
    for (int i = 0; i <= r; ++i) {
      if (P[i].is_zero() || Q[r - i].is_zero()) continue;
      s += detail::place(P[i], r, 0) * detail::place(Q[r - i], r, i);
    }
    m.set(r, std::move(s));
  }
  return m;
}

template <class V>
Mould<V> lu(const Mould<V>& P, const Mould<V>& Q) {
  return mu(P, Q) - mu(Q, P);
}

template <class V>
Mould<V> push(const Mould<V>& P) {
  Mould<V> m(P.cap());
  m.set(0, P[0]);
  for (int r = 1; r <= P.cap(); ++r) {
    std::vector<MultiPoly> im;
    for (int k = 1; k < r; ++k) im.push_back(MultiPoly::variable(r, k));
    im.push_back(-MultiPoly::var_sum(r, 0, r));
    m.set(r, P[r].substitute(im));
  }
  return m;
}

template <class V>
Mould<V> swap(const Mould<V>& P) {
  Mould<V> m(P.cap());
  m.set(0, P[0]);
  for (int r = 1; r <= P.cap(); ++r) {
    std::vector<MultiPoly> im;
    im.push_back(MultiPoly::variable(r, r - 1));
    for (int i = 2; i <= r; ++i) im.push_back(MultiPoly::variable(r, r - i) - MultiPoly::variable(r, r - i + 1));
    m.set(r, P[r].substitute(im));
  }
  return m;
}

// Back from v- to u-variables: B(u1+...+ur, u1+...+u_{r-1}, ..., u1).
template <class V>
Mould<V> swap_inverse(const Mould<V>& P) {
  Mould<V> m(P.cap());
  m.set(0, P[0]);
  for (int r = 1; r <= P.cap(); ++r) {
    std::vector<MultiPoly> im;
    for (int i = r; i >= 1; --i) im.push_back(MultiPoly::var_sum(r, 0, i));
    m.set(r, P[r].substitute(im));
  }
  return m;
}

template <class V>
Mould<V> dar(const Mould<V>& P) {
  Mould<V> m(P.cap());
  for (int r = 0; r <= P.cap(); ++r) m.set(r, MouldValue<V>::times_factors(P[r], detail::shifted_vars(r, r, 0)));
  return m;
}

// u1...ur (u1+...+ur); depth 0 is left untouched.
template <class V>
Mould<V> delta(const Mould<V>& P) {
  Mould<V> m(P.cap());
  m.set(0, P[0]);
  for (int r = 1; r <= P.cap(); ++r) {
    auto fs = detail::shifted_vars(r, r, 0);
    fs.push_back(MultiPoly::var_sum(r, 0, r));
    m.set(r, MouldValue<V>::times_factors(P[r], fs));
  }
  return m;
}

template <class V>
RatMould dar_inv(const Mould<V>& P) {
  RatMould m(P.cap());
  for (int r = 0; r <= P.cap(); ++r) {
    FormalFraction f;
    if constexpr (std::is_same_v<V, MultiPoly>)
      f = FormalFraction(P[r]);
    else
      f = P[r];
    std::vector<MultiPoly> dens;
    for (int i = 0; i < r; ++i) dens.push_back(MultiPoly::variable(r, i));
    m.set(r, f * FormalFraction::with_factors(MultiPoly::constant(r, 1), dens));
  }
  return m;
}

template <class V>
RatMould delta_inv(const Mould<V>& P) {
  RatMould m(P.cap());
  for (int r = 0; r <= P.cap(); ++r) {
    FormalFraction f;
    if constexpr (std::is_same_v<V, MultiPoly>)
      f = FormalFraction(P[r]);
    else
      f = P[r];
    if (r == 0) {
      m.set(0, f);
      continue;
    }
    std::vector<MultiPoly> dens;
    for (int i = 0; i < r; ++i) dens.push_back(MultiPoly::variable(r, i));
    dens.push_back(MultiPoly::var_sum(r, 0, r));
    m.set(r, f * FormalFraction::with_factors(MultiPoly::constant(r, 1), dens));
  }
  return m;
}

// Depth-r value times -(u1+...+ur).
template <class V>
Mould<V> mul_by_minus_sum(const Mould<V>& P) {
  Mould<V> m(P.cap());
  for (int r = 0; r <= P.cap(); ++r) m.set(r, MouldValue<V>::times(P[r], -MultiPoly::var_sum(r, 0, r)));
  return m;
}

// ---- symmetry checks ----------------------------------------------------

struct ShuffleFailure {
  int depth;
  int split;
};

template <class V>
std::vector<V> shuffle_terms(const V& x, int r, int i) {
  std::vector<V> terms;
  for (const auto& perm : detail::shuffles(i, r)) {
    std::vector<MultiPoly> im;
    for (int k = 0; k < r; ++k) im.push_back(MultiPoly::variable(r, perm[k]));
    terms.push_back(x.substitute(im));
  }
  return terms;
}

template <class V>
bool is_alternal(const Mould<V>& P, ShuffleFailure* failure = nullptr) {
  for (int r = 2; r <= P.cap(); ++r) {
    if (P[r].is_zero()) continue;
    for (int i = 1; i <= r / 2; ++i)
      if (!MouldValue<V>::sum_is_zero(shuffle_terms(P[r], r, i))) {
        if (failure) *failure = {r, i};
        return false;
      }
  }
  return true;
}

struct BialternalReport {
  bool alternal = false;
  bool swap_alternal_up_to_constants = false;
  std::vector<Rational> kappa;  // swap(P) + kappa is alternal; kappa[r] per depth
  bool ok() const { return alternal && swap_alternal_up_to_constants; }
};

template <class V>
BialternalReport bialternality(const Mould<V>& P) {
  BialternalReport rep;
  rep.alternal = is_alternal(P);
  rep.kappa.assign(P.cap() + 1, Rational(0));
  Mould<V> S = swap(P);
  rep.swap_alternal_up_to_constants = true;
  for (int r = 2; r <= P.cap() && rep.swap_alternal_up_to_constants; ++r) {
    std::optional<Rational> kappa;
    for (int i = 1; i <= r / 2; ++i) {
      auto terms = shuffle_terms(S[r], r, i);
      FormalFraction sum(r);
      for (const auto& t : terms) {
        if constexpr (std::is_same_v<V, MultiPoly>)
          sum += FormalFraction(t);
        else
          sum += t;
      }
      Rational c;
      if (!sum.is_constant(c)) {
        rep.swap_alternal_up_to_constants = false;
        break;
      }
      Rational k = -c / Rational(binomial(r, i));
      if (kappa && *kappa != k) {
        rep.swap_alternal_up_to_constants = false;
        break;
      }
      kappa = k;
    }
    if (kappa) rep.kappa[r] = *kappa;
  }
  return rep;
}

template <class V>
bool is_bialternal(const Mould<V>& P) {
  return bialternality(P).ok();
}

inline bool is_delta_bialternal(const PolyMould& P) { return is_bialternal(delta_inv(P)); }

template <class V>
bool is_push_invariant(const Mould<V>& P) {
  Mould<V> Q = push(P);
  for (int r = 1; r <= P.cap(); ++r)
    if (!MouldValue<V>::sum_is_zero({Q[r], -P[r]})) return false;
  return true;
}

template <class V>
bool is_push_neutral_at(const Mould<V>& P, int r) {
  std::vector<V> orbit{P[r]};
  std::vector<MultiPoly> im;
  for (int k = 1; k < r; ++k) im.push_back(MultiPoly::variable(r, k));
  im.push_back(-MultiPoly::var_sum(r, 0, r));
  for (int k = 1; k <= r; ++k) orbit.push_back(orbit.back().substitute(im));
  return MouldValue<V>::sum_is_zero(orbit);
}

// Depths 2..cap.
template <class V>
bool is_push_neutral(const Mould<V>& P) {
  for (int r = 2; r <= P.cap(); ++r)
    if (!P[r].is_zero() && !is_push_neutral_at(P, r)) return false;
  return true;
}

// ---- flexion operators --------------------------------------------------

namespace detail {

// Images of the A-variables for A(a, ⌈c) (upper = true) or A(a⌉, c), where
// a = (u1..ui), b = (u_{i+1}..u_{i+j}), c = rest, in r variables.
inline std::vector<MultiPoly> flexion_images(int r, int i, int j, bool upper) {
  std::vector<MultiPoly> im;
  int nc = r - i - j;
  if (upper) {
    for (int k = 0; k < i; ++k) im.push_back(MultiPoly::variable(r, k));
    if (nc > 0) {
      im.push_back(MultiPoly::var_sum(r, i, i + j + 1));
      for (int k = i + j + 1; k < r; ++k) im.push_back(MultiPoly::variable(r, k));
    }
  } else {
    if (i > 0) {
      for (int k = 0; k < i - 1; ++k) im.push_back(MultiPoly::variable(r, k));
      im.push_back(MultiPoly::var_sum(r, i - 1, i + j));
    }
    for (int k = i + j; k < r; ++k) im.push_back(MultiPoly::variable(r, k));
  }
  return im;
}

// sum over w = abc, b nonempty, of (sign_upper) A(a⌈c)P(b) and (sign_lower) A(a⌉c)P(b), with
// `strict` excluding c = ∅ from the upper and a = ∅ from the lower sum.
template <class V>
Mould<V> flexion_sum(const Mould<V>& P, const Mould<V>& A, bool strict) {
  Mould<V> m(std::min(P.cap(), A.cap()));
  for (int r = 1; r <= m.cap(); ++r) {
    V s = MouldValue<V>::zero(r);
    for (int j = 1; j <= r; ++j) {
      if (P[j].is_zero()) continue;
      for (int i = 0; i + j <= r; ++i) {
        int nc = r - i - j;
        const V& Ad = A[r - j];
        if (Ad.is_zero()) continue;
        V pb = place(P[j], r, i);
        if (!strict || nc > 0) s += subst(Ad, flexion_images(r, i, j, true), r) * pb;
        if (!strict || i > 0) s -= subst(Ad, flexion_images(r, i, j, false), r) * pb;
      }
    }
    m.set(r, std::move(s));
  }
  return m;
}

}  // namespace detail

template <class V>
Mould<V> arit(const Mould<V>& P, const Mould<V>& A) {
  return detail::flexion_sum(P, A, true);
}

template <class V>
Mould<V> arat(const Mould<V>& P, const Mould<V>& A) {
  return lu(P, A) - arit(P, A);
}

// The all-decompositions sum; equals -arat(P)A.
template <class V>
Mould<V> arat_flexion_sum(const Mould<V>& P, const Mould<V>& A) {
  return detail::flexion_sum(P, A, false);
}

// sign_arit * arit(P)A + sign_ad * lu(P, A).
template <class V>
Mould<V> arat_variant(const Mould<V>& P, const Mould<V>& A, int sign_arit, int sign_ad) {
  return arit(P, A) * Rational(sign_arit) + lu(P, A) * Rational(sign_ad);
}

RatMould darit(const PolyMould& P, const RatMould& A);
RatMould darit(const PolyMould& P, const PolyMould& A);
RatMould darit_variant(const PolyMould& P, const PolyMould& A, int sign_arit, int sign_ad);

struct NonPolynomial : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// darit with the result certified polynomial; throws NonPolynomial.
PolyMould darit_poly(const PolyMould& P, const PolyMould& A);

}  // namespace mk
