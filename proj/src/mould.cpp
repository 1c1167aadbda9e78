#include "mouldkit/mould.hpp"

#include <functional>

namespace mk {

namespace detail {

std::vector<std::vector<int>> shuffles(int i, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int x, int y) {
    if (x == i && y == r) {
      out.push_back(cur);
      return;
    }
    if (x < i) {
      cur.push_back(x);
      rec(x + 1, y);
      cur.pop_back();
    }
    if (y < r) {
      cur.push_back(y);
      rec(x, y + 1);
      cur.pop_back();
    }
  };
  rec(0, i);
  return out;
}

}  // namespace detail

PolyMould ma(const CPoly& p, int depth_cap) {
  int cap = depth_cap;
  if (cap < 0) {
    cap = 0;
    for (const auto& [m, c] : p.terms()) cap = std::max(cap, static_cast<int>(m.size()));
  }
  std::vector<MultiPoly> vals;
  for (int r = 0; r <= cap; ++r) vals.emplace_back(r);
  for (const auto& [m, c] : p.terms()) {
    int r = static_cast<int>(m.size());
    if (r > cap) throw std::domain_error("ma: c-monomial deeper than the depth cap");
    std::vector<int> e(r);
    int sum = 0;
    for (int i = 0; i < r; ++i) {
      e[i] = m[i] - 1;
      sum += e[i];
    }
    vals[r] += MultiPoly::monomial(r, e, sum % 2 ? Rational(-c) : c);
  }
  PolyMould out(cap);
  for (int r = 0; r <= cap; ++r) out.set(r, std::move(vals[r]));
  return out;
}

PolyMould ma_lie(const NCPoly& p, int depth_cap) { return ma(to_c_coordinates(p), depth_cap); }

CPoly ma_inverse(const PolyMould& m) {
  CPoly out;
  for (int r = 0; r <= m.cap(); ++r)
    for (const auto& [k, c] : m[r].terms()) {
      auto e = MultiPoly::unpack(k, r);
      CPoly::Mono mono(r);
      int sum = 0;
      for (int i = 0; i < r; ++i) {
        mono[i] = e[i] + 1;
        sum += e[i];
      }
      out.add_term(mono, sum % 2 ? Rational(-c) : c);
    }
  return out;
}

PolyMould unit_mould(int cap) {
  PolyMould m(cap);
  m.set(0, MultiPoly::constant(0, 1));
  return m;
}

RatMould to_rat(const PolyMould& m) {
  RatMould out(m.cap());
  for (int r = 0; r <= m.cap(); ++r) out.set(r, FormalFraction(m[r]));
  return out;
}

std::optional<PolyMould> to_poly(const RatMould& m) {
  PolyMould out(m.cap());
  for (int r = 0; r <= m.cap(); ++r) {
    MultiPoly p;
    if (!m[r].to_poly(p)) return std::nullopt;
    out.set(r, std::move(p));
  }
  return out;
}

RatMould darit(const PolyMould& P, const RatMould& A) { return dar(arat(delta_inv(P), dar_inv(A))); }

RatMould darit(const PolyMould& P, const PolyMould& A) { return darit(P, to_rat(A)); }

RatMould darit_variant(const PolyMould& P, const PolyMould& A, int sign_arit, int sign_ad) {
  return dar(arat_variant(delta_inv(P), dar_inv(A), sign_arit, sign_ad));
}

PolyMould darit_poly(const PolyMould& P, const PolyMould& A) {
  if (!P[0].is_zero()) throw std::domain_error("darit requires P(empty) = 0");
  auto r = to_poly(darit(P, A));
  if (!r) throw NonPolynomial("darit result is not polynomial");
  return *r;
}

}  // namespace mk
