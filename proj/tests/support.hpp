#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "mouldkit/mould.hpp"

namespace mk::proptest {

inline std::uint64_t seed_from_env(std::uint64_t fallback = 20240917) {
  if (const char* s = std::getenv("MOULDKIT_SEED")) return std::strtoull(s, nullptr, 10);
  return fallback;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int range = 5, int den = 3) {
    Rational q(uniform(-range, range), uniform(1, den));
    q.canonicalize();
    return q;
  }

  // Random polynomial in r variables with total degree in [dmin, dmax].
  MultiPoly poly(int r, int dmin, int dmax, int terms = 3) {
    MultiPoly p(r);
    if (r == 0) return dmin == 0 ? MultiPoly::constant(0, rational()) : p;
    for (int t = 0; t < terms; ++t) {
      int d = uniform(dmin, dmax);
      std::vector<int> e(r, 0);
      for (int k = 0; k < d; ++k) ++e[uniform(0, r - 1)];
      p += MultiPoly::monomial(r, e, rational());
    }
    return p;
  }

  // P(empty) = 0, depths 1..depth_max nonzero with small degree.
  PolyMould ari_mould(int cap, int depth_max, int deg = 2) {
    PolyMould m(cap);
    for (int r = 1; r <= std::min(cap, depth_max); ++r) m.set(r, poly(r, 0, deg, 2));
    return m;
  }

  // Orbit sum of a random mould under push.
  PolyMould push_invariant(int cap, int deg = 1) {
    PolyMould m = ari_mould(cap, cap, deg);
    PolyMould out(cap);
    for (int r = 1; r <= cap; ++r) {
      MultiPoly o = m[r];
      MultiPoly acc = o;
      std::vector<MultiPoly> im;
      for (int k = 1; k < r; ++k) im.push_back(MultiPoly::variable(r, k));
      im.push_back(-MultiPoly::var_sum(r, 0, r));
      for (int k = 1; k <= r; ++k) {
        o = o.substitute(im);
        acc += o;
      }
      out.set(r, acc);
    }
    return out;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace mk::proptest
