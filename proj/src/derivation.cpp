#include "mouldkit/derivation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "mouldkit/rational.hpp"

namespace mk {

Derivation::Derivation(NCPoly val_a, NCPoly val_b, int cap, bool check_der0)
    : a_(val_a.truncate(cap)), b_(val_b.truncate(cap)), cap_(cap) {
  if (check_der0 && !satisfies_der0()) throw std::logic_error("derivation violates D([a,b]) = 0");
}

int Derivation::shift() const {
  int s = NCPoly::kUncapped;
  if (!a_.is_zero()) s = std::min(s, a_.min_weight() - 1);
  if (!b_.is_zero()) s = std::min(s, b_.min_weight() - 1);
  return s;
}

bool Derivation::satisfies_der0() const {
  int c = cap_ + 1;
  NCPoly a = NCPoly::a(c), b = NCPoly::b(c);
  return (lie_bracket(a_.truncate(c), b) + lie_bracket(a, b_.truncate(c))).is_zero();
}

Derivation Derivation::operator-() const { return Derivation(-a_, -b_, cap_, false); }

Derivation operator+(const Derivation& x, const Derivation& y) {
  return Derivation(x.a_ + y.a_, x.b_ + y.b_, std::min(x.cap_, y.cap_), false);
}

Derivation operator-(const Derivation& x, const Derivation& y) {
  return Derivation(x.a_ - y.a_, x.b_ - y.b_, std::min(x.cap_, y.cap_), false);
}

Derivation operator*(const Derivation& x, const Rational& c) {
  return Derivation(x.a_ * c, x.b_ * c, x.cap_, false);
}

NCPoly solve_ad_a(const NCPoly& y) {
  NCPoly x(y.cap() == NCPoly::kUncapped ? y.cap() : std::max(0, y.cap() - 1));
  if (y.coeff("") != 0) throw NotInImage("constant term is not in the image of ad(a)");
  std::set<Word> candidates;
  for (const auto& [w, c] : y.terms()) {
    auto first = w.find('b');
    if (first == Word::npos) continue;
    auto last = w.rfind('b');
    Word core = w.substr(first, last - first + 1);
    int outside = static_cast<int>(w.size() - core.size());
    for (int p = 0; p < outside; ++p)
      candidates.insert(Word(p, 'a') + core + Word(outside - 1 - p, 'a'));
  }
  // X_v = Y_{av} + [v ends in a] X_{a v[:-1]}; fill from the fewest leading a's up.
  std::map<Word, Rational> val;
  std::function<Rational(const Word&)> get = [&](const Word& v) -> Rational {
    auto it = val.find(v);
    if (it != val.end()) return it->second;
    Rational r = y.coeff("a" + v);
    if (!v.empty() && v.back() == 'a' && v.find('b') != Word::npos) r += get("a" + v.substr(0, v.size() - 1));
    val.emplace(v, r);
    return r;
  };
  for (const auto& v : candidates) x.add_term(v, get(v));
  NCPoly check = lie_bracket(NCPoly::a(y.cap()), x.truncate(y.cap()));
  if (check != y) throw NotInImage("not in image of ad(a)");
  return x;
}

Derivation epsilon(int two_k, int W) {
  if (two_k < 0 || two_k % 2 != 0) throw std::domain_error("epsilon index must be even and >= 0");
  NCPoly a = NCPoly::a(W + 1), b = NCPoly::b(W + 1);
  NCPoly va = ad_pow(a, two_k, b).truncate(W);
  NCPoly vb = solve_ad_a(lie_bracket(b, va.truncate(W + 1)));
  return Derivation(va, vb, W);
}

Derivation epsilon_tilde(int two_k, int W) {
  Derivation e = epsilon(two_k, W);
  if (two_k == 0) return -e;
  return e * (Rational(2) / Rational(factorial(two_k - 2)));
}

NCPoly apply(const Derivation& D, const NCPoly& p) {
  int cap = std::min(D.cap(), p.cap());
  NCPoly r(cap);
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const NCPoly& img = w[i] == 'a' ? D.val_a() : D.val_b();
      Word pre = w.substr(0, i), post = w.substr(i + 1);
      for (const auto& [u, cu] : img.terms()) {
        if (static_cast<int>(pre.size() + u.size() + post.size()) > cap) break;
        r.add_term(pre + u + post, c * cu);
      }
    }
  }
  return r;
}

Derivation bracket_der(const Derivation& D1, const Derivation& D2) {
  int cap = std::min(D1.cap(), D2.cap());
  NCPoly va = apply(D1, D2.val_a()) - apply(D2, D1.val_a());
  NCPoly vb = apply(D1, D2.val_b()) - apply(D2, D1.val_b());
  return Derivation(va, vb, cap, D1.satisfies_der0() && D2.satisfies_der0());
}

NCPoly v_a(const Derivation& D) { return D.val_a(); }

Derivation derivation_from_a(const NCPoly& f, int W) {
  NCPoly ft = f.truncate(W);
  if (!is_lie(ft)) throw std::invalid_argument("derivation_from_a expects a Lie element");
  NCPoly b = NCPoly::b(W + 1);
  NCPoly vb = solve_ad_a(lie_bracket(b, ft.truncate(W + 1)));
  return Derivation(ft, vb, W);
}

NCPoly transported_bracket(const NCPoly& f, const NCPoly& g, int W) {
  return v_a(bracket_der(derivation_from_a(f, W), derivation_from_a(g, W)));
}

NCPoly exp_action(const Derivation& D, const NCPoly& p, int W) {
  if (!D.is_zero() && D.shift() < 1) throw std::domain_error("exp_action requires a weight-raising derivation");
  NCPoly term = p.truncate(W), sum = p.truncate(W);
  for (int n = 1; !term.is_zero(); ++n) {
    term = apply(D, term) * Rational(1, n);
    sum += term;
  }
  return sum;
}

NCPoly exp_a(const NCPoly& f, int W) {
  NCPoly sum = NCPoly::one(W);
  if (f.is_zero()) return sum;
  Derivation D = derivation_from_a(f, W);
  if (D.shift() < 1) throw std::domain_error("exp_a requires f of weight >= 2");
  NCPoly term = NCPoly::a(W);
  for (int n = 1;; ++n) {
    term = apply(D, term) * Rational(1, n);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

Derivation ch_derivation(const Derivation& D1, const Derivation& D2, int W) {
  auto phi_minus_one = [&](const NCPoly& p) { return exp_action(D1, exp_action(D2, p, W), W) - p.truncate(W); };
  auto log_phi = [&](const NCPoly& x) {
    NCPoly cur = x.truncate(W), sum(W);
    for (int n = 1; n <= W + 1; ++n) {
      cur = phi_minus_one(cur);
      if (cur.is_zero()) break;
      sum += cur * Rational(n % 2 ? 1 : -1, n);
    }
    return sum;
  };
  return Derivation(log_phi(NCPoly::a(W)), log_phi(NCPoly::b(W)), W);
}

NCPoly ch_transported(const NCPoly& f, const NCPoly& g, int W) {
  return v_a(ch_derivation(derivation_from_a(f, W), derivation_from_a(g, W), W));
}

}  // namespace mk
