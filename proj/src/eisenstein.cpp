#include "mouldkit/eisenstein.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "mouldkit/arith.hpp"
#include "mouldkit/derivation.hpp"
#include "mouldkit/matrix.hpp"

namespace mk {

Rational eisenstein_constant(int k) {
  if (k < 0) throw std::domain_error("eisenstein index must be >= 0");
  if (k == 0) return -1;
  return -bernoulli(2 * k) / (4 * k);
}

QSeriesL eisenstein_q0(int k, int N) {
  QSeriesL s(N, 0);
  if (k == 0) return s;
  for (int n = 1; n <= N; ++n) s.set(n, 0, Rational(sigma(2 * k - 1, n)));
  return s;
}

QSeriesL eisenstein_q(int k, int N) {
  QSeriesL s = eisenstein_q0(k, N);
  s.set(0, 0, eisenstein_constant(k));
  return s;
}

QSeriesL primitive_dlog(const QSeriesL& f) {
  int N = f.q_order(), M = f.l_degree();
  QSeriesL F(N, M + 1);
  for (int m = 0; m <= M; ++m) {
    const Rational& c = f.coeff(0, m);
    if (c != 0) F.add_to(0, m + 1, c / (m + 1));
  }
  std::vector<Integer> fact(M + 1);
  for (int m = 0; m <= M; ++m) fact[m] = factorial(m);
  for (int n = 1; n <= N; ++n)
    for (int m = 0; m <= M; ++m) {
      const Rational& c = f.coeff(n, m);
      if (c == 0) continue;
      Integer npow = n;
      for (int j = 0; j <= m; ++j) {
        Rational t(fact[m], fact[m - j] * npow);
        t.canonicalize();
        F.add_to(n, m - j, j % 2 ? Rational(-c * t) : Rational(c * t));
        npow *= n;
      }
    }
  return F;
}

QSeriesL iter_integral(const std::vector<QSeriesL>& fs) {
  int N = fs.empty() ? 0 : fs[0].q_order();
  for (const auto& f : fs) N = std::min(N, f.q_order());
  QSeriesL I = QSeriesL::constant(N, 0, 1);
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    const QSeriesL f = it->truncate(N, I.l_degree());
    I = -primitive_dlog(f * I);
  }
  return I;
}

namespace {

struct Sym {
  int idx;
  bool inf;
  bool operator<(const Sym& o) const { return idx != o.idx ? idx < o.idx : inf < o.inf; }
};
using SymWord = std::vector<Sym>;

// Termwise primitive of q^n L^m via F_m = (L^m - m F_{m-1}) / n for n >= 1.
QSeriesL oracle_primitive(const QSeriesL& f) {
  int N = f.q_order(), M = f.l_degree();
  QSeriesL F(N, M + 1);
  for (int n = 0; n <= N; ++n) {
    if (n == 0) {
      for (int m = 0; m <= M; ++m)
        if (f.coeff(0, m) != 0) F.add_to(0, m + 1, f.coeff(0, m) / (m + 1));
      continue;
    }
    // prim[m] holds the L-coefficients of the primitive of q^n L^m.
    std::vector<std::vector<Rational>> prim;
    for (int m = 0; m <= M; ++m) {
      std::vector<Rational> v(m + 1, Rational(0));
      v[m] = Rational(1, n);
      if (m > 0)
        for (int j = 0; j < m; ++j) v[j] -= (Rational(m) / n) * prim[m - 1][j];
      prim.push_back(v);
    }
    for (int m = 0; m <= M; ++m) {
      const Rational& c = f.coeff(n, m);
      if (c == 0) continue;
      for (int j = 0; j <= m; ++j)
        if (prim[m][j] != 0) F.add_to(n, j, c * prim[m][j]);
    }
  }
  return F;
}

void shuffle_words(const SymWord& x, const SymWord& y, std::vector<SymWord>& out) {
  SymWord cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
    if (i == x.size() && j == y.size()) {
      out.push_back(cur);
      return;
    }
    if (i < x.size()) {
      cur.push_back(x[i]);
      rec(i + 1, j);
      cur.pop_back();
    }
    if (j < y.size()) {
      cur.push_back(y[j]);
      rec(i, j + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
}

}  // namespace

QSeriesL iter_integral_oracle(const std::vector<QSeriesL>& fs) {
  int n = static_cast<int>(fs.size());
  int N = fs.empty() ? 0 : fs[0].q_order();
  for (const auto& f : fs) N = std::min(N, f.q_order());
  int M = n;
  std::vector<QSeriesL> full, inf;
  std::vector<Rational> cinf;
  for (const auto& f : fs) {
    full.push_back(f.truncate(N, M));
    cinf.push_back(f.coeff(0, 0));
    inf.push_back(QSeriesL::constant(N, M, f.coeff(0, 0)));
  }
  // Regularized integral over tau <= t1 <= ... <= tk <= i*infinity, (2 pi i)^k absorbed.
  std::map<SymWord, QSeriesL> memo;
  std::function<QSeriesL(const SymWord&, std::size_t)> J = [&](const SymWord& w, std::size_t from) -> QSeriesL {
    if (from == w.size()) return QSeriesL::constant(N, M, 1);
    SymWord key(w.begin() + static_cast<std::ptrdiff_t>(from), w.end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const Sym& s = w[from];
    const QSeriesL& g = s.inf ? inf[s.idx] : full[s.idx];
    QSeriesL r = -oracle_primitive(g * J(w, from + 1)).truncate(N, M);
    memo.emplace(std::move(key), r);
    return r;
  };
  QSeriesL total(N, M);
  Integer fact = 1;
  for (int i = 0; i <= n; ++i) {
    // R[f1 | ... | fi]
    QSeriesL Ri(N, M);
    for (int j = 0; j <= i; ++j) {
      SymWord head, tail;
      for (int t = 0; t < j; ++t) head.push_back({t, false});
      for (int t = i - 1; t >= j; --t) tail.push_back({t, true});
      std::vector<SymWord> words;
      shuffle_words(head, tail, words);
      QSeriesL part(N, M);
      for (const auto& w : words) part += J(w, 0);
      if ((i - j) % 2) part = -part;
      Ri += part;
    }
    // integral from tau to 0 of [f_{i+1}^inf | ... | f_n^inf] = prod c * (-L)^{n-i} / (n-i)!
    int k = n - i;
    Rational c = 1;
    for (int t = i; t < n; ++t) c *= cinf[t];
    Rational coef = c / Rational(factorial(k));
    if (k % 2) coef = -coef;
    total += Ri * QSeriesL::monomial(N, M, 0, k, coef);
  }
  return total;
}

int index_weight(const EisIndex& k) {
  int w = 0;
  for (int x : k) w += 2 * x + 1;
  return w;
}

std::vector<EisIndex> indices_up_to_weight(int w) {
  std::vector<EisIndex> out{{}};
  std::function<void(EisIndex&, int)> rec = [&](EisIndex& cur, int left) {
    for (int k = 0; 2 * k + 1 <= left; ++k) {
      cur.push_back(k);
      out.push_back(cur);
      rec(cur, left - (2 * k + 1));
      cur.pop_back();
    }
  };
  EisIndex cur;
  rec(cur, w);
  std::stable_sort(out.begin(), out.end(), [](const EisIndex& x, const EisIndex& y) {
    int wx = index_weight(x), wy = index_weight(y);
    return wx != wy ? wx < wy : x < y;
  });
  return out;
}

std::string index_to_string(const EisIndex& k) {
  std::ostringstream os;
  for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  return os.str();
}

EisIndex parse_index(const std::string& s) {
  EisIndex k;
  if (s.empty()) return k;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw std::invalid_argument("bad index literal: " + s);
    k.push_back(std::stoi(tok));
  }
  return k;
}

QSeriesL IterEisCache::get(const EisIndex& k) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
  }
  QSeriesL I;
  if (k.empty()) {
    I = QSeriesL::constant(N_, 0, 1);
  } else {
    EisIndex rest(k.begin() + 1, k.end());
    QSeriesL tail = get(rest);
    QSeriesL f = eisenstein_q(k[0], N_).truncate(N_, tail.l_degree());
    I = -primitive_dlog(f * tail);
  }
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(k, I);
  return I;
}

QSeriesL IterEisCache::oracle(const EisIndex& k) const {
  std::vector<QSeriesL> fs;
  for (int x : k) fs.push_back(eisenstein_q(x, N_));
  return iter_integral_oracle(fs);
}

bool g_coefficient_identity_check(int k, const std::vector<int>& primes, int N) {
  QSeriesL F = primitive_dlog(eisenstein_q0(k, N));
  for (int p : primes) {
    if (!is_prime(p)) throw std::domain_error("g_coefficient_identity_check expects primes");
    if (p > N) throw std::domain_error("prime exceeds the q-order");
    Integer pp;
    mpz_ui_pow_ui(pp.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(2 * k - 1));
    Rational expect(pp + 1, p);
    expect.canonicalize();
    if (F.coeff(p, 0) != expect) return false;
  }
  return true;
}

RankCheck rank_check(const std::vector<EisIndex>& indices, int N, int M) {
  RankCheck rc;
  rc.slots = (N + 1) * (M + 1);
  rc.truncation_too_small = rc.slots < static_cast<int>(indices.size());
  IterEisCache cache(N);
  RationalMatrix m(0, rc.slots);
  for (const auto& k : indices) {
    if (static_cast<int>(k.size()) > M) throw std::domain_error("rank_check: L-degree cap below index length");
    QSeriesL s = cache.get(k).truncate(N, M);
    std::vector<Rational> row;
    for (int n = 0; n <= N; ++n)
      for (int mm = 0; mm <= M; ++mm) row.push_back(s.coeff(n, mm));
    m.append_row(row);
  }
  rc.rank = rank(m);
  return rc;
}

GAction g_action_on_a(int W, int N) {
  GAction g;
  g.weight_cap = W;
  g.N = N;
  std::vector<Derivation> eps;
  for (int k = 0; 2 * k + 1 <= W; ++k) eps.push_back(epsilon_tilde(2 * k, W));
  std::vector<std::pair<EisIndex, NCPoly>> comps;
  std::function<void(const NCPoly&, EisIndex&)> rec = [&](const NCPoly& p, EisIndex& idx) {
    comps.push_back({idx, p});
    int w = p.max_weight();
    for (int k = 0; k < static_cast<int>(eps.size()) && w + 2 * k <= W; ++k) {
      NCPoly q = apply(eps[k], p);
      if (q.is_zero()) continue;
      idx.insert(idx.begin(), k);
      rec(q, idx);
      idx.erase(idx.begin());
    }
  };
  EisIndex empty;
  rec(NCPoly::a(W), empty);
  int M = 0;
  for (const auto& [k, p] : comps) M = std::max(M, static_cast<int>(k.size()));
  g.M = M;
  g.index_count = comps.size();
  IterEisCache cache(N);
  for (const auto& [k, p] : comps) {
    QSeriesL G = cache.get(k).truncate(N, M);
    for (const auto& [w, c] : p.terms()) {
      auto it = g.terms.find(w);
      if (it == g.terms.end()) it = g.terms.emplace(w, QSeriesL(N, M)).first;
      it->second += G * c;
    }
  }
  for (auto it = g.terms.begin(); it != g.terms.end();) {
    if (it->second.is_zero())
      it = g.terms.erase(it);
    else
      ++it;
  }
  return g;
}

bool g_action_residual_zero(const GAction& g) {
  int W = g.weight_cap, N = g.N, M = g.M;
  std::map<Word, QSeriesL, ShortLex> res;
  auto acc = [&](const Word& w, const QSeriesL& s) {
    auto it = res.find(w);
    if (it == res.end()) it = res.emplace(w, QSeriesL(N, M)).first;
    it->second += s;
  };
  for (const auto& [w, s] : g.terms) acc(w, s.derivative());
  for (int k = 0; 2 * k + 1 <= W; ++k) {
    Derivation e = epsilon_tilde(2 * k, W);
    QSeriesL G = eisenstein_q(k, N).truncate(N, M);
    for (const auto& [w, s] : g.terms) {
      NCPoly img = apply(e, NCPoly::word(w, 1, W));
      if (img.is_zero()) continue;
      QSeriesL Gs = G * s;
      for (const auto& [u, c] : img.terms()) acc(u, Gs * c);
    }
  }
  for (const auto& [w, s] : res)
    if (!s.is_zero()) return false;
  return true;
}

bool g_log_is_lie(int W0, int N) {
  using LWord = std::vector<int>;
  using LSeries = std::map<LWord, QSeriesL>;
  auto indices = indices_up_to_weight(W0);
  int M = 0;
  for (const auto& k : indices) M = std::max(M, static_cast<int>(k.size()));
  IterEisCache cache(N);
  LSeries gm1;  // g - 1
  for (const auto& k : indices) {
    if (k.empty()) continue;
    QSeriesL s = cache.get(k).truncate(N, M);
    if (!s.is_zero()) gm1.emplace(k, s);
  }
  auto add = [&](LSeries& x, const LWord& w, const QSeriesL& s) {
    auto it = x.find(w);
    if (it == x.end())
      x.emplace(w, s);
    else
      it->second += s;
  };
  auto mul = [&](const LSeries& x, const LSeries& y) {
    LSeries r;
    for (const auto& [u, su] : x)
      for (const auto& [v, sv] : y) {
        LWord w = u;
        w.insert(w.end(), v.begin(), v.end());
        if (index_weight(w) > W0) continue;
        add(r, w, su * sv);
      }
    return r;
  };
  LSeries log, power = gm1;
  for (int n = 1; !power.empty(); ++n) {
    for (const auto& [w, s] : power) add(log, w, s * Rational(n % 2 ? 1 : -1, n));
    power = mul(power, gm1);
  }
  // Dynkin: theta(w) = [[w1, w2], ...], Lie iff theta(p) = sum len(w) p_w w.
  LSeries theta;
  for (const auto& [w, s] : log) {
    std::map<LWord, Rational> cur{{LWord{w[0]}, Rational(1)}};
    for (std::size_t i = 1; i < w.size(); ++i) {
      std::map<LWord, Rational> next;
      for (const auto& [u, c] : cur) {
        LWord l = u, r{w[i]};
        l.push_back(w[i]);
        r.insert(r.end(), u.begin(), u.end());
        next[l] += c;
        next[r] -= c;
      }
      cur.clear();
      for (auto& [u, c] : next)
        if (c != 0) cur.emplace(u, c);
    }
    for (const auto& [u, c] : cur) add(theta, u, s * c);
  }
  for (const auto& [w, s] : log) add(theta, w, s * Rational(-static_cast<long>(w.size())));
  for (const auto& [w, s] : theta)
    if (!s.is_zero()) return false;
  return true;
}

}  // namespace mk
