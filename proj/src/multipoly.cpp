#include "mouldkit/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mk {

namespace {

constexpr int shift_of(int i) { return 112 - 8 * i; }

struct KeyHash {
  std::size_t operator()(MultiPoly::Key k) const {
    auto lo = static_cast<std::uint64_t>(k), hi = static_cast<std::uint64_t>(k >> 64);
    return std::hash<std::uint64_t>()(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
  }
};

bool key_divides(MultiPoly::Key d, MultiPoly::Key n, int nvars) {
  for (int i = 0; i < nvars; ++i) {
    auto ed = (d >> shift_of(i)) & 0xff;
    auto en = (n >> shift_of(i)) & 0xff;
    if (ed > en) return false;
  }
  return true;
}

void check_nvars(int n) {
  if (n < 0 || n > MultiPoly::kMaxVars)
    throw std::domain_error("MultiPoly supports at most 15 variables");
}

}  // namespace

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) { check_nvars(nvars); }

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  if (c != 0) p.terms_.emplace(0, c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index out of range");
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  return monomial(nvars, e, 1);
}

MultiPoly MultiPoly::monomial(int nvars, const std::vector<int>& exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != nvars) throw std::invalid_argument("exponent vector length mismatch");
  MultiPoly p(nvars);
  if (c != 0) p.terms_.emplace(pack(exps), c);
  return p;
}

MultiPoly MultiPoly::var_sum(int nvars, int i, int j) {
  MultiPoly p(nvars);
  for (int k = i; k < j; ++k) p += variable(nvars, k);
  return p;
}

MultiPoly::Key MultiPoly::pack(const std::vector<int>& exps) {
  check_nvars(static_cast<int>(exps.size()));
  Key k = 0;
  int deg = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw std::domain_error("negative exponent");
    if (exps[i] > kMaxDegree) throw std::domain_error("exponent too large");
    deg += exps[i];
    k |= static_cast<Key>(exps[i]) << shift_of(static_cast<int>(i));
  }
  if (deg > kMaxDegree) throw std::domain_error("total degree too large");
  return k | (static_cast<Key>(deg) << 120);
}

std::vector<int> MultiPoly::unpack(Key k, int nvars) {
  std::vector<int> e(nvars);
  for (int i = 0; i < nvars; ++i) e[i] = static_cast<int>((k >> shift_of(i)) & 0xff);
  return e;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int MultiPoly::degree() const { return terms_.empty() ? -1 : key_degree(terms_.begin()->first); }

Rational MultiPoly::coeff(const std::vector<int>& exps) const {
  auto it = terms_.find(pack(exps));
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(0);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Rational& MultiPoly::leading_coeff() const {
  if (terms_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

void MultiPoly::add_term(Key k, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly variable count mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (o.nvars_ != nvars_) throw std::invalid_argument("MultiPoly variable count mismatch");
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("MultiPoly variable count mismatch");
  MultiPoly r(a.nvars_);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.degree() + b.degree() > MultiPoly::kMaxDegree) throw std::domain_error("total degree too large");
  if (a.size() == 1 || b.size() == 1) {
    const MultiPoly& m = a.size() == 1 ? a : b;
    const MultiPoly& o = a.size() == 1 ? b : a;
    auto [mk, mc] = *m.terms_.begin();
    for (const auto& [k, c] : o.terms_) r.terms_.emplace_hint(r.terms_.end(), k + mk, c * mc);
    return r;
  }
  std::unordered_map<MultiPoly::Key, Rational, KeyHash> acc;
  acc.reserve(a.size() * b.size());
  Rational t;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      t = ca * cb;
      auto [it, ins] = acc.try_emplace(ka + kb, t);
      if (!ins) it->second += t;
    }
  for (auto& [k, c] : acc)
    if (c != 0) r.terms_.emplace(k, std::move(c));
  return r;
}

bool operator<(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.end() && ib != b.terms_.end();
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative power");
  MultiPoly r = constant(nvars_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitute: arity mismatch");
  int target = images.empty() ? 0 : images[0].nvars();
  for (const auto& im : images)
    if (im.nvars() != target) throw std::invalid_argument("substitute: images disagree on variable count");
  MultiPoly r(target);
  if (terms_.empty()) return r;
  std::vector<std::vector<MultiPoly>> powers(nvars_);
  for (int i = 0; i < nvars_; ++i) powers[i].push_back(constant(target, 1));
  for (const auto& [k, c] : terms_) {
    auto e = unpack(k, nvars_);
    MultiPoly t = constant(target, c);
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
      t = t * powers[i][e[i]];
    }
    r += t;
  }
  return r;
}

MultiPoly MultiPoly::extend(int nvars) const {
  if (nvars < nvars_) throw std::invalid_argument("extend: cannot drop variables");
  MultiPoly r(nvars);
  r.terms_ = terms_;
  return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluate: arity mismatch");
  Rational s = 0;
  for (const auto& [k, c] : terms_) {
    auto e = unpack(k, nvars_);
    Rational t = c;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      t *= p;
    }
    s += t;
  }
  return s;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly r(nvars_);
  for (const auto& [k, c] : terms_)
    if (key_degree(k) == d) r.terms_.emplace(k, c);
  return r;
}

Rational MultiPoly::make_primitive() {
  if (terms_.empty()) return 1;
  Integer g = 0, l = 1;
  for (const auto& [k, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational f(g, l);
  f.canonicalize();
  if (terms_.begin()->second < 0) f = -f;
  for (auto& [k, c] : terms_) c /= f;
  return f;
}

bool MultiPoly::divide_exact(const MultiPoly& d, MultiPoly& q) const {
  if (d.nvars_ != nvars_) throw std::invalid_argument("divide_exact: variable count mismatch");
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  q = MultiPoly(nvars_);
  MultiPoly rem = *this;
  Key dk = d.terms_.begin()->first;
  Rational dc = d.terms_.begin()->second;
  while (!rem.is_zero()) {
    Key rk = rem.terms_.begin()->first;
    if (!key_divides(dk, rk, nvars_)) return false;
    Rational c = rem.terms_.begin()->second / dc;
    Key qk = rk - dk;
    q.add_term(qk, c);
    for (const auto& [k, v] : d.terms_) rem.add_term(k + qk, -c * v);
  }
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    auto e = unpack(k, nvars_);
    Rational a = abs(c);
    bool neg = c < 0;
    if (neg)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    bool mono = k != 0;
    if (!mono || a != 1) {
      os << a.get_str();
      if (mono) os << "*";
    }
    bool firstv = true;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << "u" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

MultiPoly MultiPoly::parse(const std::string& text, int nvars) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial literal");
  MultiPoly r(nvars);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad polynomial literal '" + text + "': " + why);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (i != 0) {
      fail("expected sign");
    }
    if (i >= s.size()) fail("dangling sign");
    Rational coef = 1;
    std::vector<int> e(nvars, 0);
    bool any = false;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (any) {
        if (s[i] != '*') fail("expected '*'");
        ++i;
      }
      if (i >= s.size()) fail("dangling '*'");
      if (s[i] == 'u') {
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) fail("variable index missing");
        int v = std::stoi(s.substr(i, j - i));
        if (v < 1 || v > nvars) fail("variable index out of range");
        i = j;
        int p = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          std::size_t k = i;
          while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
          if (k == i) fail("exponent missing");
          p = std::stoi(s.substr(i, k - i));
          i = k;
        }
        e[v - 1] += p;
      } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        coef *= parse_rational(s.substr(i, j - i));
        i = j;
      } else {
        fail(std::string("unexpected character '") + s[i] + "'");
      }
      any = true;
    }
    if (!any) fail("empty term");
    r += monomial(nvars, e, coef * sign);
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

}  // namespace mk
