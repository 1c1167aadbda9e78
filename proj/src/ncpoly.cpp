#include "mouldkit/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "mouldkit/arith.hpp"

namespace mk {

namespace {

void check_word(const Word& w) {
  for (char c : w)
    if (c != 'a' && c != 'b') throw std::invalid_argument("words use only the letters a and b");
}

std::string strip(const std::string& s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r += c;
  return r;
}

// Splits "x+y-z" into signed terms.
std::vector<std::pair<int, std::string>> split_terms(const std::string& s, const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw std::invalid_argument("bad literal: " + text);
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    if (j == i) throw std::invalid_argument("bad literal: " + text);
    out.emplace_back(sign, s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

NCPoly NCPoly::word(const Word& w, const Rational& c, int cap) {
  check_word(w);
  NCPoly p(cap);
  p.add_term(w, c);
  return p;
}

Rational NCPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0 || static_cast<int>(w.size()) > cap_) return;
  auto [it, ins] = terms_.emplace(w, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int NCPoly::min_weight() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.size()); }
int NCPoly::max_weight() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.size()); }
bool NCPoly::is_homogeneous() const { return min_weight() == max_weight(); }

NCPoly NCPoly::homogeneous(int weight) const {
  NCPoly r(cap_);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) == weight) r.terms_.emplace_hint(r.terms_.end(), w, c);
  return r;
}

NCPoly NCPoly::depth_part(int d) const {
  NCPoly r(cap_);
  for (const auto& [w, c] : terms_)
    if (std::count(w.begin(), w.end(), 'b') == d) r.terms_.emplace_hint(r.terms_.end(), w, c);
  return r;
}

NCPoly NCPoly::truncate(int cap) const {
  NCPoly r(cap);
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) <= cap) r.terms_.emplace_hint(r.terms_.end(), w, c);
  return r;
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  if (o.cap_ < cap_) *this = truncate(o.cap_);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  if (o.cap_ < cap_) *this = truncate(o.cap_);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPoly operator*(const NCPoly& x, const NCPoly& y) {
  NCPoly r(std::min(x.cap_, y.cap_));
  for (const auto& [u, cu] : x.terms_) {
    if (static_cast<int>(u.size()) > r.cap_) break;
    for (const auto& [v, cv] : y.terms_) {
      if (static_cast<int>(u.size() + v.size()) > r.cap_) break;
      r.add_term(u + v, cu * cv);
    }
  }
  return r;
}

bool operator==(const NCPoly& x, const NCPoly& y) {
  int cap = std::min(x.cap_, y.cap_);
  if (x.cap_ == cap && y.cap_ == cap) return x.terms_ == y.terms_;
  return x.truncate(cap).terms_ == y.truncate(cap).terms_;
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational a = abs(c);
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    if (w.empty()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << w;
    }
  }
  return os.str();
}

NCPoly NCPoly::parse(const std::string& text, int cap) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty polynomial literal");
  NCPoly p(cap);
  if (s == "0") return p;
  for (const auto& [sign, t] : split_terms(s, text)) {
    Rational coef = sign;
    Word w;
    std::size_t star = t.find('*');
    std::string cpart, wpart;
    if (star != std::string::npos) {
      cpart = t.substr(0, star);
      wpart = t.substr(star + 1);
    } else if (std::isdigit(static_cast<unsigned char>(t[0]))) {
      cpart = t;
    } else {
      wpart = t;
    }
    if (!cpart.empty()) coef *= parse_rational(cpart);
    for (char c : wpart)
      if (c != 'a' && c != 'b') throw std::invalid_argument("bad word in literal: " + text);
    if (star != std::string::npos && wpart.empty()) throw std::invalid_argument("bad literal: " + text);
    p.add_term(wpart, coef);
  }
  return p;
}

CPoly CPoly::mono(const Mono& m, const Rational& c, int cap) {
  CPoly p(cap);
  p.add_term(m, c);
  return p;
}

Rational CPoly::coeff(const Mono& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int CPoly::weight(const Mono& m) {
  int s = 0;
  for (int k : m) s += k;
  return s;
}

void CPoly::add_term(const Mono& m, const Rational& c) {
  for (int k : m)
    if (k < 1) throw std::invalid_argument("c-letters have index >= 1");
  if (c == 0 || weight(m) > cap_) return;
  auto [it, ins] = terms_.emplace(m, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CPoly CPoly::operator-() const {
  CPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

CPoly& CPoly::operator+=(const CPoly& o) {
  cap_ = std::min(cap_, o.cap_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) { return *this += -o; }

CPoly& CPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

CPoly operator*(const CPoly& x, const CPoly& y) {
  CPoly r(std::min(x.cap_, y.cap_));
  for (const auto& [m1, c1] : x.terms_)
    for (const auto& [m2, c2] : y.terms_) {
      CPoly::Mono m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      r.add_term(m, c1 * c2);
    }
  return r;
}

std::string CPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Mono, Rational>> items(terms_.begin(), terms_.end());
  std::stable_sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    int wx = weight(x.first), wy = weight(y.first);
    if (wx != wy) return wx < wy;
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : items) {
    Rational a = abs(c);
    if (c < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    if (m.empty()) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "*" : "") << "c" << m[i];
  }
  return os.str();
}

CPoly CPoly::parse(const std::string& text, int cap) {
  std::string s = strip(text);
  if (s.empty()) throw std::invalid_argument("empty polynomial literal");
  CPoly p(cap);
  if (s == "0") return p;
  for (const auto& [sign, t] : split_terms(s, text)) {
    Rational coef = sign;
    Mono m;
    std::size_t i = 0;
    while (i <= t.size()) {
      std::size_t j = t.find('*', i);
      if (j == std::string::npos) j = t.size();
      std::string f = t.substr(i, j - i);
      if (f.empty()) throw std::invalid_argument("bad literal: " + text);
      if (f[0] == 'c') {
        std::string num = f.substr(1);
        if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          throw std::invalid_argument("bad c-letter in literal: " + text);
        m.push_back(std::stoi(num));
      } else {
        coef *= parse_rational(f);
      }
      i = j + 1;
    }
    p.add_term(m, coef);
  }
  return p;
}

NCPoly lie_bracket(const NCPoly& p, const NCPoly& q) { return p * q - q * p; }

NCPoly ad_pow(const NCPoly& x, int n, const NCPoly& y) {
  if (n < 0) throw std::domain_error("ad_pow requires n >= 0");
  NCPoly r = y;
  for (int i = 0; i < n && !r.is_zero(); ++i) r = lie_bracket(x, r);
  return r;
}

NCPoly dynkin(const NCPoly& p) {
  NCPoly r(p.cap());
  for (const auto& [w, c] : p.terms()) {
    if (w.empty()) continue;
    std::map<Word, Rational> cur{{w.substr(0, 1), Rational(1)}};
    for (std::size_t i = 1; i < w.size(); ++i) {
      std::map<Word, Rational> next;
      char x = w[i];
      for (const auto& [u, cu] : cur) {
        next[u + x] += cu;
        next[x + u] -= cu;
      }
      cur.clear();
      for (auto& [u, cu] : next)
        if (cu != 0) cur.emplace(u, cu);
    }
    for (const auto& [u, cu] : cur) r.add_term(u, c * cu);
  }
  return r;
}

bool is_lie(const NCPoly& p) {
  if (p.coeff("") != 0) return false;
  NCPoly theta = dynkin(p);
  for (int n = p.min_weight(); n >= 1 && n <= p.max_weight(); ++n) {
    NCPoly pn = p.homogeneous(n);
    if (theta.homogeneous(n) != pn * Rational(n)) return false;
  }
  return true;
}

NCPoly c_letter(int k, int cap) {
  if (k < 1) throw std::domain_error("c-letter index >= 1");
  return ad_pow(NCPoly::a(cap), k - 1, NCPoly::b(cap));
}

NCPoly expand_c(const CPoly& p) {
  NCPoly r(p.cap());
  std::map<int, NCPoly> letters;
  for (const auto& [m, c] : p.terms()) {
    NCPoly t = NCPoly::one(p.cap());
    for (int k : m) {
      auto it = letters.find(k);
      if (it == letters.end()) it = letters.emplace(k, c_letter(k, p.cap())).first;
      t = t * it->second;
    }
    r += t * c;
  }
  return r;
}

CPoly to_c_coordinates(const NCPoly& p) {
  CPoly out(p.cap());
  NCPoly rem = p;
  std::map<int, NCPoly> letters;
  while (!rem.is_zero()) {
    auto [w, c] = *rem.terms().begin();  // shortest, then lex-smallest = lex-largest under a > b
    if (w.empty()) {
      out.add_term({}, c);
      rem.add_term(w, -c);
      continue;
    }
    if (w.back() != 'b') throw NotRepresentable("not in the c-span: leading word " + w);
    CPoly::Mono m;
    int run = 0;
    for (char ch : w) {
      if (ch == 'a') {
        ++run;
      } else {
        m.push_back(run + 1);
        run = 0;
      }
    }
    NCPoly t = NCPoly::one(p.cap());
    for (int k : m) {
      auto it = letters.find(k);
      if (it == letters.end()) it = letters.emplace(k, c_letter(k, p.cap())).first;
      t = t * it->second;
    }
    rem -= t * c;
    out.add_term(m, c);
  }
  return out;
}

std::vector<int> word_to_blocks(const Word& w) {
  std::vector<int> blocks{0};
  for (char c : w) {
    if (c == 'a')
      ++blocks.back();
    else if (c == 'b')
      blocks.push_back(0);
    else
      throw std::invalid_argument("bad letter");
  }
  return blocks;
}

Word blocks_to_word(const std::vector<int>& blocks) {
  Word w;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) w += 'b';
    w.append(static_cast<std::size_t>(blocks[i]), 'a');
  }
  return w;
}

NCPoly push_word(const NCPoly& p) {
  NCPoly r(p.cap());
  for (const auto& [w, c] : p.terms()) {
    auto bl = word_to_blocks(w);
    std::rotate(bl.rbegin(), bl.rbegin() + 1, bl.rend());
    r.add_term(blocks_to_word(bl), c);
  }
  return r;
}

bool is_push_invariant_series(const NCPoly& p) { return push_word(p) == p; }

NCPoly ber_apply(const NCPoly& x, const NCPoly& y, int W) {
  NCPoly xt = x.truncate(W), cur = y.truncate(W);
  NCPoly r(W);
  Integer fact = 1;
  for (int m = 0; !cur.is_zero() && m <= W; ++m) {
    if (m > 0) fact *= m;
    Rational b = bernoulli(m);
    if (b != 0) r += cur * (b / Rational(fact));
    cur = lie_bracket(xt, cur);
  }
  return r;
}

TElements t_elements(int W) {
  if (W < 2) throw std::domain_error("t_elements requires W >= 2");
  NCPoly a = NCPoly::a(W), b = NCPoly::b(W);
  TElements t;
  t.t01 = ber_apply(b, -a, W);
  t.t02 = ber_apply(-b, a, W);
  t.t12 = lie_bracket(a, b);
  t.t01prime = t.t01 + t.t12 * Rational(1, 2);
  return t;
}

NCPoly shuffle_product(const Word& w1, const Word& w2) {
  check_word(w1);
  check_word(w2);
  std::function<void(std::size_t, std::size_t, Word&, NCPoly&)> rec = [&](std::size_t i, std::size_t j, Word& cur, NCPoly& out) {
    if (i == w1.size() && j == w2.size()) {
      out.add_term(cur, 1);
      return;
    }
    if (i < w1.size()) {
      cur.push_back(w1[i]);
      rec(i + 1, j, cur, out);
      cur.pop_back();
    }
    if (j < w2.size()) {
      cur.push_back(w2[j]);
      rec(i, j + 1, cur, out);
      cur.pop_back();
    }
  };
  NCPoly out;
  Word cur;
  rec(0, 0, cur, out);
  return out;
}

std::vector<LieBasisElement> lie_basis(int W) {
  std::vector<Word> words;
  if (W >= 1) {
    // Duval's generation of Lyndon words over {a < b}.
    Word w = "a";
    while (!w.empty()) {
      words.push_back(w);
      Word x;
      for (int i = 0; i < W; ++i) x += w[i % w.size()];
      while (!x.empty() && x.back() == 'b') x.pop_back();
      if (x.empty()) break;
      x.back() = 'b';
      w = x;
    }
  }
  auto is_lyndon = [](const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
      if (!(w < w.substr(i))) return false;
    return !w.empty();
  };
  std::map<Word, NCPoly> cache;
  std::function<NCPoly(const Word&)> bracketing = [&](const Word& w) -> NCPoly {
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    NCPoly r;
    if (w.size() == 1) {
      r = NCPoly::word(w);
    } else {
      std::size_t split = 1;
      for (std::size_t i = 1; i < w.size(); ++i)
        if (is_lyndon(w.substr(i))) {
          split = i;
          break;
        }
      r = lie_bracket(bracketing(w.substr(0, split)), bracketing(w.substr(split)));
    }
    cache.emplace(w, r);
    return r;
  };
  std::sort(words.begin(), words.end(), ShortLex());
  std::vector<LieBasisElement> out;
  for (const auto& w : words) out.push_back({w, bracketing(w).truncate(W)});
  return out;
}

}  // namespace mk
