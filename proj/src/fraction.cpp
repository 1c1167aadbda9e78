#include "mouldkit/fraction.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mk {

namespace {

// Multiset of factors as sorted vector; merges with max multiplicity.
std::vector<MultiPoly> lcm_factors(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
  std::vector<MultiPoly> r;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      r.push_back(b[j++]);
    } else {
      r.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return r;
}

// Factors of `big` not consumed by `small` (small must be a sub-multiset).
std::vector<MultiPoly> complement(const std::vector<MultiPoly>& big, const std::vector<MultiPoly>& small) {
  std::vector<MultiPoly> r;
  std::size_t j = 0;
  for (const auto& f : big) {
    if (j < small.size() && !(f < small[j]) && !(small[j] < f))
      ++j;
    else
      r.push_back(f);
  }
  return r;
}

MultiPoly product(int nvars, const std::vector<MultiPoly>& fs) {
  MultiPoly r = MultiPoly::constant(nvars, 1);
  for (const auto& f : fs) r = r * f;
  return r;
}

}  // namespace

FormalFraction::FormalFraction(int nvars) : num_(nvars) {}

FormalFraction::FormalFraction(MultiPoly num) : num_(std::move(num)) {}

FormalFraction::FormalFraction(MultiPoly num, const MultiPoly& den) : num_(std::move(num)) {
  if (den.nvars() != num_.nvars()) throw std::invalid_argument("FormalFraction variable count mismatch");
  add_factor(den);
}

FormalFraction FormalFraction::with_factors(MultiPoly num, const std::vector<MultiPoly>& dens) {
  FormalFraction f(std::move(num));
  for (const auto& d : dens) {
    if (d.nvars() != f.nvars()) throw std::invalid_argument("FormalFraction variable count mismatch");
    f.add_factor(d);
  }
  return f;
}

void FormalFraction::add_factor(MultiPoly f) {
  if (f.is_zero()) throw std::domain_error("zero denominator");
  Rational lc = f.leading_coeff();
  num_ *= Rational(1) / lc;
  if (f.is_constant()) return;
  f *= Rational(1) / lc;
  auto it = std::upper_bound(factors_.begin(), factors_.end(), f);
  factors_.insert(it, std::move(f));
}

MultiPoly FormalFraction::den() const { return product(nvars(), factors_); }

FormalFraction FormalFraction::operator-() const {
  FormalFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

FormalFraction& FormalFraction::operator+=(const FormalFraction& o) {
  if (o.nvars() != nvars()) throw std::invalid_argument("FormalFraction variable count mismatch");
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (factors_ == o.factors_) {
    num_ += o.num_;
  } else {
    auto l = lcm_factors(factors_, o.factors_);
    MultiPoly n = num_ * product(nvars(), complement(l, factors_)) + o.num_ * product(nvars(), complement(l, o.factors_));
    num_ = std::move(n);
    factors_ = std::move(l);
  }
  if (num_.is_zero()) factors_.clear();
  return *this;
}

FormalFraction& FormalFraction::operator-=(const FormalFraction& o) { return *this += -o; }

FormalFraction& FormalFraction::operator*=(const Rational& c) {
  num_ *= c;
  if (num_.is_zero()) factors_.clear();
  return *this;
}

FormalFraction operator*(const FormalFraction& a, const FormalFraction& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("FormalFraction variable count mismatch");
  FormalFraction r(a.num_ * b.num_);
  if (r.is_zero()) return r;
  std::vector<MultiPoly> f = a.factors_;
  f.insert(f.end(), b.factors_.begin(), b.factors_.end());
  std::sort(f.begin(), f.end());
  r.factors_ = std::move(f);
  return r;
}

bool FormalFraction::equals(const FormalFraction& o) const {
  return num_ * o.den() == o.num_ * den();
}

FormalFraction FormalFraction::substitute(const std::vector<MultiPoly>& images) const {
  FormalFraction r(num_.substitute(images));
  if (r.is_zero()) return r;
  for (const auto& f : factors_) r.add_factor(f.substitute(images));
  return r;
}

FormalFraction FormalFraction::extend(int nvars) const {
  FormalFraction r(num_.extend(nvars));
  for (const auto& f : factors_) r.factors_.push_back(f.extend(nvars));
  std::sort(r.factors_.begin(), r.factors_.end());
  return r;
}

Rational FormalFraction::evaluate(const std::vector<Rational>& point) const {
  Rational d = 1;
  for (const auto& f : factors_) d *= f.evaluate(point);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  return num_.evaluate(point) / d;
}

bool FormalFraction::to_poly(MultiPoly& out) const {
  MultiPoly cur = num_;
  for (const auto& f : factors_) {
    MultiPoly q;
    if (!cur.divide_exact(f, q)) return false;
    cur = std::move(q);
  }
  out = std::move(cur);
  return true;
}

bool FormalFraction::is_constant(Rational& c) const {
  if (num_.is_zero()) {
    c = 0;
    return true;
  }
  MultiPoly d = den();
  if (num_.degree() != d.degree()) return false;
  c = num_.leading_coeff() / d.leading_coeff();
  return num_ == d * c;
}

FormalFraction& FormalFraction::mul_factor(const MultiPoly& f) {
  if (f.nvars() != nvars()) throw std::invalid_argument("FormalFraction variable count mismatch");
  if (is_zero()) return *this;
  Rational lc = f.leading_coeff();
  MultiPoly monic = f * (Rational(1) / lc);
  auto it = std::lower_bound(factors_.begin(), factors_.end(), monic);
  if (it != factors_.end() && *it == monic) {
    factors_.erase(it);
    num_ *= lc;
  } else {
    num_ = num_ * f;
  }
  return *this;
}

void FormalFraction::cancel() {
  std::vector<MultiPoly> kept;
  for (const auto& f : factors_) {
    MultiPoly q;
    if (num_.divide_exact(f, q))
      num_ = std::move(q);
    else
      kept.push_back(f);
  }
  factors_ = std::move(kept);
}

std::string FormalFraction::to_string() const {
  if (factors_.empty()) return num_.to_string();
  std::ostringstream os;
  os << "(" << num_.to_string() << ")/(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << "*";
    os << "(" << factors_[i].to_string() << ")";
  }
  os << ")";
  return os.str();
}

bool fraction_sum_is_zero(const std::vector<FormalFraction>& fs) {
  if (fs.empty()) return true;
  int n = fs[0].nvars();
  for (const auto& f : fs)
    if (f.nvars() != n) throw std::invalid_argument("fraction_sum_is_zero: variable count mismatch");
  std::map<std::vector<MultiPoly>, MultiPoly> groups;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    auto [it, ins] = groups.try_emplace(f.factors(), f.num());
    if (!ins) it->second += f.num();
  }
  std::vector<std::pair<std::vector<MultiPoly>, MultiPoly>> live;
  for (auto& [k, v] : groups)
    if (!v.is_zero()) live.emplace_back(k, std::move(v));
  if (live.empty()) return true;
  if (live.size() == 1) return false;
  // A nonzero value at a regular point certifies a nonzero sum.
  std::mt19937_64 gen(0x9e3779b97f4a7c15ULL);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Rational> pt(n);
    for (auto& x : pt) x = Rational(static_cast<long>(gen() % 1999) - 999, static_cast<long>(gen() % 97) + 1);
    Rational s = 0;
    bool pole = false;
    for (const auto& [facs, num] : live) {
      Rational d = 1;
      for (const auto& f : facs) d *= f.evaluate(pt);
      if (d == 0) {
        pole = true;
        break;
      }
      s += num.evaluate(pt) / d;
    }
    if (pole) continue;
    if (s != 0) return false;
    break;
  }
  std::vector<MultiPoly> l;
  for (const auto& [facs, num] : live) l = lcm_factors(l, facs);
  MultiPoly total(n);
  for (const auto& [facs, num] : live) total += num * product(n, complement(l, facs));
  return total.is_zero();
}

}  // namespace mk
