#include "mouldkit/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mk {

QSeriesL::QSeriesL(int N, int M) : N_(N), M_(M) {
  if (N < 0 || M < 0) throw std::domain_error("QSeriesL caps must be >= 0");
  c_.assign(static_cast<std::size_t>(N + 1) * (M + 1), Rational(0));
}

QSeriesL QSeriesL::constant(int N, int M, const Rational& c) { return monomial(N, M, 0, 0, c); }

QSeriesL QSeriesL::monomial(int N, int M, int n, int m, const Rational& c) {
  QSeriesL s(N, M);
  if (n <= N && m <= M) s.set(n, m, c);
  return s;
}

const Rational& QSeriesL::coeff(int n, int m) const {
  static const Rational zero(0);
  if (n < 0 || m < 0 || n > N_ || m > M_) return zero;
  return c_[idx(n, m)];
}

void QSeriesL::set(int n, int m, const Rational& c) {
  if (n < 0 || m < 0 || n > N_ || m > M_) throw std::out_of_range("QSeriesL index out of range");
  c_[idx(n, m)] = c;
}

void QSeriesL::add_to(int n, int m, const Rational& c) {
  if (n < 0 || m < 0 || n > N_ || m > M_) throw std::out_of_range("QSeriesL index out of range");
  c_[idx(n, m)] += c;
}

bool QSeriesL::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

int QSeriesL::max_l_power() const {
  for (int m = M_; m >= 0; --m)
    for (int n = 0; n <= N_; ++n)
      if (c_[idx(n, m)] != 0) return m;
  return -1;
}

QSeriesL QSeriesL::truncate(int N, int M) const {
  QSeriesL r(N, M);
  for (int n = 0; n <= std::min(N, N_); ++n)
    for (int m = 0; m <= std::min(M, M_); ++m) r.c_[r.idx(n, m)] = c_[idx(n, m)];
  return r;
}

QSeriesL QSeriesL::derivative() const {
  QSeriesL r(N_, M_);
  for (int n = 0; n <= N_; ++n)
    for (int m = 0; m <= M_; ++m) {
      const Rational& c = c_[idx(n, m)];
      if (c == 0) continue;
      if (n > 0) r.c_[r.idx(n, m)] += c * n;
      if (m > 0) r.c_[r.idx(n, m - 1)] += c * m;
    }
  return r;
}

QSeriesL QSeriesL::q0_part() const {
  QSeriesL r(N_, M_);
  for (int m = 0; m <= M_; ++m) r.c_[r.idx(0, m)] = c_[idx(0, m)];
  return r;
}

QSeriesL QSeriesL::operator-() const {
  QSeriesL r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

QSeriesL& QSeriesL::operator+=(const QSeriesL& o) { return *this = *this + o; }
QSeriesL& QSeriesL::operator-=(const QSeriesL& o) { return *this = *this - o; }

QSeriesL& QSeriesL::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

QSeriesL operator+(const QSeriesL& a, const QSeriesL& b) {
  int N = std::min(a.N_, b.N_), M = std::min(a.M_, b.M_);
  QSeriesL r(N, M);
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= M; ++m) r.c_[r.idx(n, m)] = a.c_[a.idx(n, m)] + b.c_[b.idx(n, m)];
  return r;
}

QSeriesL operator-(const QSeriesL& a, const QSeriesL& b) { return a + (-b); }

QSeriesL operator*(const QSeriesL& a, const QSeriesL& b) {
  int N = std::min(a.N_, b.N_), M = std::min(a.M_, b.M_);
  QSeriesL r(N, M);
  Rational t;
  for (int n1 = 0; n1 <= N; ++n1)
    for (int m1 = 0; m1 <= M; ++m1) {
      const Rational& x = a.c_[a.idx(n1, m1)];
      if (x == 0) continue;
      for (int n2 = 0; n1 + n2 <= N; ++n2)
        for (int m2 = 0; m1 + m2 <= M; ++m2) {
          const Rational& y = b.c_[b.idx(n2, m2)];
          if (y == 0) continue;
          t = x * y;
          r.c_[r.idx(n1 + n2, m1 + m2)] += t;
        }
    }
  return r;
}

bool operator==(const QSeriesL& a, const QSeriesL& b) {
  int N = std::min(a.N_, b.N_), M = std::min(a.M_, b.M_);
  for (int n = 0; n <= N; ++n)
    for (int m = 0; m <= M; ++m)
      if (a.c_[a.idx(n, m)] != b.c_[b.idx(n, m)]) return false;
  return true;
}

std::vector<QSeriesL::Term> QSeriesL::nonzero_terms() const {
  std::vector<Term> r;
  for (int n = 0; n <= N_; ++n)
    for (int m = 0; m <= M_; ++m)
      if (c_[idx(n, m)] != 0) r.push_back({n, m, c_[idx(n, m)]});
  return r;
}

std::string QSeriesL::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : nonzero_terms()) {
    Rational a = abs(t.c);
    if (t.c < 0)
      os << "-";
    else if (!first)
      os << "+";
    first = false;
    bool mono = t.n != 0 || t.m != 0;
    if (!mono || a != 1) {
      os << a.get_str();
      if (mono) os << "*";
    }
    if (t.n > 0) {
      os << "q";
      if (t.n > 1) os << "^" << t.n;
      if (t.m > 0) os << "*";
    }
    if (t.m > 0) {
      os << "L";
      if (t.m > 1) os << "^" << t.m;
    }
  }
  return first ? "0" : os.str();
}

QSeriesL qseries_add(const QSeriesL& a, const QSeriesL& b) { return a + b; }
QSeriesL qseries_mul(const QSeriesL& a, const QSeriesL& b) { return a * b; }
QSeriesL qseries_scale(const QSeriesL& a, const Rational& c) { return a * c; }

}  // namespace mk
