#pragma once

#include <string>
#include <vector>

#include "mouldkit/rational.hpp"

namespace mk {

// Truncated sum of c(n,m) q^n L^m, 0 <= n <= N, 0 <= m <= M, with L = log q.
class QSeriesL {
 public:
  QSeriesL() : QSeriesL(0, 0) {}
  QSeriesL(int N, int M);
  static QSeriesL constant(int N, int M, const Rational& c);
  static QSeriesL monomial(int N, int M, int n, int m, const Rational& c);

  int q_order() const { return N_; }
  int l_degree() const { return M_; }
  const Rational& coeff(int n, int m) const;
  void set(int n, int m, const Rational& c);
  void add_to(int n, int m, const Rational& c);
  bool is_zero() const;
  // Highest L power with a nonzero coefficient, -1 if zero.
  int max_l_power() const;

  QSeriesL truncate(int N, int M) const;
  // (q d/dq + d/dL) applied termwise.
  QSeriesL derivative() const;
  // Part with n = 0.
  QSeriesL q0_part() const;

  QSeriesL operator-() const;
  QSeriesL& operator+=(const QSeriesL& o);
  QSeriesL& operator-=(const QSeriesL& o);
  QSeriesL& operator*=(const Rational& c);
  friend QSeriesL operator+(const QSeriesL& a, const QSeriesL& b);
  friend QSeriesL operator-(const QSeriesL& a, const QSeriesL& b);
  friend QSeriesL operator*(const QSeriesL& a, const QSeriesL& b);
  friend QSeriesL operator*(QSeriesL a, const Rational& c) { return a *= c; }
  friend QSeriesL operator*(const Rational& c, QSeriesL a) { return a *= c; }
  // Equal as truncated series at the common (minimum) truncation.
  friend bool operator==(const QSeriesL& a, const QSeriesL& b);
  friend bool operator!=(const QSeriesL& a, const QSeriesL& b) { return !(a == b); }

  struct Term {
    int n, m;
    Rational c;
  };
  std::vector<Term> nonzero_terms() const;
  std::string to_string() const;

 private:
  int N_, M_;
  std::vector<Rational> c_;
  std::size_t idx(int n, int m) const { return static_cast<std::size_t>(n) * (M_ + 1) + m; }
};

QSeriesL qseries_add(const QSeriesL& a, const QSeriesL& b);
QSeriesL qseries_mul(const QSeriesL& a, const QSeriesL& b);
QSeriesL qseries_scale(const QSeriesL& a, const Rational& c);

}  // namespace mk
