#pragma once

#include <vector>

#include "mouldkit/rational.hpp"

namespace mk {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);
  static RationalMatrix identity(int n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::vector<Rational> row(int i) const;
  void append_row(const std::vector<Rational>& r);

  friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.e_ == y.e_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

struct RrefResult {
  RationalMatrix matrix;
  std::vector<int> pivots;
};

RrefResult rref(const RationalMatrix& m);
int rank(const RationalMatrix& m);
// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);
// span(a) == span(b) for families of equal-length vectors.
bool same_span(const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b);

}  // namespace mk
