#include "mouldkit/matrix.hpp"

#include <stdexcept>

namespace mk {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::domain_error("matrix dimensions must be >= 0");
  e_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix m(0, rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<Rational> RationalMatrix::row(int i) const {
  return std::vector<Rational>(e_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
                               e_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_);
}

void RationalMatrix::append_row(const std::vector<Rational>& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(r.size());
  if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("row length mismatch");
  e_.insert(e_.end(), r.begin(), r.end());
  ++rows_;
}

RrefResult rref(const RationalMatrix& m) {
  RrefResult res{m, {}};
  RationalMatrix& a = res.matrix;
  int prow = 0;
  for (int col = 0; col < a.cols() && prow < a.rows(); ++col) {
    int sel = -1;
    for (int i = prow; i < a.rows(); ++i)
      if (a.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != prow)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(prow, j));
    Rational inv = 1 / a.at(prow, col);
    for (int j = col; j < a.cols(); ++j) a.at(prow, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == prow || a.at(i, col) == 0) continue;
      Rational f = a.at(i, col);
      for (int j = col; j < a.cols(); ++j)
        if (a.at(prow, j) != 0) a.at(i, j) -= f * a.at(prow, j);
    }
    res.pivots.push_back(col);
    ++prow;
  }
  return res;
}

int rank(const RationalMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.matrix.at(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool same_span(const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b) {
  auto ra = rank(RationalMatrix::from_rows(a));
  auto rb = rank(RationalMatrix::from_rows(b));
  auto both = a;
  both.insert(both.end(), b.begin(), b.end());
  auto rab = rank(RationalMatrix::from_rows(both));
  return ra == rab && rb == rab;
}

}  // namespace mk
