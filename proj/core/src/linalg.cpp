#include "conesing/linalg.hpp"

#include "conesing/error.hpp"

#include <utility>

namespace conesing {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  ensure(data_.size() == rows_ * cols_, "matrix data size mismatch");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void RationalMatrix::append_row(std::span<const Rational> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  ensure(values.size() == cols_, "appended row has the wrong length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::vector<Rational> RationalMatrix::multiply(std::span<const Rational> x) const {
  ensure(x.size() == cols_, "matrix-vector size mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

EchelonForm row_reduce(RationalMatrix m) {
  EchelonForm out;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < m.cols() && lead_row < m.rows(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != lead_row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(lead_row, c));
    }
    Rational inv = 1 / m(lead_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(lead_row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, col) == 0) continue;
      Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(lead_row, c);
    }
    out.pivots.push_back(col);
    ++lead_row;
  }
  out.matrix = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).rank(); }

Rational determinant(const RationalMatrix& m) {
  ensure(m.rows() == m.cols(), "determinant of a non-square matrix");
  RationalMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      Rational factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

namespace {

RationalMatrix augment(const RationalMatrix& a, std::span<const Rational> b) {
  ensure(b.size() == a.rows(), "right-hand side size mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  return aug;
}

}  // namespace

std::optional<std::vector<Rational>> solve_any(const RationalMatrix& a, std::span<const Rational> b) {
  EchelonForm e = row_reduce(augment(a, b));
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.matrix(i, a.cols());
  }
  return x;
}

std::optional<std::vector<Rational>> solve_square(const RationalMatrix& a, std::span<const Rational> b) {
  ensure(a.rows() == a.cols(), "solve_square on a non-square matrix");
  EchelonForm e = row_reduce(augment(a, b));
  if (e.rank() != a.cols()) return std::nullopt;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] != i) return std::nullopt;
  }
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i) x[i] = e.matrix(i, a.cols());
  return x;
}

std::vector<std::vector<Rational>> null_space(const RationalMatrix& a) {
  EchelonForm e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.matrix(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_negative_definite(const RationalMatrix& m) {
  ensure(m.rows() == m.cols(), "definiteness of a non-square matrix");
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    RationalMatrix minor(k, k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = -m(r, c);
    }
    if (determinant(minor) <= 0) return false;
  }
  return true;
}

}  // namespace conesing
