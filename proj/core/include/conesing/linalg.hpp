#pragma once

// Dense exact linear algebra over Q.

#include "conesing/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace conesing {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  void append_row(std::span<const Rational> values);

  std::vector<Rational> multiply(std::span<const Rational> x) const;
  RationalMatrix transposed() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form; `pivots` lists the pivot column of each nonzero row.
struct EchelonForm {
  RationalMatrix matrix;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

EchelonForm row_reduce(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

/// Solution of a square nonsingular system; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(const RationalMatrix& a, std::span<const Rational> b);

/// Some solution of a (possibly non-square) consistent system, free variables
/// set to zero; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_any(const RationalMatrix& a, std::span<const Rational> b);

/// Basis of {x : a x = 0}.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& a);

/// Leading principal minors of -m all positive.
bool is_negative_definite(const RationalMatrix& m);

}  // namespace conesing
