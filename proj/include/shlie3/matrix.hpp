#pragma once

#include "shlie3/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace shlie3 {

// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Coords>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Coords column(std::size_t c) const;
  Coords row(std::size_t r) const;
  Coords apply(std::span<const Rational> v) const;
  Matrix transpose() const;
  bool is_zero() const;
  // rows [r0, r0+nr) and columns [c0, c0+nc)
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, Matrix m);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};
RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
// columns form a basis of the kernel
Matrix nullspace(const Matrix& m);
// columns form a basis of the column space, chosen among the columns of m
Matrix column_basis(const Matrix& m);
// some X with a X = b, or nullopt
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Coords> solve(const Matrix& a, std::span<const Rational> b);
// throws std::domain_error when singular
Matrix inverse(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace shlie3
