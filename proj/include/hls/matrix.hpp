#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hls/rational.hpp"

namespace hls {

// Dense exact-rational matrix, row major. Sizes here are tiny (algebra
// dimension squared at most), so clarity beats sparsity.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;
  void set_row(int i, const Vec& v);

  bool is_zero() const;
  bool operator==(const Matrix& other) const;
  bool operator!=(const Matrix& other) const { return !(*this == other); }

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Rat& c) const;
  Matrix transpose() const;
  Matrix pow(int e) const;  // e >= 0

  // this * v with v as a column vector.
  Vec apply(const Vec& v) const;
  // v^T * this with v as a row vector.
  Vec apply_left(const Vec& v) const;

  Rat trace() const;

  std::string str() const;  // multi-line, for diagnostics

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Reduced row echelon form with zero rows dropped. Pivots are exactly 1,
// pivot columns are cleared above and below, pivot columns strictly increase.
// The empty matrix (0 rows) is the RREF of any zero matrix.
Matrix rref(const Matrix& m);

int rank(const Matrix& m);

// Basis of the right null space {v : m v = 0}, returned as RREF rows.
Matrix kernel_basis(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

// One exact solution of A x = b, or nullopt when inconsistent. When the
// solution space is positive-dimensional the free variables are set to 0.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

}  // namespace hls
