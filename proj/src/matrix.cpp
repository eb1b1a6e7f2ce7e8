#include "hls/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace hls {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw std::invalid_argument("row length mismatch in from_rows");
    m.set_row(static_cast<int>(i), rows[i]);
  }
  return m;
}

Vec Matrix::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_row(int i, const Vec& v) {
  for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

bool Matrix::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

bool Matrix::operator==(const Matrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && a_ == other.a_;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("matrix product dimension mismatch");
  Matrix r(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < other.cols_; ++j) r.at(i, j) += x * other.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sum dimension mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + other.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix difference dimension mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - other.a_[i];
  return r;
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::pow(int e) const {
  if (rows_ != cols_) throw std::invalid_argument("pow of non-square matrix");
  Matrix r = identity(rows_);
  for (int k = 0; k < e; ++k) r = r * (*this);
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("apply dimension mismatch");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * v[j];
  return r;
}

Vec Matrix::apply_left(const Vec& v) const {
  if (static_cast<int>(v.size()) != rows_)
    throw std::invalid_argument("apply_left dimension mismatch");
  Vec r(cols_);
  for (int i = 0; i < rows_; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[j] += v[i] * at(i, j);
  }
  return r;
}

Rat Matrix::trace() const {
  Rat t = 0;
  for (int i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
  return t;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << '[';
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << rat_str(at(i, j));
    }
    os << "]\n";
  }
  return os.str();
}

namespace {

// In-place Gauss–Jordan on the first `cols` columns; returns pivot columns.
// Rows beyond `cols` columns (augmentation) are carried along.
std::vector<int> gauss_jordan(Matrix& m, int cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < m.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix rref(const Matrix& m) {
  Matrix work = m;
  std::vector<int> pivots = gauss_jordan(work, m.cols());
  Matrix out(static_cast<int>(pivots.size()), m.cols());
  for (size_t i = 0; i < pivots.size(); ++i) out.set_row(static_cast<int>(i), work.row(static_cast<int>(i)));
  return out;
}

int rank(const Matrix& m) { return rref(m).rows(); }

Matrix kernel_basis(const Matrix& m) {
  Matrix r = rref(m);
  std::vector<int> pivots;
  {
    int c = 0;
    for (int i = 0; i < r.rows(); ++i) {
      while (c < r.cols() && r.at(i, c) == 0) ++c;
      pivots.push_back(c);
    }
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (int i = 0; i < r.rows(); ++i) v[pivots[i]] = -r.at(i, f);
    rows.push_back(v);
  }
  return rref(Matrix::from_rows(rows, m.cols()));
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  int n = m.rows();
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> pivots = gauss_jordan(aug, n);
  if (static_cast<int>(pivots.size()) != n) return std::nullopt;
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve dimension mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  std::vector<int> pivots = gauss_jordan(aug, a.cols());
  // Inconsistent iff some zero-coefficient row has nonzero right-hand side.
  for (int i = static_cast<int>(pivots.size()); i < a.rows(); ++i)
    if (aug.at(i, a.cols()) != 0) return std::nullopt;
  Vec x(a.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), a.cols());
  return x;
}

}  // namespace hls
