#include "hls/subspace.hpp"

#include <stdexcept>

namespace hls {

namespace {
void require_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("subspace ambient dimension mismatch");
}
}  // namespace

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(int ambient) {
  return span(ambient, Matrix::identity(ambient));
}

Subspace Subspace::span(int ambient, const Matrix& rows) {
  if (rows.cols() != ambient)
    throw std::invalid_argument("span: ambient dimension mismatch");
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = rref(rows);
  return s;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vectors) {
  return span(ambient, Matrix::from_rows(vectors, ambient));
}

std::vector<Vec> Subspace::basis_rows() const {
  std::vector<Vec> rows;
  rows.reserve(dim());
  for (int i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
  return rows;
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("contains: ambient dimension mismatch");
  // Reduce v against the canonical basis; membership iff it reduces to zero.
  Vec w = v;
  for (int i = 0; i < basis_.rows(); ++i) {
    int p = 0;
    while (p < ambient_ && basis_.at(i, p) == 0) ++p;
    if (p == ambient_) continue;
    if (w[p] != 0) {
      Rat f = w[p];  // pivot entries are exactly 1
      for (int j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(i, j);
    }
  }
  return hls::is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other);
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_row(i))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_ == other.basis_;
}

Subspace Subspace::image(const Matrix& op) const {
  if (op.cols() != ambient_)
    throw std::invalid_argument("image: operator dimension mismatch");
  std::vector<Vec> rows;
  rows.reserve(dim());
  for (int i = 0; i < dim(); ++i) rows.push_back(op.apply(basis_row(i)));
  return Subspace::span(op.rows(), rows);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  Matrix stack(a.dim() + b.dim(), a.ambient());
  for (int i = 0; i < a.dim(); ++i) stack.set_row(i, a.basis_row(i));
  for (int i = 0; i < b.dim(); ++i) stack.set_row(a.dim() + i, b.basis_row(i));
  return Subspace::span(a.ambient(), stack);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b);
  int n = a.ambient();
  Matrix z(a.dim() + b.dim(), 2 * n);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      z.at(i, j) = a.basis().at(i, j);
      z.at(i, n + j) = a.basis().at(i, j);
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < n; ++j) z.at(a.dim() + i, j) = b.basis().at(i, j);
  Matrix r = rref(z);
  std::vector<Vec> rows;
  for (int i = 0; i < r.rows(); ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (r.at(i, j) != 0) left_zero = false;
    if (!left_zero) continue;
    Vec v(n);
    for (int j = 0; j < n; ++j) v[j] = r.at(i, n + j);
    rows.push_back(v);
  }
  return Subspace::span(n, rows);
}

Subspace greedy_complement(const Subspace& whole, const Subspace& part) {
  require_same_ambient(whole, part);
  if (!whole.contains(part))
    throw std::invalid_argument("greedy_complement: part not inside whole");
  Subspace acc = part;
  std::vector<Vec> kept;
  for (int i = 0; i < whole.dim(); ++i) {
    Vec v = whole.basis_row(i);
    if (acc.contains(v)) continue;
    kept.push_back(v);
    acc = sum(acc, Subspace::span(whole.ambient(), std::vector<Vec>{v}));
  }
  Subspace comp = Subspace::span(whole.ambient(), kept);
  if (comp.dim() + part.dim() != whole.dim())
    throw std::logic_error("greedy_complement: dimension accounting failed");
  return comp;
}

std::optional<Vec> coordinates_in(const Matrix& basis, const Vec& v) {
  // Solve x^T basis = v^T, i.e. basis^T x = v.
  return solve(basis.transpose(), v);
}

Subspace coordinate_subspace(int ambient, const std::vector<int>& axes) {
  std::vector<Vec> rows;
  rows.reserve(axes.size());
  for (int a : axes) rows.push_back(vec_unit(ambient, a));
  return Subspace::span(ambient, rows);
}

}  // namespace hls
