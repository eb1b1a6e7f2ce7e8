#pragma once

#include <vector>

#include "hls/matrix.hpp"

namespace hls {

// Linear subspace of Q^n held in canonical form: the basis matrix is always
// the RREF of whatever spanned it, zero rows dropped. Two Subspace values are
// equal as sets iff their representations are identical, so operator== is a
// plain matrix comparison and every derived object (root spaces, ideals,
// reports) is automatically deterministic.
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace span(int ambient, const Matrix& rows);
  static Subspace span(int ambient, const std::vector<Vec>& vectors);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  Vec basis_row(int i) const { return basis_.row(i); }
  std::vector<Vec> basis_rows() const;

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;
  bool operator!=(const Subspace& other) const { return !(*this == other); }

  // Image under a linear map (op is ambient x ambient, columns act on
  // coordinates): span{op * b : b basis row}.
  Subspace image(const Matrix& op) const;

 private:
  int ambient_;
  Matrix basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);

// Zassenhaus: row-reduce [A|A; B|0]; rows with vanishing left half carry the
// intersection in their right half.
Subspace intersect(const Subspace& a, const Subspace& b);

// Pivot-greedy complement of `part` inside `whole` (requires part ⊆ whole):
// walks whole's canonical basis rows in order and keeps each row that is
// independent of part plus the rows already kept. Deterministic by
// construction; the result satisfies part ⊕ result = whole.
Subspace greedy_complement(const Subspace& whole, const Subspace& part);

// Coordinates of v in the row basis of `basis` (full row rank assumed), or
// nullopt when v lies outside the row space.
std::optional<Vec> coordinates_in(const Matrix& basis, const Vec& v);

// Span of the listed coordinate axes.
Subspace coordinate_subspace(int ambient, const std::vector<int>& axes);

}  // namespace hls
