#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hls/subspace.hpp"

namespace hls {

enum class Parity : int { even = 0, odd = 1 };

inline Parity parity_sum(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}

// (-1)^{|a||b|}: the super sign picked up when homogeneous elements of these
// parities move past each other.
inline int super_sign(Parity a, Parity b) {
  return (a == Parity::odd && b == Parity::odd) ? -1 : 1;
}

// Sparse structure constants: [e_i, e_j] = sum_k c(i,j,k) e_k, stored per
// (i,j) as a sorted, zero-free list of (k, coefficient).
using SparseVec = std::vector<std::pair<int, Rat>>;

// One entry of the input table before mirror completion.
struct BracketEntry {
  int left, right;
  SparseVec value;
};

// Finite-dimensional superalgebra with an even twist map. The bracket table
// is complete (both (i,j) and (j,i) present whenever nonzero); construction
// from a half-filled table goes through make() below, which mirrors via
// skew-supersymmetry and rejects inconsistent duplicates.
class Superalgebra {
 public:
  // Builds from a possibly half-specified table: for every listed (i,j) with
  // no (j,i) entry, the mirror [e_j,e_i] = -(-1)^{|i||j|}[e_i,e_j] is filled
  // in; when both are listed they are cross-checked, and duplicate or
  // contradictory entries raise errc::parse.
  static Superalgebra make(std::vector<std::string> names,
                           std::vector<Parity> parities,
                           const std::vector<BracketEntry>& entries,
                           Matrix twist, bool regular);

  int dim() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  Parity parity(int i) const { return parities_[i]; }
  const std::vector<Parity>& parities() const { return parities_; }
  bool regular() const { return regular_; }

  const SparseVec* bracket_entry(int i, int j) const;
  // [e_i, e_j] as a dense vector.
  Vec bracket_basis(int i, int j) const;
  // Bilinear extension of the bracket table.
  Vec bracket(const Vec& x, const Vec& y) const;
  // ad_h: v -> [h, v], as a matrix acting on coordinate columns.
  Matrix ad(const Vec& h) const;

  const Matrix& twist() const { return twist_; }
  Vec twist_apply(const Vec& v) const { return twist_.apply(v); }
  // Cached inverse of the twist; nullopt when singular.
  const std::optional<Matrix>& twist_inverse() const;

  // All bracket entries in canonical (i,j) order; for serialization.
  std::vector<BracketEntry> bracket_table() const;

  // Span of the listed parity's coordinate axes.
  Subspace parity_axes(Parity p) const;

  // True iff every bracket of basis vectors vanishes.
  bool bracket_is_zero() const;

 private:
  std::vector<std::string> names_;
  std::vector<Parity> parities_;
  std::map<std::pair<int, int>, SparseVec> bracket_;
  Matrix twist_;
  bool regular_ = true;
  mutable std::optional<std::optional<Matrix>> twist_inverse_;
};

// Homogeneous subspace: even and odd parts are genuine subspaces of the
// algebra's coordinate space with even ⊕ odd = total.
struct GradedSubspace {
  Subspace total, even, odd;
};

// Splits s along the coordinate parity axes. nullopt when s is not a graded
// subspace (the parity components of its vectors leave s).
std::optional<GradedSubspace> grade(const Subspace& s,
                                    const std::vector<Parity>& parities);

GradedSubspace graded_zero(int ambient);
GradedSubspace graded_sum(const GradedSubspace& a, const GradedSubspace& b);

// One axiom failure with enough context to locate it.
struct Violation {
  std::string axiom;        // "grading", "skew_supersymmetry", ...
  std::vector<int> where;   // offending basis indices
  std::string detail;
};

struct ValidationReport {
  bool passed = true;
  std::vector<Violation> violations;
};

// Checks, in order: bracket grading, skew-supersymmetry, the super
// Hom-Jacobi identity, evenness of the twist, the twist being a bracket
// homomorphism, and invertibility when the algebra claims to be regular.
// Jacobi runs on i <= j <= k triples once skew-supersymmetry holds (the
// identity is cyclic-invariant and transposition-equivariant under it), on
// all triples otherwise so witnesses stay honest.
ValidationReport validate(const Superalgebra& alg);

// Twists a (regular, identity-twist) superalgebra along an even automorphism
// psi: new bracket psi([x,y]), new twist psi. Throws errc::validation when
// psi is not an even invertible bracket automorphism of the input, or the
// input's twist is not the identity.
Superalgebra yau_twist(const Superalgebra& alg, const Matrix& psi);

// Transport to a new basis: column j of p is the new basis vector b'_j in old
// coordinates. p must be invertible and parity-preserving (block structure
// along the parity split). Names follow positions.
Superalgebra change_of_basis(const Superalgebra& alg, const Matrix& p);

// A subalgebra presented on its own coordinate space. embed rows carry the
// new basis vectors in old coordinates.
struct Restriction {
  Superalgebra alg;
  Matrix embed;
};

// Restricts to a graded subspace that is closed under the bracket and
// invariant under the twist (throws errc::validation otherwise). Basis: the
// even part's canonical rows, then the odd part's. Names are synthesized from
// `prefix` unless the rows happen to be original basis vectors, whose names
// are kept.
Restriction restrict_to(const Superalgebra& alg, const GradedSubspace& sub,
                        const std::string& prefix);

}  // namespace hls
