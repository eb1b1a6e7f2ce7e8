#pragma once

#include <vector>

#include "hls/subspace.hpp"

namespace hls {

// Characteristic polynomial by Faddeev–LeVerrier, exact. coeffs[k] is the
// coefficient of lambda^k; coeffs[n] = 1 (monic).
std::vector<Rat> char_poly(const Matrix& m);

// All rational eigenvalues of a square matrix, sorted ascending, each listed
// once. Exact: scales the matrix to integer entries, takes the monic integer
// characteristic polynomial, strips the power of lambda, and tests the
// divisors of the trailing coefficient (rational-root theorem), so no
// rational eigenvalue can be missed.
std::vector<Rat> rational_eigenvalues(const Matrix& m);

// The operator `op` restricted to an invariant subspace, expressed in the
// subspace's canonical row basis. nullopt when op does not stabilize it.
std::optional<Matrix> restrict_operator(const Matrix& op, const Subspace& s);

struct EigenBlock {
  Vec eigenvalues;  // eigenvalues[k] belongs to ops[k]
  Subspace space;
};

struct EigenRefinement {
  std::vector<EigenBlock> blocks;      // joint rational eigenspaces
  std::vector<Subspace> unsplit;       // residue the ops fail to diagonalize
};

// Splits `start` into simultaneous rational eigenspaces of the given
// commuting family. Operators are applied in order: each current block is
// either (a) not stabilized by the next operator, or (b) not fully spanned by
// that operator's rational eigenspaces — in both cases the whole block moves
// to `unsplit` untouched; otherwise it refines into one sub-block per
// eigenvalue. blocks ⊕ unsplit always reassembles `start` exactly.
EigenRefinement simultaneous_eigenspaces(const std::vector<Matrix>& ops,
                                         const Subspace& start);

}  // namespace hls
