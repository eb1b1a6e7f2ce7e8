#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hls/superalgebra.hpp"

namespace hls {

// A root and its root space. The root is a functional on the even part of
// the splitting subalgebra, stored as its value tuple on the canonical
// h-basis rows; the space is {v : [h, v] = root(h) * twist(v) for all h}.
struct RootSpace {
  Vec root;             // values on h_basis rows; never the zero tuple
  GradedSubspace space;
};

struct RootDecomposition {
  GradedSubspace H;
  Matrix h_basis;      // canonical (RREF) row basis of the even part of H
  Matrix phi_H;        // twist restricted to that basis (invertible)
  Matrix phi_H_inv;
  Matrix root_action;  // coords(f∘twist⁻¹) = root_action · coords(f)
  std::vector<RootSpace> spaces;  // sorted by root tuple, lexicographically
  std::vector<int> phi_perm;      // spaces[i].root∘twist⁻¹ = spaces[phi_perm[i]].root
  bool non_regular = false;
  Subspace vhat;       // ⊕ root spaces; complement of H

  int root_count() const { return static_cast<int>(spaces.size()); }
  // Index of the root with this value tuple, or -1.
  int find_root(const Vec& coords) const;
  // coords ↦ coords of the functional composed with twist^{-e} (e ≥ 0).
  Vec root_after_inverse_twists(const Vec& coords, int e) const;
};

// No-throw split analysis, for diagnostics and maximality search.
struct SplitAnalysis {
  enum class Status { split, not_split, non_rational_spectrum };
  Status status;
  std::string detail;                     // human-readable failure cause
  std::optional<RootDecomposition> dec;   // present iff status == split
};

SplitAnalysis analyze_roots(const Superalgebra& alg, const GradedSubspace& h);

// Throwing form: errc::not_split on either failure status, with the
// analysis detail in the message.
RootDecomposition root_decomposition(const Superalgebra& alg,
                                     const GradedSubspace& h);

struct MagsaReport {
  bool graded_ok = false;      // parts homogeneous and even ⊕ odd = total
  bool abelian = false;
  bool twist_stable = false;   // φ(H) = H (regular) / φ(H) ⊆ H (non-regular)
  bool twist_invertible_ok = false;  // global (regular) / on H-even (not)
  bool ok() const {
    return graded_ok && abelian && twist_stable && twist_invertible_ok;
  }
  enum class Maximality { confirmed, refuted, unknown };
  Maximality maximality = Maximality::unknown;
  std::optional<Vec> refutation_witness;  // strictly extends H when present
  std::vector<std::string> notes;
};

// Checks the splitting-subalgebra requirements and attempts a maximality
// verdict: confirmed when the root decomposition exists (the zero root space
// is exactly H), refuted when some homogeneous vector outside H extends H to
// a strictly larger abelian graded twist-compatible subalgebra.
MagsaReport verify_magsa(const Superalgebra& alg, const GradedSubspace& h);

struct TransportReport {
  bool ok = true;
  std::vector<std::string> failures;
};

// Verifies the root-space transport laws on an exact decomposition:
// twist(L_α) = L_{α∘twist⁻¹}, [H, L_α] ⊆ L_{α∘twist⁻¹}, and for every pair
// [L_α, L_β] lands in L_{α∘twist⁻¹+β∘twist⁻¹} / in H when that sum is zero /
// is zero when the sum is no root.
TransportReport check_transport(const Superalgebra& alg,
                                const RootDecomposition& dec);

}  // namespace hls
