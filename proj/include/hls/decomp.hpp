#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hls/connect.hpp"
#include "hls/rootspace.hpp"

namespace hls {

// The ideal attached to one connection class: H_part = Σ_{β∈[α], −β∈Λ}
// [L_β, L_{−β}] inside H, V_part = ⊕_{β∈[α]} L_β, total their direct sum.
struct ClassIdeal {
  int class_id = -1;
  Vec label;             // lexicographically least root of the class
  Subspace h_part;
  GradedSubspace v_part;
  GradedSubspace total;
  bool certified_subalgebra = false;  // [total,total] ⊆ total, φ(total)=total
  bool certified_ideal = false;       // [total, L] ⊆ total
};

ClassIdeal build_class_ideal(const Superalgebra& alg,
                             const RootDecomposition& dec,
                             const RootPartition& partition, int class_id);

// Pairwise [ideal_a, ideal_b] = 0 for distinct classes, exact.
bool check_orthogonality(const Superalgebra& alg,
                         const std::vector<ClassIdeal>& ideals);

struct IdealDecomposition {
  Subspace w;                      // span{[L_α, L_{−α}] : α ∈ Λ} ⊆ H
  Subspace u;                      // pivot-greedy complement of w in H
  std::vector<ClassIdeal> ideals;  // one per class, in class order
  bool direct_sum = false;         // U ⊕ ⊕ ideals = L, dimension-exact
  bool pairwise_orthogonal = false;
};

// Builds every class ideal, U, and the global sum L = U + Σ L_[α]; verifies
// spanning exactly and cross-checks that a zero center plus H-generation
// forces the sum to be direct (a proven implication — failure is a bug).
IdealDecomposition global_decomposition(const Superalgebra& alg,
                                        const RootDecomposition& dec,
                                        const RootPartition& partition);

// {v : [v, L] = 0}; always a graded subspace of a validated algebra.
GradedSubspace center(const Superalgebra& alg);

struct StructureFlags {
  bool symmetric_roots = false;    // Λ = −Λ
  bool maximal_length = false;     // every parity piece of every L_α has dim ≤ 1
  bool root_multiplicative = false;
  bool center_zero = false;
  bool h_generated = false;        // H = Σ_α [L_α, L_{−α}]
  bool all_connected = false;      // one connection class
};

StructureFlags structure_flags(const Superalgebra& alg,
                               const RootDecomposition& dec,
                               const RootPartition& partition);

enum class SimplicityVerdict { simple, not_simple, inconclusive };

struct SimplicityReport {
  SimplicityVerdict verdict = SimplicityVerdict::inconclusive;
  StructureFlags flags;
  std::vector<std::string> reasons;
  // Present on NOT_SIMPLE from an exhibited ideal: a proper nonzero ideal.
  std::optional<Subspace> witness_ideal;
  std::string witness_description;
  bool via_structure_theorem = false;
  bool via_oracle = false;
};

// Simplicity certification. Order of business: a zero bracket is never
// simple; an exhibitable proper nonzero certified ideal (class ideal or
// center) refutes simplicity outright; under the structure-theorem
// hypotheses (symmetric + maximal length + root-multiplicative + zero
// center) the verdict is decided by all-connected ∧ H-generated; otherwise
// the brute-force oracle is consulted; otherwise INCONCLUSIVE with reasons.
// When both decision paths apply they are BOTH run and must agree (a
// disagreement is an internal error).
SimplicityReport certify_simple(const Superalgebra& alg,
                                const RootDecomposition& dec,
                                const RootPartition& partition);

// Support of a graded ideal along the decomposition: I = (I∩H) ⊕ ⊕(I∩L_α),
// with every projection of an ideal vector landing back in the ideal.
struct IdealSupport {
  std::vector<int> even_roots, odd_roots;  // roots whose parity piece meets I
  Subspace h_even, h_odd;                  // I ∩ H, by parity
  bool reconstructs = false;               // dims add up to dim I
};

IdealSupport ideal_support(const Superalgebra& alg,
                           const RootDecomposition& dec, const Subspace& ideal);

struct ComponentReport {
  ClassIdeal ideal;
  SimplicityVerdict verdict = SimplicityVerdict::inconclusive;
  int dim = 0;
  int root_count = 0;  // of the standalone re-entry
};

// The final decomposition into simple components. Preconditions: maximal
// length, root-multiplicative, zero center, H-generated, symmetric roots —
// errc::validation ("PRECONDITION_UNMET") otherwise. Every component is
// re-entered as a standalone algebra with H_[α] as its splitting subalgebra
// and re-certified from scratch; a component failing certification is an
// internal error ("COMPONENT_NOT_SIMPLE").
std::vector<ComponentReport> simple_components(const Superalgebra& alg,
                                               const RootDecomposition& dec,
                                               const RootPartition& partition);

}  // namespace hls
