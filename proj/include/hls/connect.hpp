#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hls/rootspace.hpp"

namespace hls {

// A functional in ±Λ named by a root index and a sign. Functionals lying in
// both Λ and −Λ canonicalize to sign +1 (the root itself), so the naming is
// deterministic.
struct SignedRoot {
  int index;
  int sign;  // +1 or -1
  bool operator==(const SignedRoot& o) const {
    return index == o.index && sign == o.sign;
  }
};

// Canonical signed name of a functional, or nullopt when it is not in ±Λ.
std::optional<SignedRoot> canonical_signed(const RootDecomposition& dec,
                                           const Vec& coords);
Vec signed_coords(const RootDecomposition& dec, const SignedRoot& s);

// A connection chain from root alpha to root beta, in the exact shape the
// definition uses: chain[0] = α∘φ^{-start_exponent}; partial sums
// s_i all lie in ±Λ and the final one equals
// terminal_sign * (β ∘ φ^{-terminal_exponent}).
struct ConnectionWitness {
  std::vector<Vec> chain;         // the functionals α_1, …, α_k
  std::vector<Vec> partial_sums;  // s_1 = α_1, …, s_k
  int start_exponent = 0;
  int terminal_sign = 1;
  int terminal_exponent = 0;
};

// Everything reachable from alpha's twist orbit by the chain recurrence
// s' = (s + γ)∘φ^{-1} with γ ∈ ±Λ and s' a nonzero element of ±Λ.
// Sorted by functional value; this is the full candidate set of chain states.
std::vector<SignedRoot> reachable_set(const RootDecomposition& dec, int alpha);

bool are_connected(const RootDecomposition& dec, int alpha, int beta);

// A shortest witness chain (BFS layers), or nullopt when not connected.
std::optional<ConnectionWitness> connection_witness(
    const RootDecomposition& dec, int alpha, int beta);

// Independent re-validation of a witness against the connection definition
// itself: membership of every chain element in ±Λ, the first element in
// alpha's inverse-twist orbit, the triangular partial sums
//   σ_i = α_1∘φ^{-i} + α_2∘φ^{-i} + α_3∘φ^{-i+1} + … + α_{i+1}∘φ^{-1}
// all in ±Λ, and the last one in ±(β's inverse-twist orbit). Shares no state
// machinery with the BFS above. Appends the failure reason to *why when
// given.
bool check_witness(const RootDecomposition& dec, int alpha, int beta,
                   const ConnectionWitness& witness,
                   std::string* why = nullptr);

struct RootPartition {
  std::vector<std::vector<int>> classes;  // each sorted; ordered by least root
  std::vector<int> class_of;              // root index -> class position
};

// Partition of Λ by connectivity. Exhaustively re-checks that pairwise
// connectivity is reflexive, symmetric, and transitive on this instance, and
// that every class is closed under the twist orbit and under negation of
// roots whose negative is a root; violations are internal errors.
RootPartition connection_classes(const RootDecomposition& dec);

}  // namespace hls
