#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hls/rootspace.hpp"

namespace hls {

// Ideal closure of a single vector: the least subspace containing the seed
// that absorbs brackets with the whole algebra and is stable under the twist
// (and its inverse, in regular mode).
struct GeneratedIdeal {
  Vec seed;
  Subspace closure;
  int rounds = 0;
};

GeneratedIdeal generate_ideal(const Superalgebra& alg, const Vec& seed);

enum class OracleVerdict { simple, not_simple, inapplicable };

struct OracleReport {
  OracleVerdict verdict = OracleVerdict::inapplicable;
  std::optional<GeneratedIdeal> witness;  // a proper closure, on not_simple
  std::vector<std::string> notes;
};

// Brute-force graded-simplicity decision, exact when every parity piece of
// every root space is at most one-dimensional and the center vanishes: under
// those hypotheses every nonzero graded ideal contains some root-space piece,
// so testing the closure of one basis vector per piece is exhaustive.
// Abstains (inapplicable) otherwise. Shares no code with the
// structure-theorem certification path.
OracleReport brute_simplicity(const Superalgebra& alg,
                              const RootDecomposition& dec);

struct FuzzInstance {
  Superalgebra alg;
  GradedSubspace magsa;
  std::string description;
};

// Deterministic pseudo-random split instance: a direct sum of small
// templates (twisted sl(2) copies, the five-dimensional h/x/y/f/g block,
// abelian summands), optionally pushed through a random parity-preserving
// change of basis with the splitting subalgebra transported along. Always
// validates and always splits. max_dim ≥ 3.
FuzzInstance fuzz_instance(uint64_t seed, int max_dim);

// A separating even element: h₀ ∈ H_0̄ with alpha(h₀) ≠ 0 and
// alpha(h₀) ≠ beta(h₀), found by explicit search over basis vectors and
// Vandermonde-style combinations (guaranteed over Q). Returns ambient
// coordinates.
std::optional<Vec> separating_element(const RootDecomposition& dec, int alpha,
                                      int beta);

struct PropertyViolation {
  uint64_t seed = 0;
  std::string property;
  std::string detail;
};

// The full property suite over a list of fuzz seeds: validation, split
// decomposition, transport laws, the connection equivalence with witness
// re-validation, the ideal decomposition with its certified containments,
// ideal-closure support decomposition, oracle/theorem agreement, separating
// elements, and generator determinism. Returns every violation found (empty
// = suite passed). Progress lines go to *progress when given.
std::vector<PropertyViolation> run_property_suite(
    const std::vector<uint64_t>& seeds, int max_dim,
    std::ostream* progress = nullptr);

}  // namespace hls
