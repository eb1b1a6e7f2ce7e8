#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hls/decomp.hpp"

namespace hls {

// Frozen expectations a fixture carries about its own pipeline output; -1 /
// empty means unspecified. The regression suite checks every filled field.
struct CatalogExpectations {
  int root_count = -1;
  int class_count = -1;
  std::vector<int> ideal_dims;  // ascending
  int u_dim = -1;
  std::optional<SimplicityVerdict> verdict;
};

struct CatalogInstance {
  Superalgebra alg;
  GradedSubspace magsa;
  std::vector<int> magsa_indices;  // when H is spanned by basis vectors
  std::vector<std::string> notes;
  CatalogExpectations expected;
};

// Graded family truncated at parameter N ≥ 2: even basis {e1,e2} ∪
// {h_n,x_n,y_n : 2 ≤ n ≤ N}, odd basis {e3} ∪ {f_n,g_n}, the eleven
// relation families
//   [e2,e1]=e1, [h_n,x_n]=2n²x_n, [h_n,y_n]=−2n⁻²y_n, [x_n,y_n]=h_n,
//   [y_n,g_n]=n⁻¹f_n, [x_n,f_n]=n g_n, [h_n,f_n]=−n⁻¹f_n, [h_n,g_n]=n g_n,
//   [g_n,f_n]=h_n, [g_n,g_n]=−2n²x_n, [f_n,f_n]=2n⁻²y_n,
// and the diagonal twist fixing e1,e2,e3,h_n and scaling x_n,y_n,f_n,g_n by
// n², n⁻², n⁻¹, n. H = ⟨e2,h_2,…,h_N⟩ ⊕ ⟨e3⟩. Every product couples only
// equal-n generators and e1,e2, so each truncation is closed.
CatalogInstance example1(int upper);

// Same bracket, but the twist sends e3 to 0 and the algebra is flagged
// non-regular. The twist is then not bijective on H (e3 is an odd element
// of H); the analysis only needs bijectivity on the even part of H, and the
// decomposition comes out identical to the regular fixture's.
CatalogInstance example1_nonregular(int upper);

// sl(2) — [h,x]=2x, [h,y]=−2y, [x,y]=h — deformed along the automorphism
// diag(1,t,t⁻¹), t ≠ 0: bracket composed with the automorphism, twist equal
// to it. Root system {±α} with α(h) = 2.
CatalogInstance sl2_twisted(const Rat& t);

// Zero bracket on `dim` generators of alternating parity, identity twist,
// H = everything.
CatalogInstance abelian(int dim);

// A certified class ideal re-based as a standalone algebra with H_[α] as its
// splitting subalgebra.
CatalogInstance component_restriction(const Superalgebra& alg,
                                      const ClassIdeal& ideal);

// Named access for the CLI. Names: "example1", "example1-nonregular",
// "sl2-twisted", "abelian". The parameter means truncation N, truncation N,
// twist factor t, and dimension respectively; each has a default.
// Throws errc::usage on unknown names or out-of-range parameters.
CatalogInstance catalog_entry(const std::string& name,
                              const std::optional<std::string>& parameter);

std::vector<std::string> catalog_names();

}  // namespace hls
