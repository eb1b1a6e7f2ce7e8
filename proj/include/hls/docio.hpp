#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hls/superalgebra.hpp"

namespace hls {

// In-memory form of the JSON algebra document. Rationals travel as strings
// ("p" or "p/q") so no floating point ever enters the pipeline.
//
// Document shape:
//   {
//     "field": "Q",
//     "basis": [{"name": "e1", "parity": 0}, ...],
//     "bracket": [{"left": i, "right": j, "value": [[k, "q"], ...]}, ...],
//     "phi": [{"source": j, "target": i, "value": "q"}, ...],
//     "magsa": [i, ...],        // optional
//     "regular": true           // optional, default true
//   }
//
// phi entries mean: the twist sends basis vector `source` to (among other
// terms) `value` times basis vector `target`. Unlisted bracket mirrors are
// completed by skew-supersymmetry; explicitly listed mirror pairs are
// cross-checked and conflicts rejected.
struct AlgebraDocument {
  Superalgebra alg;
  std::optional<std::vector<int>> magsa;  // basis indices spanning H
};

// Parses a document from JSON text. force_non_regular drops the regularity
// claim regardless of the document's flag (the CLI's --non-regular).
// Throws errc::parse on malformed or inconsistent input.
AlgebraDocument parse_document(const std::string& text,
                               bool force_non_regular = false);

// Reads and parses a file; errc::parse when unreadable.
AlgebraDocument load_document(const std::string& path,
                              bool force_non_regular = false);

// Serializes; the output parses back to a structurally equal document.
std::string document_text(const Superalgebra& alg,
                          const std::optional<std::vector<int>>& magsa);

void save_document(const std::string& path, const Superalgebra& alg,
                   const std::optional<std::vector<int>>& magsa);

// The graded span of the document's MAGSA indices; errc::usage when the
// indices are absent.
GradedSubspace document_magsa(const AlgebraDocument& doc);

}  // namespace hls
