#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "hls/catalog.hpp"
#include "hls/connect.hpp"
#include "hls/docio.hpp"
#include "hls/oracle.hpp"

namespace hls {

// Every report is one JSON object carrying "command" and "schema_version";
// the human-readable form is rendered from that object alone, so the two
// surfaces always hold identical data.
inline constexpr int kSchemaVersion = 1;

nlohmann::json validate_report(const Superalgebra& alg,
                               const ValidationReport& report);

nlohmann::json roots_report(const Superalgebra& alg, const MagsaReport& magsa,
                            const RootDecomposition& dec);

struct PairQuery {
  int alpha, beta;
  bool want_witness;
};

nlohmann::json connections_report(const Superalgebra& alg,
                                  const RootDecomposition& dec,
                                  const RootPartition& partition,
                                  const std::optional<PairQuery>& pair);

nlohmann::json decompose_report(const Superalgebra& alg,
                                const RootDecomposition& dec,
                                const IdealDecomposition& decomposition);

nlohmann::json simplicity_report(const Superalgebra& alg,
                                 const RootDecomposition& dec,
                                 const SimplicityReport& report);

nlohmann::json components_report(const Superalgebra& alg,
                                 const RootDecomposition& dec,
                                 const std::vector<ComponentReport>& parts);

nlohmann::json fuzz_report(int seeds, int max_dim,
                           const std::vector<PropertyViolation>& violations);

// Renders any of the above to the terminal form. Uses only the JSON fields.
std::string render_text(const nlohmann::json& report);

// Linear combination of basis names, e.g. "2*x2 - y2"; "0" for zero.
std::string combo_str(const Superalgebra& alg, const Vec& v);

// Coordinate tuple, e.g. "(0, -2)".
std::string tuple_str(const Vec& v);

}  // namespace hls
