#include "hls/report.hpp"

#include <sstream>

#include "hls/error.hpp"

namespace hls {

namespace {

using nlohmann::json;

json vec_json(const Vec& v) {
  json out = json::array();
  for (const Rat& c : v) out.push_back(rat_str(c));
  return out;
}

json named_rows(const Superalgebra& alg, const Subspace& s) {
  json out = json::array();
  for (int i = 0; i < s.dim(); ++i) out.push_back(combo_str(alg, s.basis_row(i)));
  return out;
}

json base(const char* command) {
  json j;
  j["command"] = command;
  j["schema_version"] = kSchemaVersion;
  return j;
}

const char* verdict_str(SimplicityVerdict v) {
  switch (v) {
    case SimplicityVerdict::simple: return "SIMPLE";
    case SimplicityVerdict::not_simple: return "NOT_SIMPLE";
    case SimplicityVerdict::inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::string json_tuple(const json& coords) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) os << ", ";
    os << coords[i].get<std::string>();
  }
  os << ")";
  return os.str();
}

std::string join_names(const json& arr, const char* sep = ", ") {
  std::ostringstream os;
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) os << sep;
    os << arr[i].get<std::string>();
  }
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string combo_str(const Superalgebra& alg, const Vec& v) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < alg.dim(); ++i) {
    if (v[i] == 0) continue;
    bool neg = v[i] < 0;
    Rat a = abs(v[i]);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (a != 1) os << rat_str(a) << "*";
    os << alg.name(i);
  }
  return first ? "0" : os.str();
}

std::string tuple_str(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << rat_str(v[i]);
  }
  os << ")";
  return os.str();
}

nlohmann::json validate_report(const Superalgebra& alg,
                               const ValidationReport& report) {
  json j = base("validate");
  j["dim"] = alg.dim();
  int even = 0;
  for (int i = 0; i < alg.dim(); ++i)
    if (alg.parity(i) == Parity::even) ++even;
  j["even_dim"] = even;
  j["odd_dim"] = alg.dim() - even;
  j["regular"] = alg.regular();
  j["passed"] = report.passed;
  j["violations"] = json::array();
  for (const Violation& v : report.violations)
    j["violations"].push_back(
        {{"axiom", v.axiom}, {"where", v.where}, {"detail", v.detail}});
  return j;
}

nlohmann::json roots_report(const Superalgebra& alg, const MagsaReport& magsa,
                            const RootDecomposition& dec) {
  json j = base("roots");
  j["mode"] = dec.non_regular ? "non-regular" : "regular";

  const char* maximality = "unknown";
  if (magsa.maximality == MagsaReport::Maximality::confirmed)
    maximality = "confirmed";
  else if (magsa.maximality == MagsaReport::Maximality::refuted)
    maximality = "refuted";
  j["magsa"] = {{"dim", dec.H.total.dim()},
                {"even_dim", dec.H.even.dim()},
                {"odd_dim", dec.H.odd.dim()},
                {"abelian", magsa.abelian},
                {"twist_stable", magsa.twist_stable},
                {"twist_invertible", magsa.twist_invertible_ok},
                {"maximality", maximality},
                {"notes", magsa.notes},
                {"even_basis", named_rows(alg, dec.H.even)},
                {"odd_basis", named_rows(alg, dec.H.odd)}};

  j["root_count"] = dec.root_count();
  j["roots"] = json::array();
  for (int i = 0; i < dec.root_count(); ++i) {
    const RootSpace& rs = dec.spaces[i];
    j["roots"].push_back({{"index", i},
                          {"coords", vec_json(rs.root)},
                          {"even_dim", rs.space.even.dim()},
                          {"odd_dim", rs.space.odd.dim()},
                          {"even_basis", named_rows(alg, rs.space.even)},
                          {"odd_basis", named_rows(alg, rs.space.odd)}});
  }

  json cycles = json::array();
  std::vector<bool> seen(dec.root_count(), false);
  for (int i = 0; i < dec.root_count(); ++i) {
    if (seen[i] || dec.phi_perm[i] == i) {
      seen[i] = true;
      continue;
    }
    json cycle = json::array();
    int at = i;
    while (!seen[at]) {
      seen[at] = true;
      cycle.push_back(at);
      at = dec.phi_perm[at];
    }
    cycles.push_back(cycle);
  }
  j["twist_orbit_cycles"] = cycles;
  return j;
}

nlohmann::json connections_report(const Superalgebra& alg,
                                  const RootDecomposition& dec,
                                  const RootPartition& partition,
                                  const std::optional<PairQuery>& pair) {
  (void)alg;
  json j = base("connections");
  j["root_count"] = dec.root_count();
  j["class_count"] = partition.classes.size();
  j["classes"] = json::array();
  for (size_t c = 0; c < partition.classes.size(); ++c)
    j["classes"].push_back(
        {{"id", c},
         {"label", vec_json(dec.spaces[partition.classes[c].front()].root)},
         {"roots", partition.classes[c]}});

  if (pair) {
    json p;
    p["alpha"] = pair->alpha;
    p["beta"] = pair->beta;
    bool connected = are_connected(dec, pair->alpha, pair->beta);
    p["connected"] = connected;
    if (connected && pair->want_witness) {
      auto witness = connection_witness(dec, pair->alpha, pair->beta);
      internal_check(witness.has_value(),
                     "connected pair yields no witness chain");
      std::string why;
      bool accepted =
          check_witness(dec, pair->alpha, pair->beta, *witness, &why);
      internal_check(accepted, "emitted witness rejected: " + why);
      json chain = json::array(), sums = json::array();
      for (const Vec& f : witness->chain) chain.push_back(vec_json(f));
      for (const Vec& s : witness->partial_sums) sums.push_back(vec_json(s));
      p["witness"] = {{"chain", chain},
                      {"partial_sums", sums},
                      {"start_exponent", witness->start_exponent},
                      {"terminal_sign", witness->terminal_sign},
                      {"terminal_exponent", witness->terminal_exponent},
                      {"checker_accepted", accepted}};
    }
    j["pair"] = p;
  }
  return j;
}

nlohmann::json decompose_report(const Superalgebra& alg,
                                const RootDecomposition& dec,
                                const IdealDecomposition& decomposition) {
  (void)dec;
  json j = base("decompose");
  j["u"] = {{"dim", decomposition.u.dim()},
            {"basis", named_rows(alg, decomposition.u)}};
  j["ideals"] = json::array();
  for (const ClassIdeal& ideal : decomposition.ideals)
    j["ideals"].push_back(
        {{"class_id", ideal.class_id},
         {"label", vec_json(ideal.label)},
         {"h_dim", ideal.h_part.dim()},
         {"v_even_dim", ideal.v_part.even.dim()},
         {"v_odd_dim", ideal.v_part.odd.dim()},
         {"total_dim", ideal.total.total.dim()},
         {"basis", named_rows(alg, ideal.total.total)},
         {"certified_subalgebra", ideal.certified_subalgebra},
         {"certified_ideal", ideal.certified_ideal}});
  j["direct_sum"] = decomposition.direct_sum;
  j["pairwise_orthogonal"] = decomposition.pairwise_orthogonal;
  return j;
}

nlohmann::json simplicity_report(const Superalgebra& alg,
                                 const RootDecomposition& dec,
                                 const SimplicityReport& report) {
  (void)dec;
  json j = base("simplicity");
  j["verdict"] = verdict_str(report.verdict);
  j["flags"] = {{"symmetric_roots", report.flags.symmetric_roots},
                {"maximal_length", report.flags.maximal_length},
                {"root_multiplicative", report.flags.root_multiplicative},
                {"center_zero", report.flags.center_zero},
                {"h_generated", report.flags.h_generated},
                {"all_connected", report.flags.all_connected}};
  j["via"] = {{"structure_theorem", report.via_structure_theorem},
              {"oracle", report.via_oracle}};
  j["reasons"] = report.reasons;
  if (report.witness_ideal)
    j["witness"] = {{"dim", report.witness_ideal->dim()},
                    {"description", report.witness_description},
                    {"basis", named_rows(alg, *report.witness_ideal)}};
  return j;
}

nlohmann::json components_report(const Superalgebra& alg,
                                 const RootDecomposition& dec,
                                 const std::vector<ComponentReport>& parts) {
  (void)dec;
  json j = base("components");
  j["count"] = parts.size();
  j["components"] = json::array();
  for (const ComponentReport& part : parts)
    j["components"].push_back(
        {{"class_id", part.ideal.class_id},
         {"label", vec_json(part.ideal.label)},
         {"dim", part.dim},
         {"root_count", part.root_count},
         {"basis", named_rows(alg, part.ideal.total.total)},
         {"verdict", verdict_str(part.verdict)}});
  return j;
}

nlohmann::json fuzz_report(int seeds, int max_dim,
                           const std::vector<PropertyViolation>& violations) {
  json j = base("fuzz");
  j["seeds"] = seeds;
  j["max_dim"] = max_dim;
  j["passed"] = violations.empty();
  j["violations"] = json::array();
  for (const PropertyViolation& v : violations)
    j["violations"].push_back(
        {{"seed", v.seed}, {"property", v.property}, {"detail", v.detail}});
  return j;
}

namespace {

std::string render_validate(const json& j) {
  std::ostringstream os;
  os << "validate: " << (j["passed"].get<bool>() ? "PASSED" : "FAILED");
  if (!j["passed"].get<bool>())
    os << " (" << j["violations"].size() << " violations)";
  os << "\n";
  os << "dimension " << j["dim"] << " (even " << j["even_dim"] << ", odd "
     << j["odd_dim"] << "); twist "
     << (j["regular"].get<bool>() ? "regular" : "non-regular") << "\n";
  for (const json& v : j["violations"]) {
    os << "  - " << v["axiom"].get<std::string>() << " at (";
    for (size_t i = 0; i < v["where"].size(); ++i)
      os << (i ? ", " : "") << v["where"][i].get<int>();
    os << "): " << v["detail"].get<std::string>() << "\n";
  }
  return os.str();
}

std::string render_roots(const json& j) {
  std::ostringstream os;
  const json& m = j["magsa"];
  os << "roots: " << j["root_count"] << " roots; mode "
     << j["mode"].get<std::string>() << "\n";
  os << "splitting subalgebra: dim " << m["dim"] << " (even "
     << join_names(m["even_basis"]) << "; odd " << join_names(m["odd_basis"])
     << "); abelian " << yes_no(m["abelian"].get<bool>()) << "; twist-stable "
     << yes_no(m["twist_stable"].get<bool>()) << "; maximality "
     << m["maximality"].get<std::string>() << "\n";
  for (const json& note : m["notes"])
    os << "  note: " << note.get<std::string>() << "\n";
  for (const json& r : j["roots"]) {
    os << "  [" << r["index"] << "] " << json_tuple(r["coords"]) << ": even {"
       << join_names(r["even_basis"]) << "}, odd {"
       << join_names(r["odd_basis"]) << "}\n";
  }
  os << "twist action on roots: ";
  if (j["twist_orbit_cycles"].empty()) {
    os << "identity\n";
  } else {
    for (const json& cycle : j["twist_orbit_cycles"]) {
      os << "(";
      for (size_t i = 0; i < cycle.size(); ++i)
        os << (i ? " " : "") << cycle[i].get<int>();
      os << ")";
    }
    os << "\n";
  }
  return os.str();
}

std::string render_connections(const json& j) {
  std::ostringstream os;
  os << "connections: " << j["class_count"] << " classes over "
     << j["root_count"] << " roots\n";
  for (const json& c : j["classes"]) {
    os << "  class " << c["id"] << " [label " << json_tuple(c["label"])
       << "]: roots {";
    for (size_t i = 0; i < c["roots"].size(); ++i)
      os << (i ? ", " : "") << c["roots"][i].get<int>();
    os << "}\n";
  }
  if (j.contains("pair")) {
    const json& p = j["pair"];
    os << "pair (" << p["alpha"] << ", " << p["beta"] << "): "
       << (p["connected"].get<bool>() ? "connected" : "not connected") << "\n";
    if (p.contains("witness")) {
      const json& w = p["witness"];
      os << "  chain:";
      for (const json& f : w["chain"]) os << " " << json_tuple(f);
      os << "\n  partial sums:";
      for (const json& s : w["partial_sums"]) os << " " << json_tuple(s);
      os << "\n  start exponent " << w["start_exponent"] << "; terminal sign "
         << w["terminal_sign"] << ", exponent " << w["terminal_exponent"]
         << "\n  independent checker: "
         << (w["checker_accepted"].get<bool>() ? "accepted" : "REJECTED")
         << "\n";
    }
  }
  return os.str();
}

std::string render_decompose(const json& j) {
  std::ostringstream os;
  os << "decomposition: L = U + " << j["ideals"].size()
     << " class ideal(s)\n";
  os << "U: dim " << j["u"]["dim"] << " {" << join_names(j["u"]["basis"])
     << "}\n";
  for (const json& ideal : j["ideals"]) {
    os << "  ideal [class " << ideal["class_id"] << ", label "
       << json_tuple(ideal["label"]) << "]: dim " << ideal["total_dim"]
       << " = H-part " << ideal["h_dim"] << " + V-part (even "
       << ideal["v_even_dim"] << ", odd " << ideal["v_odd_dim"]
       << "); subalgebra "
       << yes_no(ideal["certified_subalgebra"].get<bool>()) << "; ideal "
       << yes_no(ideal["certified_ideal"].get<bool>()) << "\n";
    os << "    basis {" << join_names(ideal["basis"]) << "}\n";
  }
  os << "direct sum: " << yes_no(j["direct_sum"].get<bool>())
     << "; pairwise orthogonal: "
     << yes_no(j["pairwise_orthogonal"].get<bool>()) << "\n";
  return os.str();
}

std::string render_simplicity(const json& j) {
  std::ostringstream os;
  os << "simplicity: " << j["verdict"].get<std::string>() << "\n";
  const json& f = j["flags"];
  os << "flags: symmetric_roots " << yes_no(f["symmetric_roots"].get<bool>())
     << ", maximal_length " << yes_no(f["maximal_length"].get<bool>())
     << ", root_multiplicative "
     << yes_no(f["root_multiplicative"].get<bool>()) << ", center_zero "
     << yes_no(f["center_zero"].get<bool>()) << ", h_generated "
     << yes_no(f["h_generated"].get<bool>()) << ", all_connected "
     << yes_no(f["all_connected"].get<bool>()) << "\n";
  os << "paths: structure theorem "
     << yes_no(j["via"]["structure_theorem"].get<bool>()) << ", oracle "
     << yes_no(j["via"]["oracle"].get<bool>()) << "\n";
  for (const json& reason : j["reasons"])
    os << "  - " << reason.get<std::string>() << "\n";
  if (j.contains("witness")) {
    os << "witness ideal: dim " << j["witness"]["dim"] << " {"
       << join_names(j["witness"]["basis"]) << "} — "
       << j["witness"]["description"].get<std::string>() << "\n";
  }
  return os.str();
}

std::string render_components(const json& j) {
  std::ostringstream os;
  os << "simple components: " << j["count"] << "\n";
  for (const json& c : j["components"]) {
    os << "  [class " << c["class_id"] << ", label " << json_tuple(c["label"])
       << "] dim " << c["dim"] << ", " << c["root_count"] << " roots: "
       << c["verdict"].get<std::string>() << "\n";
    os << "    basis {" << join_names(c["basis"]) << "}\n";
  }
  return os.str();
}

std::string render_fuzz(const json& j) {
  std::ostringstream os;
  os << "fuzz: " << j["seeds"] << " seeds at max dim " << j["max_dim"] << ": "
     << (j["passed"].get<bool>() ? "PASSED" : "FAILED") << "\n";
  for (const json& v : j["violations"])
    os << "  seed " << v["seed"] << " [" << v["property"].get<std::string>()
       << "]: " << v["detail"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace

std::string render_text(const nlohmann::json& report) {
  const std::string command = report.at("command").get<std::string>();
  if (command == "validate") return render_validate(report);
  if (command == "roots") return render_roots(report);
  if (command == "connections") return render_connections(report);
  if (command == "decompose") return render_decompose(report);
  if (command == "simplicity") return render_simplicity(report);
  if (command == "components") return render_components(report);
  if (command == "fuzz") return render_fuzz(report);
  internal_failure("unknown report command: " + command);
}

}  // namespace hls
