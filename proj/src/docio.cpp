#include "hls/docio.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "hls/error.hpp"

namespace hls {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
  throw error(errc::parse, "document: " + what);
}

int index_field(const json& j, const char* key, int dim,
                const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer())
    bad(where + ": missing integer '" + key + "'");
  long v = j[key].get<long>();
  if (v < 0 || v >= dim)
    bad(where + ": index " + std::to_string(v) + " out of range [0," +
        std::to_string(dim) + ")");
  return static_cast<int>(v);
}

Rat rational_field(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where + ": rational values must be strings");
  try {
    return rat_parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    bad(where + ": " + e.what());
  }
}

}  // namespace

AlgebraDocument parse_document(const std::string& text,
                               bool force_non_regular) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
  if (!j.is_object()) bad("top level must be an object");
  if (!j.contains("field") || j["field"] != "Q")
    bad("'field' must be the string \"Q\"");
  if (!j.contains("basis") || !j["basis"].is_array() || j["basis"].empty())
    bad("'basis' must be a non-empty array");

  std::vector<std::string> names;
  std::vector<Parity> parities;
  for (size_t i = 0; i < j["basis"].size(); ++i) {
    const json& b = j["basis"][i];
    std::string where = "basis[" + std::to_string(i) + "]";
    if (!b.is_object() || !b.contains("name") || !b["name"].is_string())
      bad(where + ": needs a string 'name'");
    if (!b.contains("parity") || !b["parity"].is_number_integer() ||
        (b["parity"] != 0 && b["parity"] != 1))
      bad(where + ": 'parity' must be 0 or 1");
    names.push_back(b["name"].get<std::string>());
    parities.push_back(b["parity"] == 0 ? Parity::even : Parity::odd);
  }
  int dim = static_cast<int>(names.size());

  std::vector<BracketEntry> entries;
  if (j.contains("bracket")) {
    if (!j["bracket"].is_array()) bad("'bracket' must be an array");
    for (size_t i = 0; i < j["bracket"].size(); ++i) {
      const json& e = j["bracket"][i];
      std::string where = "bracket[" + std::to_string(i) + "]";
      if (!e.is_object()) bad(where + ": must be an object");
      BracketEntry entry;
      entry.left = index_field(e, "left", dim, where);
      entry.right = index_field(e, "right", dim, where);
      if (!e.contains("value") || !e["value"].is_array())
        bad(where + ": missing array 'value'");
      for (size_t t = 0; t < e["value"].size(); ++t) {
        const json& term = e["value"][t];
        std::string twhere = where + ".value[" + std::to_string(t) + "]";
        if (!term.is_array() || term.size() != 2)
          bad(twhere + ": terms are [index, rational-string] pairs");
        if (!term[0].is_number_integer() || term[0].get<long>() < 0 ||
            term[0].get<long>() >= dim)
          bad(twhere + ": target index out of range");
        entry.value.emplace_back(static_cast<int>(term[0].get<long>()),
                                 rational_field(term[1], twhere));
      }
      entries.push_back(std::move(entry));
    }
  }

  Matrix twist(dim, dim);
  std::set<std::pair<int, int>> seen;
  if (j.contains("phi")) {
    if (!j["phi"].is_array()) bad("'phi' must be an array");
    for (size_t i = 0; i < j["phi"].size(); ++i) {
      const json& p = j["phi"][i];
      std::string where = "phi[" + std::to_string(i) + "]";
      if (!p.is_object()) bad(where + ": must be an object");
      int source = index_field(p, "source", dim, where);
      int target = index_field(p, "target", dim, where);
      if (!seen.insert({source, target}).second)
        bad(where + ": duplicate phi entry for (source, target)");
      if (!p.contains("value")) bad(where + ": missing 'value'");
      twist.at(target, source) = rational_field(p["value"], where);
    }
  }

  bool regular = true;
  if (j.contains("regular")) {
    if (!j["regular"].is_boolean()) bad("'regular' must be a boolean");
    regular = j["regular"].get<bool>();
  }
  if (force_non_regular) regular = false;

  AlgebraDocument doc{
      Superalgebra::make(std::move(names), std::move(parities), entries,
                         std::move(twist), regular),
      std::nullopt};

  if (j.contains("magsa")) {
    if (!j["magsa"].is_array()) bad("'magsa' must be an array of indices");
    std::vector<int> axes;
    std::set<long> dedup;
    for (const json& m : j["magsa"]) {
      if (!m.is_number_integer() || m.get<long>() < 0 || m.get<long>() >= dim)
        bad("'magsa' index out of range");
      if (!dedup.insert(m.get<long>()).second) bad("'magsa' index repeated");
      axes.push_back(static_cast<int>(m.get<long>()));
    }
    doc.magsa = std::move(axes);
  }
  return doc;
}

AlgebraDocument load_document(const std::string& path,
                              bool force_non_regular) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse, "cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), force_non_regular);
}

std::string document_text(const Superalgebra& alg,
                          const std::optional<std::vector<int>>& magsa) {
  json j;
  j["field"] = "Q";
  j["basis"] = json::array();
  for (int i = 0; i < alg.dim(); ++i)
    j["basis"].push_back(
        {{"name", alg.name(i)}, {"parity", alg.parity(i) == Parity::even ? 0 : 1}});

  j["bracket"] = json::array();
  for (const BracketEntry& entry : alg.bracket_table()) {
    json value = json::array();
    for (const auto& [k, c] : entry.value)
      value.push_back(json::array({k, rat_str(c)}));
    j["bracket"].push_back(
        {{"left", entry.left}, {"right", entry.right}, {"value", value}});
  }

  j["phi"] = json::array();
  for (int source = 0; source < alg.dim(); ++source)
    for (int target = 0; target < alg.dim(); ++target) {
      const Rat& v = alg.twist().at(target, source);
      if (v == 0) continue;
      j["phi"].push_back(
          {{"source", source}, {"target", target}, {"value", rat_str(v)}});
    }

  if (magsa) j["magsa"] = *magsa;
  j["regular"] = alg.regular();
  return j.dump(2) + "\n";
}

void save_document(const std::string& path, const Superalgebra& alg,
                   const std::optional<std::vector<int>>& magsa) {
  std::ofstream out(path);
  if (!out) throw error(errc::usage, "cannot write file: " + path);
  out << document_text(alg, magsa);
}

GradedSubspace document_magsa(const AlgebraDocument& doc) {
  if (!doc.magsa)
    throw error(errc::usage,
                "no splitting subalgebra: the document has no 'magsa' field "
                "and none was given with --magsa");
  auto g = grade(coordinate_subspace(doc.alg.dim(), *doc.magsa),
                 doc.alg.parities());
  internal_check(g.has_value(), "axis span fails to be graded");
  return *g;
}

}  // namespace hls
