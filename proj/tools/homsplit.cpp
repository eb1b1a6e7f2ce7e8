// homsplit: exact analysis of finite-dimensional split Hom-Lie superalgebras
// over Q — axiom validation, root-space decomposition, connection classes,
// ideal decomposition, simplicity certification, and simple components.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hls/catalog.hpp"
#include "hls/docio.hpp"
#include "hls/error.hpp"
#include "hls/report.hpp"

namespace {

using hls::errc;
using hls::error;

struct Options {
  bool json = false;
  bool non_regular = false;
  std::string file;
  std::string magsa_csv;
  std::string name;
  std::string parameter;
  std::string emit;
  std::vector<int> pair;
  bool witness = false;
  int seeds = 100;
  int max_dim = 10;
};

void emit_report(const Options& opt, const nlohmann::json& report) {
  if (opt.json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << hls::render_text(report);
}

std::vector<int> parse_csv_indices(const std::string& csv) {
  std::vector<int> out;
  size_t at = 0;
  while (at <= csv.size()) {
    size_t comma = csv.find(',', at);
    std::string part =
        csv.substr(at, comma == std::string::npos ? comma : comma - at);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw error(errc::usage,
                  "--magsa wants comma-separated basis indices, got '" + csv +
                      "'");
    out.push_back(std::stoi(part));
    if (comma == std::string::npos) break;
    at = comma + 1;
  }
  return out;
}

struct Pipeline {
  hls::AlgebraDocument doc;
  hls::MagsaReport magsa_report;
  hls::GradedSubspace h;
  hls::RootDecomposition dec;
};

hls::AlgebraDocument load(const Options& opt) {
  hls::AlgebraDocument doc = hls::load_document(opt.file, opt.non_regular);
  if (!opt.magsa_csv.empty()) doc.magsa = parse_csv_indices(opt.magsa_csv);
  if (doc.magsa)
    for (int i : *doc.magsa)
      if (i < 0 || i >= doc.alg.dim())
        throw error(errc::usage, "--magsa index out of range");
  return doc;
}

// Shared front half of every analysis command: axioms, then the splitting
// subalgebra requirements, then the root decomposition.
Pipeline run_pipeline(const Options& opt) {
  hls::AlgebraDocument doc = load(opt);
  hls::ValidationReport val = hls::validate(doc.alg);
  if (!val.passed) {
    const hls::Violation& v = val.violations.front();
    throw error(errc::validation,
                "axiom check failed (" + v.axiom + "): " + v.detail +
                    " — run 'validate' for the full report");
  }
  hls::GradedSubspace h = hls::document_magsa(doc);
  hls::MagsaReport magsa = hls::verify_magsa(doc.alg, h);
  if (!magsa.ok()) {
    std::string detail = "the given span is not a splitting subalgebra:";
    if (!magsa.graded_ok) detail += " not graded;";
    if (!magsa.abelian) detail += " not abelian;";
    if (!magsa.twist_stable) detail += " not twist-stable;";
    if (!magsa.twist_invertible_ok) detail += " twist not bijective on it;";
    throw error(errc::validation, detail);
  }
  hls::RootDecomposition dec = hls::root_decomposition(doc.alg, h);
  return Pipeline{std::move(doc), std::move(magsa), std::move(h),
                  std::move(dec)};
}

int cmd_validate(const Options& opt) {
  hls::AlgebraDocument doc = load(opt);
  hls::ValidationReport val = hls::validate(doc.alg);
  emit_report(opt, hls::validate_report(doc.alg, val));
  return val.passed ? 0 : static_cast<int>(errc::validation);
}

int cmd_roots(const Options& opt) {
  Pipeline p = run_pipeline(opt);
  emit_report(opt, hls::roots_report(p.doc.alg, p.magsa_report, p.dec));
  return 0;
}

int cmd_connections(const Options& opt) {
  Pipeline p = run_pipeline(opt);
  hls::RootPartition partition = hls::connection_classes(p.dec);
  std::optional<hls::PairQuery> pair;
  if (!opt.pair.empty()) {
    if (opt.pair[0] < 0 || opt.pair[0] >= p.dec.root_count() ||
        opt.pair[1] < 0 || opt.pair[1] >= p.dec.root_count())
      throw error(errc::usage, "--pair indices must name roots listed by "
                               "'roots' (0-based)");
    pair = hls::PairQuery{opt.pair[0], opt.pair[1], opt.witness};
  }
  emit_report(opt, hls::connections_report(p.doc.alg, p.dec, partition, pair));
  return 0;
}

int cmd_decompose(const Options& opt) {
  Pipeline p = run_pipeline(opt);
  hls::RootPartition partition = hls::connection_classes(p.dec);
  hls::IdealDecomposition global =
      hls::global_decomposition(p.doc.alg, p.dec, partition);
  emit_report(opt, hls::decompose_report(p.doc.alg, p.dec, global));
  return 0;
}

int cmd_simplicity(const Options& opt) {
  Pipeline p = run_pipeline(opt);
  hls::RootPartition partition = hls::connection_classes(p.dec);
  hls::SimplicityReport report =
      hls::certify_simple(p.doc.alg, p.dec, partition);
  emit_report(opt, hls::simplicity_report(p.doc.alg, p.dec, report));
  return 0;
}

int cmd_components(const Options& opt) {
  Pipeline p = run_pipeline(opt);
  hls::RootPartition partition = hls::connection_classes(p.dec);
  std::vector<hls::ComponentReport> parts =
      hls::simple_components(p.doc.alg, p.dec, partition);
  emit_report(opt, hls::components_report(p.doc.alg, p.dec, parts));
  return 0;
}

int cmd_catalog(const Options& opt) {
  std::optional<std::string> parameter;
  if (!opt.parameter.empty()) parameter = opt.parameter;
  hls::CatalogInstance entry = hls::catalog_entry(opt.name, parameter);
  for (const std::string& note : entry.notes)
    std::cerr << "note: " << note << "\n";
  std::optional<std::vector<int>> magsa;
  if (!entry.magsa_indices.empty()) magsa = entry.magsa_indices;
  if (opt.emit.empty()) {
    std::cout << hls::document_text(entry.alg, magsa);
  } else {
    hls::save_document(opt.emit, entry.alg, magsa);
    if (opt.json) {
      nlohmann::json j{{"command", "catalog"},
                       {"schema_version", hls::kSchemaVersion},
                       {"name", opt.name},
                       {"dim", entry.alg.dim()},
                       {"written", opt.emit}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "wrote " << opt.emit << ": " << opt.name << ", dim "
                << entry.alg.dim() << "\n";
    }
  }
  return 0;
}

int cmd_fuzz(const Options& opt) {
  if (opt.seeds < 1) throw error(errc::usage, "--seeds must be at least 1");
  if (opt.max_dim < 3) throw error(errc::usage, "--max-dim must be at least 3");
  std::vector<uint64_t> seeds;
  for (int i = 1; i <= opt.seeds; ++i) seeds.push_back(i);
  std::vector<hls::PropertyViolation> violations =
      hls::run_property_suite(seeds, opt.max_dim);
  emit_report(opt, hls::fuzz_report(opt.seeds, opt.max_dim, violations));
  // A violation means a proven property failed on generated input: a bug.
  return violations.empty() ? 0 : static_cast<int>(errc::internal);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact split-structure analysis of Hom-Lie superalgebras"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "emit the machine-readable report");
  app.add_flag("--non-regular", opt.non_regular,
               "analyze without assuming the twist is invertible");

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", opt.file, "algebra document (JSON)")->required();
    cmd->add_option("--magsa", opt.magsa_csv,
                    "splitting subalgebra as comma-separated basis indices "
                    "(overrides the document)");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the algebra axioms");
  add_file(validate);
  CLI::App* roots = app.add_subcommand(
      "roots", "root-space decomposition relative to the splitting subalgebra");
  add_file(roots);
  CLI::App* connections =
      app.add_subcommand("connections", "partition the roots by connectivity");
  add_file(connections);
  connections->add_option("--pair", opt.pair, "two root indices to test")
      ->expected(2);
  connections->add_flag("--witness", opt.witness,
                        "emit and re-check a connection chain for --pair");
  CLI::App* decompose = app.add_subcommand(
      "decompose", "ideal decomposition L = U + sum of class ideals");
  add_file(decompose);
  CLI::App* simplicity =
      app.add_subcommand("simplicity", "certify simplicity or exhibit an ideal");
  add_file(simplicity);
  CLI::App* components =
      app.add_subcommand("components", "decompose into certified simple ideals");
  add_file(components);

  CLI::App* catalog =
      app.add_subcommand("catalog", "emit a built-in example algebra");
  catalog->add_option("name", opt.name, "entry name (see --help)")->required();
  catalog->add_option("--param", opt.parameter,
                      "entry parameter (truncation, twist factor, or dimension)");
  catalog->add_option("--emit", opt.emit, "write the document to this path");

  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "run the randomized property suite over generated instances");
  fuzz->add_option("--seeds", opt.seeds, "number of seeds (default 100)");
  fuzz->add_option("--max-dim", opt.max_dim,
                   "dimension budget per instance (default 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(errc::usage);
  }

  try {
    if (app.got_subcommand(validate)) return cmd_validate(opt);
    if (app.got_subcommand(roots)) return cmd_roots(opt);
    if (app.got_subcommand(connections)) return cmd_connections(opt);
    if (app.got_subcommand(decompose)) return cmd_decompose(opt);
    if (app.got_subcommand(simplicity)) return cmd_simplicity(opt);
    if (app.got_subcommand(components)) return cmd_components(opt);
    if (app.got_subcommand(catalog)) return cmd_catalog(opt);
    if (app.got_subcommand(fuzz)) return cmd_fuzz(opt);
    throw error(errc::usage, "no subcommand given");
  } catch (const error& e) {
    std::cerr << "error (" << hls::category_name(e.category())
              << "): " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error (internal): unexpected exception: " << e.what()
              << "\n";
    return static_cast<int>(errc::internal);
  }
}
