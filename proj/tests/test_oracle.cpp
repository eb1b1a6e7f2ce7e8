#include <doctest.h>

#include <sstream>

#include "hls/catalog.hpp"
#include "hls/decomp.hpp"
#include "hls/oracle.hpp"

using namespace hls;

namespace {

int index_of(const Superalgebra& alg, const std::string& name) {
  for (int i = 0; i < alg.dim(); ++i)
    if (alg.name(i) == name) return i;
  return -1;
}

}  // namespace

TEST_CASE("ideal closures absorb brackets and the twist") {
  CatalogInstance inst = example1(2);
  const Superalgebra& alg = inst.alg;
  int n = alg.dim();

  GeneratedIdeal from_e1 = generate_ideal(alg, vec_unit(n, 0));
  CHECK(from_e1.closure.dim() == 1);

  GeneratedIdeal from_x2 =
      generate_ideal(alg, vec_unit(n, index_of(alg, "x2")));
  CHECK(from_x2.closure.dim() == 5);
  for (const char* name : {"h2", "x2", "y2", "f2", "g2"})
    CHECK(from_x2.closure.contains(vec_unit(n, index_of(alg, name))));

  GeneratedIdeal from_zero = generate_ideal(alg, vec_zero(n));
  CHECK(from_zero.closure.dim() == 0);

  // The closure of e2 picks up e1 through [e2, e1] = e1.
  GeneratedIdeal from_e2 =
      generate_ideal(alg, vec_unit(n, index_of(alg, "e2")));
  CHECK(from_e2.closure.contains(vec_unit(n, 0)));
}

TEST_CASE("the brute-force decision is exact on one-dimensional pieces") {
  // Simple: the 5-dimensional standalone block.
  {
    CatalogInstance inst = example1(2);
    RootDecomposition dec = root_decomposition(inst.alg, inst.magsa);
    RootPartition partition = connection_classes(dec);
    ClassIdeal ideal = build_class_ideal(inst.alg, dec, partition, 0);
    CatalogInstance standalone = component_restriction(inst.alg, ideal);
    RootDecomposition sdec =
        root_decomposition(standalone.alg, standalone.magsa);
    OracleReport report = brute_simplicity(standalone.alg, sdec);
    CHECK(report.verdict == OracleVerdict::simple);
    CHECK(!report.witness.has_value());
  }

  // Not simple: a direct sum of two blocks (the full fixture has a nonzero
  // center, where the oracle abstains, so restrict to the two-block sum).
  {
    CatalogInstance inst = example1(3);
    RootDecomposition dec = root_decomposition(inst.alg, inst.magsa);
    RootPartition partition = connection_classes(dec);
    IdealDecomposition d = global_decomposition(inst.alg, dec, partition);
    std::vector<const ClassIdeal*> big;
    for (const ClassIdeal& ideal : d.ideals)
      if (ideal.total.total.dim() == 5) big.push_back(&ideal);
    REQUIRE(big.size() == 2);
    Restriction res = restrict_to(
        inst.alg, graded_sum(big[0]->total, big[1]->total), "c");
    std::vector<int> h_idx = {index_of(res.alg, "h2"),
                              index_of(res.alg, "h3")};
    GradedSubspace h =
        *grade(coordinate_subspace(10, h_idx), res.alg.parities());
    RootDecomposition rdec = root_decomposition(res.alg, h);
    OracleReport report = brute_simplicity(res.alg, rdec);
    CHECK(report.verdict == OracleVerdict::not_simple);
    REQUIRE(report.witness.has_value());
    CHECK(report.witness->closure.dim() == 5);
  }
}

TEST_CASE("the brute-force decision abstains when its hypotheses fail") {
  CatalogInstance inst = example1(2);
  RootDecomposition dec = root_decomposition(inst.alg, inst.magsa);
  OracleReport report = brute_simplicity(inst.alg, dec);
  CHECK(report.verdict == OracleVerdict::inapplicable);
  CHECK(!report.notes.empty());
}

TEST_CASE("fuzz instances are deterministic in their seed") {
  for (uint64_t seed : {1ull, 7ull, 23ull}) {
    FuzzInstance a = fuzz_instance(seed, 10);
    FuzzInstance b = fuzz_instance(seed, 10);
    CHECK(a.description == b.description);
    CHECK(a.alg.names() == b.alg.names());
    CHECK(a.alg.twist() == b.alg.twist());
    CHECK(a.magsa.total == b.magsa.total);
    for (int i = 0; i < a.alg.dim(); ++i)
      for (int j = 0; j < a.alg.dim(); ++j)
        CHECK(a.alg.bracket_basis(i, j) == b.alg.bracket_basis(i, j));
  }
}

TEST_CASE("fuzz instances validate and split for a spread of seeds") {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    FuzzInstance inst = fuzz_instance(seed, 9);
    CAPTURE(seed);
    CAPTURE(inst.description);
    CHECK(inst.alg.dim() <= 9);
    CHECK(validate(inst.alg).passed);
    CHECK(verify_magsa(inst.alg, inst.magsa).ok());
    SplitAnalysis analysis = analyze_roots(inst.alg, inst.magsa);
    CHECK(analysis.status == SplitAnalysis::Status::split);
  }
}

TEST_CASE("separating elements keep the promised inequalities") {
  CatalogInstance inst = example1(3);
  RootDecomposition dec = root_decomposition(inst.alg, inst.magsa);
  auto value_on = [&](const Vec& root, const Vec& ambient) {
    auto coords = coordinates_in(dec.h_basis, ambient);
    REQUIRE(coords.has_value());
    Rat v = 0;
    for (size_t j = 0; j < coords->size(); ++j) v += root[j] * (*coords)[j];
    return v;
  };
  for (int a = 0; a < dec.root_count(); ++a) {
    for (int b = 0; b < dec.root_count(); ++b) {
      if (a == b) continue;
      if (dec.spaces[a].root == dec.spaces[b].root) continue;
      auto h = separating_element(dec, a, b);
      REQUIRE(h.has_value());
      CHECK(dec.H.even.contains(*h));
      Rat va = value_on(dec.spaces[a].root, *h);
      Rat vb = value_on(dec.spaces[b].root, *h);
      CHECK(va != 0);
      CHECK(va != vb);
    }
  }
}

TEST_CASE("a short property-suite run reports no violations") {
  std::vector<uint64_t> seeds;
  for (uint64_t s = 1; s <= 6; ++s) seeds.push_back(s);
  std::ostringstream progress;
  std::vector<PropertyViolation> violations =
      run_property_suite(seeds, 8, &progress);
  for (const PropertyViolation& v : violations)
    MESSAGE("seed " << v.seed << " " << v.property << ": " << v.detail);
  CHECK(violations.empty());
  CHECK(progress.str().find("seed 1") != std::string::npos);
}
