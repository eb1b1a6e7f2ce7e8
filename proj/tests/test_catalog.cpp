#include <doctest.h>

#include <algorithm>

#include "hls/catalog.hpp"
#include "hls/decomp.hpp"
#include "hls/error.hpp"

using namespace hls;

namespace {

// Runs the full pipeline and checks every frozen expectation the instance
// carries about itself.
void check_expectations(const CatalogInstance& inst) {
  CAPTURE(inst.alg.dim());
  REQUIRE(validate(inst.alg).passed);
  REQUIRE(verify_magsa(inst.alg, inst.magsa).ok());
  RootDecomposition dec = root_decomposition(inst.alg, inst.magsa);
  const CatalogExpectations& e = inst.expected;
  if (e.root_count >= 0) CHECK(dec.root_count() == e.root_count);

  RootPartition partition = connection_classes(dec);
  if (e.class_count >= 0)
    CHECK(static_cast<int>(partition.classes.size()) == e.class_count);

  IdealDecomposition d = global_decomposition(inst.alg, dec, partition);
  CHECK(d.direct_sum);
  CHECK(d.pairwise_orthogonal);
  if (e.u_dim >= 0) CHECK(d.u.dim() == e.u_dim);
  if (!e.ideal_dims.empty()) {
    std::vector<int> dims;
    for (const ClassIdeal& ideal : d.ideals)
      dims.push_back(ideal.total.total.dim());
    std::sort(dims.begin(), dims.end());
    CHECK(dims == e.ideal_dims);
  }

  if (e.verdict.has_value()) {
    SimplicityReport report = certify_simple(inst.alg, dec, partition);
    CHECK(report.verdict == *e.verdict);
  }
}

}  // namespace

TEST_CASE("the graded family meets its expectations at each truncation") {
  CHECK(example1(2).alg.dim() == 8);
  CHECK(example1(3).alg.dim() == 13);
  CHECK(example1(4).alg.dim() == 18);
  for (int upper : {2, 3, 4}) {
    CatalogInstance inst = example1(upper);
    CHECK(inst.expected.root_count == 4 * (upper - 1) + 1);
    CHECK(inst.expected.class_count == upper);
    CHECK(inst.expected.u_dim == 2);
    check_expectations(inst);
  }
}

TEST_CASE("the non-regular variant meets the same expectations") {
  CatalogInstance inst = example1_nonregular(3);
  CHECK(!inst.alg.regular());
  CHECK(!inst.notes.empty());
  check_expectations(inst);
}

TEST_CASE("the deformed sl(2) entry is simple for several factors") {
  for (long t : {1L, 2L, 5L, -3L}) {
    CatalogInstance inst = sl2_twisted(rat(t));
    CHECK(inst.expected.verdict == SimplicityVerdict::simple);
    check_expectations(inst);
  }
  // t = 1 degenerates to the identity twist; t = 0 is rejected.
  CHECK_THROWS_AS(sl2_twisted(rat(0)), error);
}

TEST_CASE("the zero-bracket entry decomposes trivially") {
  CatalogInstance inst = abelian(4);
  CHECK(inst.alg.bracket_is_zero());
  CHECK(inst.expected.root_count == 0);
  CHECK(inst.expected.u_dim == 4);
  check_expectations(inst);
}

TEST_CASE("catalog lookup by name parses parameters and rejects junk") {
  CHECK(catalog_entry("example1", std::nullopt).alg.dim() >= 8);
  CHECK(catalog_entry("example1", std::string("4")).alg.dim() == 18);
  CHECK(catalog_entry("example1-nonregular", std::string("3")).alg.dim() ==
        13);
  CHECK(catalog_entry("sl2-twisted", std::string("7/2")).alg.dim() == 3);
  CHECK(catalog_entry("abelian", std::string("5")).alg.dim() == 5);

  auto category_of = [](auto f) {
    try {
      f();
    } catch (const error& e) {
      return e.category();
    }
    return static_cast<errc>(0);
  };
  CHECK(category_of([] { catalog_entry("no-such-entry", std::nullopt); }) ==
        errc::usage);
  CHECK(category_of([] { catalog_entry("example1", std::string("1")); }) ==
        errc::usage);
  CHECK(category_of([] { catalog_entry("example1", std::string("x")); }) ==
        errc::usage);
  CHECK(category_of([] {
          catalog_entry("example1", std::string("5/2"));
        }) == errc::usage);
  CHECK(category_of([] { catalog_entry("sl2-twisted", std::string("0")); }) ==
        errc::usage);

  std::vector<std::string> names = catalog_names();
  CHECK(std::find(names.begin(), names.end(), "example1") != names.end());
  CHECK(names.size() == 4);
}

TEST_CASE("the family truncations never couple distinct parameter blocks") {
  CatalogInstance inst = example1(4);
  const Superalgebra& alg = inst.alg;
  // Every bracket of two generators from different n-blocks vanishes, so
  // truncation is closed; spot-check by names.
  auto idx = [&](const std::string& name) {
    for (int i = 0; i < alg.dim(); ++i)
      if (alg.name(i) == name) return i;
    return -1;
  };
  for (const char* a : {"h2", "x2", "f2"})
    for (const char* b : {"h3", "y4", "g3"})
      CHECK(hls::is_zero(alg.bracket_basis(idx(a), idx(b))));
}
