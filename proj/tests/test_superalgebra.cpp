#include <doctest.h>

#include "hls/catalog.hpp"
#include "hls/error.hpp"
#include "hls/superalgebra.hpp"

using namespace hls;

namespace {

// Plain sl(2) with identity twist: [h,x]=2x, [h,y]=-2y, [x,y]=h.
Superalgebra plain_sl2() {
  std::vector<BracketEntry> entries = {
      {0, 1, {{1, rat(2)}}},
      {0, 2, {{2, rat(-2)}}},
      {1, 2, {{0, rat(1)}}},
  };
  return Superalgebra::make({"h", "x", "y"},
                            {Parity::even, Parity::even, Parity::even},
                            entries, Matrix::identity(3), true);
}

bool has_axiom(const ValidationReport& r, const std::string& axiom) {
  for (const auto& v : r.violations)
    if (v.axiom == axiom) return true;
  return false;
}

}  // namespace

TEST_CASE("mirror completion fills skew-supersymmetric counterparts") {
  // Only [e2,e1] = e1 listed; [e1,e2] must come out as -e1 (both even).
  std::vector<BracketEntry> entries = {{1, 0, {{0, rat(1)}}}};
  Superalgebra alg = Superalgebra::make({"e1", "e2"},
                                        {Parity::even, Parity::even}, entries,
                                        Matrix::identity(2), true);
  CHECK(alg.bracket_basis(0, 1) == Vec{rat(-1), rat(0)});
  CHECK(alg.bracket_basis(1, 0) == Vec{rat(1), rat(0)});

  // Odd-odd brackets mirror with a + sign: [f,f] listed, [f,f] symmetric.
  std::vector<BracketEntry> odd_entries = {{1, 2, {{0, rat(3)}}}};
  Superalgebra odd_alg = Superalgebra::make(
      {"x", "f", "g"}, {Parity::even, Parity::odd, Parity::odd}, odd_entries,
      Matrix::identity(3), true);
  CHECK(odd_alg.bracket_basis(2, 1) == Vec{rat(3), rat(0), rat(0)});
}

TEST_CASE("contradictory mirror entries are rejected as parse errors") {
  std::vector<BracketEntry> entries = {
      {0, 1, {{0, rat(1)}}},
      {1, 0, {{0, rat(1)}}},  // should be -e1 for an even pair
  };
  CHECK_THROWS_WITH_AS(
      Superalgebra::make({"a", "b"}, {Parity::even, Parity::even}, entries,
                         Matrix::identity(2), true),
      doctest::Contains("CONSISTENCY"), error);
  try {
    Superalgebra::make({"a", "b"}, {Parity::even, Parity::even}, entries,
                       Matrix::identity(2), true);
  } catch (const error& e) {
    CHECK(e.category() == errc::parse);
  }
}

TEST_CASE("duplicate entries for the same pair are rejected") {
  std::vector<BracketEntry> entries = {
      {0, 1, {{0, rat(1)}}},
      {0, 1, {{0, rat(2)}}},
  };
  CHECK_THROWS_AS(
      Superalgebra::make({"a", "b"}, {Parity::even, Parity::even}, entries,
                         Matrix::identity(2), true),
      error);
}

TEST_CASE("the graded family fixture passes every axiom") {
  for (int upper : {2, 3, 4}) {
    CatalogInstance inst = example1(upper);
    ValidationReport report = validate(inst.alg);
    CHECK(report.passed);
    CHECK(report.violations.empty());
  }
}

TEST_CASE("a corrupted structure constant is caught by the Jacobi check") {
  CatalogInstance inst = example1(2);
  // Rebuild with [x2,y2] = 2*h2 instead of h2.
  std::vector<BracketEntry> table = inst.alg.bracket_table();
  int x2 = -1, y2 = -1, h2 = -1;
  for (int i = 0; i < inst.alg.dim(); ++i) {
    if (inst.alg.name(i) == "x2") x2 = i;
    if (inst.alg.name(i) == "y2") y2 = i;
    if (inst.alg.name(i) == "h2") h2 = i;
  }
  REQUIRE(x2 >= 0);
  std::vector<BracketEntry> half;
  for (const auto& e : table) {
    if (e.left > e.right) continue;  // keep one representative per pair
    if (e.left == x2 && e.right == y2) {
      half.push_back({e.left, e.right, {{h2, rat(2)}}});
    } else {
      half.push_back(e);
    }
  }
  Superalgebra bad = Superalgebra::make(inst.alg.names(), inst.alg.parities(),
                                        half, inst.alg.twist(), true);
  ValidationReport report = validate(bad);
  CHECK(!report.passed);
  CHECK(has_axiom(report, "hom_jacobi"));
}

TEST_CASE("a non-even twist fails the parity axiom") {
  // Twist maps even h to odd f.
  std::vector<BracketEntry> entries;
  Matrix twist = Matrix::identity(2);
  twist.at(0, 0) = 0;
  twist.at(1, 0) = 1;  // h -> f
  twist.at(1, 1) = 1;
  Superalgebra alg = Superalgebra::make(
      {"h", "f"}, {Parity::even, Parity::odd}, entries, twist, false);
  ValidationReport report = validate(alg);
  CHECK(!report.passed);
  CHECK(has_axiom(report, "twist_parity"));
}

TEST_CASE("a singular twist on a regular algebra fails twist_regular") {
  std::vector<BracketEntry> entries;
  Matrix twist(2, 2);  // zero map
  Superalgebra alg = Superalgebra::make(
      {"a", "b"}, {Parity::even, Parity::even}, entries, twist, true);
  ValidationReport report = validate(alg);
  CHECK(has_axiom(report, "twist_regular"));

  // The same algebra declared non-regular is fine (zero twist is even and
  // multiplicative over a zero bracket).
  Superalgebra relaxed = Superalgebra::make(
      {"a", "b"}, {Parity::even, Parity::even}, entries, twist, false);
  CHECK(validate(relaxed).passed);
}

TEST_CASE("a non-multiplicative twist fails twist_homomorphism") {
  // sl2 with twist diag(1,2,3): phi[x,y]=h but [phi x, phi y]=6h.
  Matrix twist = Matrix::identity(3);
  twist.at(1, 1) = 2;
  twist.at(2, 2) = 3;
  std::vector<BracketEntry> entries = {
      {0, 1, {{1, rat(2)}}},
      {0, 2, {{2, rat(-2)}}},
      {1, 2, {{0, rat(1)}}},
  };
  Superalgebra alg = Superalgebra::make({"h", "x", "y"},
                                        {Parity::even, Parity::even,
                                         Parity::even},
                                        entries, twist, true);
  ValidationReport report = validate(alg);
  CHECK(!report.passed);
  CHECK(has_axiom(report, "twist_homomorphism"));
}

TEST_CASE("bracket grading violations are reported") {
  // [even, even] = odd basis vector.
  std::vector<BracketEntry> entries = {{0, 1, {{2, rat(1)}}}};
  Superalgebra alg = Superalgebra::make(
      {"a", "b", "f"}, {Parity::even, Parity::even, Parity::odd}, entries,
      Matrix::identity(3), true);
  ValidationReport report = validate(alg);
  CHECK(!report.passed);
  CHECK(has_axiom(report, "grading"));
}

TEST_CASE("deformation along an automorphism gives the twisted brackets") {
  Superalgebra lie = plain_sl2();
  Matrix psi = Matrix::identity(3);
  psi.at(1, 1) = rat(3);
  psi.at(2, 2) = rat(1, 3);
  Superalgebra twisted = yau_twist(lie, psi);
  // New bracket is psi([x,y]): [h,x]' = 6x, [h,y]' = -(2/3)y, [x,y]' = h.
  CHECK(twisted.bracket_basis(0, 1) == Vec{rat(0), rat(6), rat(0)});
  CHECK(twisted.bracket_basis(0, 2) == Vec{rat(0), rat(0), rat(-2, 3)});
  CHECK(twisted.bracket_basis(1, 2) == Vec{rat(1), rat(0), rat(0)});
  CHECK(twisted.twist() == psi);
  CHECK(validate(twisted).passed);
}

TEST_CASE("deformation rejects maps that are not bracket automorphisms") {
  Superalgebra lie = plain_sl2();
  Matrix bad = Matrix::identity(3);
  bad.at(1, 1) = 2;  // scales x only: [x,y] breaks
  CHECK_THROWS_AS(yau_twist(lie, bad), error);
  Matrix singular(3, 3);
  CHECK_THROWS_AS(yau_twist(lie, singular), error);
}

TEST_CASE("change of basis preserves validation and round-trips") {
  CatalogInstance inst = example1(2);
  int n = inst.alg.dim();
  // Mix within parities: e1 -> e1 + e2 (both even), f2 -> f2 - g2 (both odd).
  Matrix p = Matrix::identity(n);
  int e1 = 0, e2 = -1, f2 = -1, g2 = -1;
  for (int i = 0; i < n; ++i) {
    if (inst.alg.name(i) == "e2") e2 = i;
    if (inst.alg.name(i) == "f2") f2 = i;
    if (inst.alg.name(i) == "g2") g2 = i;
  }
  p.at(e2, e1) = 1;   // column e1: new first vector = e1 + e2
  p.at(g2, f2) = -1;  // column f2: new vector = f2 - g2
  Superalgebra moved = change_of_basis(inst.alg, p);
  CHECK(validate(moved).passed);
  Superalgebra back = change_of_basis(moved, *inverse(p));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      CHECK(back.bracket_basis(i, j) == inst.alg.bracket_basis(i, j));
  CHECK(back.twist() == inst.alg.twist());
}

TEST_CASE("change of basis rejects parity-mixing maps") {
  CatalogInstance inst = example1(2);
  int n = inst.alg.dim();
  Matrix p = Matrix::identity(n);
  int e3 = -1;
  for (int i = 0; i < n; ++i)
    if (inst.alg.name(i) == "e3") e3 = i;
  p.at(e3, 0) = 1;  // even e1 picks up an odd component
  CHECK_THROWS_AS(change_of_basis(inst.alg, p), error);
}

TEST_CASE("restriction to a closed graded subspace works, open ones throw") {
  CatalogInstance inst = example1(2);
  const Superalgebra& alg = inst.alg;
  int n = alg.dim();
  auto axes_of = [&](std::initializer_list<const char*> names) {
    std::vector<int> axes;
    for (const char* want : names)
      for (int i = 0; i < n; ++i)
        if (alg.name(i) == want) axes.push_back(i);
    return *grade(coordinate_subspace(n, axes), alg.parities());
  };

  // {h2,x2,y2,f2,g2} is closed and twist-stable.
  Restriction res = restrict_to(alg, axes_of({"h2", "x2", "y2", "f2", "g2"}),
                                "c");
  CHECK(res.alg.dim() == 5);
  CHECK(validate(res.alg).passed);
  // Restricted brackets match the embedded originals.
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      Vec inner = res.alg.bracket_basis(i, j);
      Vec outer = alg.bracket(res.embed.row(i), res.embed.row(j));
      CHECK(res.embed.transpose().apply(inner) == outer);
    }

  // {h2,x2} alone is not closed ([x2,y2] needs y2... use {x2,f2}: [x2,f2]=2g2
  // escapes).
  CHECK_THROWS_AS(restrict_to(alg, axes_of({"x2", "f2"}), "c"), error);
}

TEST_CASE("grading detects non-homogeneous subspaces") {
  CatalogInstance inst = example1(2);
  int n = inst.alg.dim();
  // span of e1 + e3 (even + odd) is not graded.
  Vec mixed = vec_zero(n);
  int e3 = -1;
  for (int i = 0; i < n; ++i)
    if (inst.alg.name(i) == "e3") e3 = i;
  mixed[0] = 1;
  mixed[e3] = 1;
  CHECK(!grade(Subspace::span(n, std::vector<Vec>{mixed}),
               inst.alg.parities())
             .has_value());
}
