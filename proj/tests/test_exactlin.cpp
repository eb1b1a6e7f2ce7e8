#include <doctest.h>

#include <map>
#include <random>

#include "hls/eigen.hpp"
#include "hls/matrix.hpp"
#include "hls/rational.hpp"
#include "hls/subspace.hpp"

using namespace hls;

namespace {

// Deterministic small random matrices for the property checks.
Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, int spread) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = rat(static_cast<long>(rng() % (2 * spread + 1)) - spread);
  return m;
}

Matrix random_invertible(std::mt19937_64& rng, int n) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, 3);
    if (inverse(m).has_value()) return m;
  }
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(rat_parse("3/6") == rat(1, 2));
  CHECK(rat_parse("-4/2") == rat(-2));
  CHECK(rat_parse("0") == 0);
  CHECK(rat_str(rat(-3, 9)) == "-1/3");
  CHECK(rat_str(rat(5)) == "5");
  CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("2/-3"), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_parse("+"), std::invalid_argument);
}

TEST_CASE("rref is idempotent and canonical") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = random_matrix(rng, 4, 6, 4);
    Matrix r = rref(m);
    CHECK(rref(r) == r);
    CHECK(r.rows() == rank(m));
    // Pivot columns strictly increase and pivots are exactly 1.
    int last = -1;
    for (int i = 0; i < r.rows(); ++i) {
      int p = 0;
      while (p < r.cols() && r.at(i, p) == 0) ++p;
      CHECK(p > last);
      CHECK(r.at(i, p) == 1);
      last = p;
    }
  }
}

TEST_CASE("rank-nullity over random matrices") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    int rows = 2 + static_cast<int>(rng() % 4);
    int cols = 2 + static_cast<int>(rng() % 4);
    Matrix m = random_matrix(rng, rows, cols, 3);
    Matrix k = kernel_basis(m);
    CHECK(rank(m) + k.rows() == cols);
    for (int i = 0; i < k.rows(); ++i) CHECK(hls::is_zero(m.apply(k.row(i))));
  }
}

TEST_CASE("inverse and solve are exact") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Matrix m = random_invertible(rng, n);
    Matrix inv = *inverse(m);
    CHECK(m * inv == Matrix::identity(n));
    CHECK(inv * m == Matrix::identity(n));
    Vec b = random_matrix(rng, 1, n, 5).row(0);
    auto x = solve(m, b);
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == b);
  }
  // Inconsistent system.
  Matrix a(2, 1);
  a.at(0, 0) = 1;
  a.at(1, 0) = 1;
  CHECK(!solve(a, Vec{rat(1), rat(2)}).has_value());
}

TEST_CASE("subspace dimension identity for sums and intersections") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng() % 3);
    Subspace a = Subspace::span(n, random_matrix(rng, 1 + rng() % 3, n, 2));
    Subspace b = Subspace::span(n, random_matrix(rng, 1 + rng() % 3, n, 2));
    Subspace s = sum(a, b);
    Subspace i = intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("greedy complements split the whole space") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 4 + static_cast<int>(rng() % 3);
    Subspace whole = Subspace::full(n);
    Subspace part = Subspace::span(n, random_matrix(rng, 1 + rng() % 3, n, 2));
    Subspace c = greedy_complement(whole, part);
    CHECK(c.dim() + part.dim() == n);
    CHECK(intersect(c, part).is_zero());
    CHECK(sum(c, part) == whole);
  }
}

TEST_CASE("coordinates_in recovers coefficients") {
  Matrix basis(2, 3);
  basis.set_row(0, Vec{rat(1), rat(0), rat(2)});
  basis.set_row(1, Vec{rat(0), rat(1), rat(-1)});
  Vec v{rat(3), rat(-2), rat(8)};  // 3*row0 - 2*row1
  auto c = coordinates_in(basis, v);
  REQUIRE(c.has_value());
  CHECK(*c == Vec{rat(3), rat(-2)});
  CHECK(!coordinates_in(basis, Vec{rat(0), rat(0), rat(1)}).has_value());
}

TEST_CASE("characteristic polynomial on a known matrix") {
  // [[2,1],[0,3]]: (λ-2)(λ-3) = λ² - 5λ + 6.
  Matrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 1;
  m.at(1, 1) = 3;
  Vec p = char_poly(m);
  REQUIRE(p.size() == 3);
  CHECK(p[0] == 6);
  CHECK(p[1] == -5);
  CHECK(p[2] == 1);
}

TEST_CASE("rational eigenvalues with fractional entries") {
  // diag(1/2, -3, 1/2): eigenvalues {-3, 1/2}.
  Matrix m(3, 3);
  m.at(0, 0) = rat(1, 2);
  m.at(1, 1) = -3;
  m.at(2, 2) = rat(1, 2);
  std::vector<Rat> ev = rational_eigenvalues(m);
  REQUIRE(ev.size() == 2);
  CHECK(ev[0] == rat(-3));
  CHECK(ev[1] == rat(1, 2));

  // Rotation has no rational (or real) eigenvalues.
  Matrix rot(2, 2);
  rot.at(0, 1) = -1;
  rot.at(1, 0) = 1;
  CHECK(rational_eigenvalues(rot).empty());
}

TEST_CASE("simultaneous eigenspaces match a constructed oracle on 4x4 pairs") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 4;
    Matrix p = random_invertible(rng, n);
    Matrix p_inv = *inverse(p);
    // Commuting pair sharing eigenvectors (the columns of p); joint
    // eigenvalue of column i is (a[i], b[i]).
    Vec a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = rat(static_cast<long>(rng() % 5) - 2, 1 + rng() % 2);
      b[i] = rat(static_cast<long>(rng() % 5) - 2);
    }
    Matrix da(n, n), db(n, n);
    for (int i = 0; i < n; ++i) {
      da.at(i, i) = a[i];
      db.at(i, i) = b[i];
    }
    Matrix ma = p * da * p_inv;
    Matrix mb = p * db * p_inv;
    CHECK(ma * mb == mb * ma);

    EigenRefinement result =
        simultaneous_eigenspaces({ma, mb}, Subspace::full(n));
    CHECK(result.unsplit.empty());

    // Oracle: group the columns of p by joint eigenvalue tuple.
    std::map<Vec, std::vector<Vec>, VecLess> groups;
    for (int i = 0; i < n; ++i) groups[Vec{a[i], b[i]}].push_back(p.col(i));
    CHECK(result.blocks.size() == groups.size());
    for (const auto& block : result.blocks) {
      auto it = groups.find(block.eigenvalues);
      REQUIRE(it != groups.end());
      CHECK(block.space == Subspace::span(n, it->second));
    }
  }
}

TEST_CASE("simultaneous eigenspaces report irrational blocks as unsplit") {
  // Block diag(rotation, 2): the rotation plane cannot split over Q, so the
  // rational eigenspaces fail to span and the whole starting block lands in
  // the unsplit residue untouched.
  Matrix m(3, 3);
  m.at(0, 1) = -1;
  m.at(1, 0) = 1;
  m.at(2, 2) = 2;
  EigenRefinement result = simultaneous_eigenspaces({m}, Subspace::full(3));
  REQUIRE(result.unsplit.size() == 1);
  CHECK(result.unsplit[0] == Subspace::full(3));
  CHECK(result.blocks.empty());

  // Feeding a genuinely invariant rational chunk first still refines it:
  // restrict to the eigenline directly.
  EigenRefinement line = simultaneous_eigenspaces(
      {m}, Subspace::span(3, std::vector<Vec>{vec_unit(3, 2)}));
  CHECK(line.unsplit.empty());
  REQUIRE(line.blocks.size() == 1);
  CHECK(line.blocks[0].eigenvalues == Vec{rat(2)});
  CHECK(line.blocks[0].space.dim() == 1);
}
