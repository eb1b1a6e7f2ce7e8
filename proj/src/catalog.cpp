#include "hls/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "hls/error.hpp"

namespace hls {

namespace {

GradedSubspace graded_axes(const Superalgebra& alg,
                           const std::vector<int>& axes) {
  auto g = grade(coordinate_subspace(alg.dim(), axes), alg.parities());
  internal_check(g.has_value(), "axis span fails to be graded");
  return *g;
}

// example1 with a caller-supplied twist value on e3 and regularity flag;
// shared by the regular and non-regular builders.
CatalogInstance example1_impl(int upper, const Rat& e3_twist, bool regular) {
  if (upper < 2)
    throw error(errc::usage, "example1 needs truncation parameter N >= 2");
  int blocks = upper - 1;  // n runs over 2..upper
  int e1 = 0, e2 = 1;
  auto h = [&](int n) { return 2 + (n - 2); };
  auto x = [&](int n) { return 2 + blocks + (n - 2); };
  auto y = [&](int n) { return 2 + 2 * blocks + (n - 2); };
  int e3 = 2 + 3 * blocks;
  auto f = [&](int n) { return 3 + 3 * blocks + (n - 2); };
  auto g = [&](int n) { return 3 + 4 * blocks + (n - 2); };
  int dim = 3 + 5 * blocks;

  std::vector<std::string> names(dim);
  std::vector<Parity> parities(dim, Parity::even);
  names[e1] = "e1";
  names[e2] = "e2";
  names[e3] = "e3";
  parities[e3] = Parity::odd;
  Matrix twist(dim, dim);
  twist.at(e1, e1) = 1;
  twist.at(e2, e2) = 1;
  twist.at(e3, e3) = e3_twist;

  std::vector<BracketEntry> rel;
  rel.push_back({e2, e1, {{e1, rat(1)}}});
  for (int n = 2; n <= upper; ++n) {
    std::string s = std::to_string(n);
    names[h(n)] = "h" + s;
    names[x(n)] = "x" + s;
    names[y(n)] = "y" + s;
    names[f(n)] = "f" + s;
    names[g(n)] = "g" + s;
    parities[f(n)] = Parity::odd;
    parities[g(n)] = Parity::odd;
    Rat n2 = rat(n) * rat(n);
    twist.at(h(n), h(n)) = 1;
    twist.at(x(n), x(n)) = n2;
    twist.at(y(n), y(n)) = 1 / n2;
    twist.at(f(n), f(n)) = rat(1, n);
    twist.at(g(n), g(n)) = rat(n);
    rel.push_back({h(n), x(n), {{x(n), 2 * n2}}});
    rel.push_back({h(n), y(n), {{y(n), -2 / n2}}});
    rel.push_back({x(n), y(n), {{h(n), rat(1)}}});
    rel.push_back({y(n), g(n), {{f(n), rat(1, n)}}});
    rel.push_back({x(n), f(n), {{g(n), rat(n)}}});
    rel.push_back({h(n), f(n), {{f(n), rat(-1, n)}}});
    rel.push_back({h(n), g(n), {{g(n), rat(n)}}});
    rel.push_back({g(n), f(n), {{h(n), rat(1)}}});
    rel.push_back({g(n), g(n), {{x(n), -2 * n2}}});
    rel.push_back({f(n), f(n), {{y(n), 2 / n2}}});
  }

  CatalogInstance out{
      Superalgebra::make(names, parities, rel, twist, regular),
      graded_zero(dim), {}, {}, {}};
  out.magsa_indices.push_back(e2);
  for (int n = 2; n <= upper; ++n) out.magsa_indices.push_back(h(n));
  out.magsa_indices.push_back(e3);
  out.magsa = graded_axes(out.alg, out.magsa_indices);

  out.expected.root_count = 4 * blocks + 1;
  out.expected.class_count = 1 + blocks;
  out.expected.ideal_dims.assign(blocks, 5);
  out.expected.ideal_dims.push_back(1);
  std::sort(out.expected.ideal_dims.begin(), out.expected.ideal_dims.end());
  out.expected.u_dim = 2;
  out.expected.verdict = SimplicityVerdict::not_simple;
  return out;
}

long integer_param(const std::optional<std::string>& parameter, long fallback,
                   const char* what) {
  if (!parameter) return fallback;
  Rat value;
  try {
    value = rat_parse(*parameter);
  } catch (const std::invalid_argument& e) {
    throw error(errc::usage, std::string(what) + ": " + e.what());
  }
  if (value.get_den() != 1)
    throw error(errc::usage, std::string(what) + " must be an integer");
  return value.get_num().get_si();
}

}  // namespace

CatalogInstance example1(int upper) { return example1_impl(upper, 1, true); }

CatalogInstance example1_nonregular(int upper) {
  CatalogInstance out = example1_impl(upper, 0, false);
  out.notes.push_back(
      "the twist annihilates e3, an odd element of H, so it is not bijective "
      "on all of H; analysis runs in non-regular mode, which only needs "
      "bijectivity on the even part of H");
  out.notes.push_back(
      "expected to reproduce the regular fixture's roots, classes, and ideal "
      "dimensions exactly");
  return out;
}

CatalogInstance sl2_twisted(const Rat& t) {
  if (t == 0) throw error(errc::usage, "sl2-twisted needs a nonzero factor");
  std::vector<std::string> names{"h", "x", "y"};
  std::vector<Parity> parities(3, Parity::even);
  std::vector<BracketEntry> rel{
      {0, 1, {{1, rat(2)}}},   // [h,x] = 2x
      {0, 2, {{2, rat(-2)}}},  // [h,y] = -2y
      {1, 2, {{0, rat(1)}}},   // [x,y] = h
  };
  Superalgebra lie =
      Superalgebra::make(names, parities, rel, Matrix::identity(3), true);
  Matrix psi(3, 3);
  psi.at(0, 0) = 1;
  psi.at(1, 1) = t;
  psi.at(2, 2) = 1 / t;

  CatalogInstance out{yau_twist(lie, psi), graded_zero(3), {0}, {}, {}};
  out.magsa = graded_axes(out.alg, out.magsa_indices);
  out.expected.root_count = 2;
  out.expected.class_count = 1;
  out.expected.ideal_dims = {3};
  out.expected.u_dim = 0;
  out.expected.verdict = SimplicityVerdict::simple;
  return out;
}

CatalogInstance abelian(int dim) {
  if (dim < 1) throw error(errc::usage, "abelian needs dimension >= 1");
  std::vector<std::string> names;
  std::vector<Parity> parities;
  std::vector<int> axes;
  for (int i = 0; i < dim; ++i) {
    names.push_back("z" + std::to_string(i + 1));
    parities.push_back(i % 2 == 0 ? Parity::even : Parity::odd);
    axes.push_back(i);
  }
  CatalogInstance out{Superalgebra::make(names, parities, {},
                                         Matrix::identity(dim), true),
                      graded_zero(dim), axes, {}, {}};
  out.magsa = graded_axes(out.alg, axes);
  out.expected.root_count = 0;
  out.expected.class_count = 0;
  out.expected.u_dim = dim;
  out.expected.verdict = SimplicityVerdict::not_simple;
  return out;
}

CatalogInstance component_restriction(const Superalgebra& alg,
                                      const ClassIdeal& ideal) {
  if (!ideal.certified_subalgebra || !ideal.certified_ideal)
    throw error(errc::validation,
                "component restriction needs a certified class ideal");
  Restriction restricted = restrict_to(alg, ideal.total, "c");

  std::vector<Vec> h_rows;
  for (int i = 0; i < ideal.h_part.dim(); ++i) {
    auto coords = coordinates_in(restricted.embed, ideal.h_part.basis_row(i));
    internal_check(coords.has_value(), "H_[α] escapes its own ideal");
    h_rows.push_back(*coords);
  }
  Subspace h_total = Subspace::span(restricted.alg.dim(), h_rows);
  auto h_graded = grade(h_total, restricted.alg.parities());
  internal_check(h_graded.has_value(), "restricted H fails to be graded");

  CatalogInstance out{restricted.alg, *h_graded, {}, {}, {}};
  // Report H as basis indices when its canonical rows are coordinate axes.
  std::vector<int> axes;
  for (int i = 0; i < h_total.dim(); ++i) {
    Vec row = h_total.basis_row(i);
    int axis = -1;
    for (int j = 0; j < restricted.alg.dim() && axis != -2; ++j) {
      if (row[j] == 0) continue;
      axis = (axis == -1 && row[j] == 1) ? j : -2;
    }
    if (axis < 0) {
      axes.clear();
      break;
    }
    axes.push_back(axis);
  }
  out.magsa_indices = axes;
  return out;
}

CatalogInstance catalog_entry(const std::string& name,
                              const std::optional<std::string>& parameter) {
  if (name == "example1")
    return example1(static_cast<int>(integer_param(parameter, 2, "example1")));
  if (name == "example1-nonregular")
    return example1_nonregular(
        static_cast<int>(integer_param(parameter, 2, "example1-nonregular")));
  if (name == "sl2-twisted") {
    Rat t = rat(2);
    if (parameter) {
      try {
        t = rat_parse(*parameter);
      } catch (const std::invalid_argument& e) {
        throw error(errc::usage, std::string("sl2-twisted: ") + e.what());
      }
    }
    return sl2_twisted(t);
  }
  if (name == "abelian")
    return abelian(static_cast<int>(integer_param(parameter, 2, "abelian")));
  throw error(errc::usage, "unknown catalog entry '" + name +
                               "'; available: example1, example1-nonregular, "
                               "sl2-twisted, abelian");
}

std::vector<std::string> catalog_names() {
  return {"example1", "example1-nonregular", "sl2-twisted", "abelian"};
}

}  // namespace hls
