#include "hls/superalgebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hls/error.hpp"

namespace hls {

namespace {

SparseVec normalize_sparse(SparseVec v) {
  std::sort(v.begin(), v.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [k, c] : v) {
    if (!out.empty() && out.back().first == k)
      out.back().second += c;
    else
      out.emplace_back(k, c);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& e) { return e.second == 0; }),
            out.end());
  return out;
}

SparseVec sparse_negate_signed(const SparseVec& v, int sign) {
  SparseVec out = v;
  for (auto& [k, c] : out) c = -sign * c;
  return normalize_sparse(std::move(out));
}

std::string sparse_str(const SparseVec& v,
                       const std::vector<std::string>& names) {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : v) {
    if (!first) os << " + ";
    os << rat_str(c) << "*" << names[k];
    first = false;
  }
  return os.str();
}

SparseVec dense_to_sparse(const Vec& v) {
  SparseVec out;
  for (size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out.emplace_back(static_cast<int>(k), v[k]);
  return out;
}

}  // namespace

Superalgebra Superalgebra::make(std::vector<std::string> names,
                                std::vector<Parity> parities,
                                const std::vector<BracketEntry>& entries,
                                Matrix twist, bool regular) {
  int n = static_cast<int>(names.size());
  if (static_cast<int>(parities.size()) != n)
    throw error(errc::parse, "parity list length does not match basis size");
  if (twist.rows() != n || twist.cols() != n)
    throw error(errc::parse, "twist matrix shape does not match basis size");
  {
    std::set<std::string> seen(names.begin(), names.end());
    if (static_cast<int>(seen.size()) != n)
      throw error(errc::parse, "duplicate basis names");
  }

  Superalgebra alg;
  alg.names_ = std::move(names);
  alg.parities_ = std::move(parities);
  alg.twist_ = std::move(twist);
  alg.regular_ = regular;

  std::map<std::pair<int, int>, SparseVec> given;
  for (const BracketEntry& e : entries) {
    if (e.left < 0 || e.left >= n || e.right < 0 || e.right >= n)
      throw error(errc::parse, "bracket entry index out of range");
    for (const auto& [k, c] : e.value) {
      (void)c;
      if (k < 0 || k >= n)
        throw error(errc::parse, "bracket entry target index out of range");
    }
    SparseVec value = normalize_sparse(e.value);
    auto key = std::make_pair(e.left, e.right);
    auto [it, inserted] = given.emplace(key, value);
    if (!inserted && it->second != value)
      throw error(errc::parse,
                  "CONSISTENCY: bracket entry (" + alg.names_[e.left] + "," +
                      alg.names_[e.right] + ") listed twice with values " +
                      sparse_str(it->second, alg.names_) + " and " +
                      sparse_str(value, alg.names_));
  }

  // Mirror completion under skew-supersymmetry; explicit mirror pairs are
  // cross-checked instead of overwritten.
  for (const auto& [key, value] : given) {
    auto [i, j] = key;
    if (value.empty()) continue;
    alg.bracket_[key] = value;
    if (i == j) continue;
    int sign = super_sign(alg.parities_[i], alg.parities_[j]);
    SparseVec mirrored = sparse_negate_signed(value, sign);
    auto mkey = std::make_pair(j, i);
    auto mit = given.find(mkey);
    if (mit != given.end()) {
      if (mit->second != mirrored)
        throw error(errc::parse,
                    "CONSISTENCY: mirror pair (" + alg.names_[i] + "," +
                        alg.names_[j] + ") / (" + alg.names_[j] + "," +
                        alg.names_[i] + ") conflicts: got " +
                        sparse_str(mit->second, alg.names_) + ", expected " +
                        sparse_str(mirrored, alg.names_));
    } else if (!mirrored.empty()) {
      alg.bracket_[mkey] = mirrored;
    }
  }
  return alg;
}

const SparseVec* Superalgebra::bracket_entry(int i, int j) const {
  auto it = bracket_.find({i, j});
  return it == bracket_.end() ? nullptr : &it->second;
}

Vec Superalgebra::bracket_basis(int i, int j) const {
  Vec out(dim());
  if (const SparseVec* e = bracket_entry(i, j))
    for (const auto& [k, c] : *e) out[k] += c;
  return out;
}

Vec Superalgebra::bracket(const Vec& x, const Vec& y) const {
  Vec out(dim());
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      const SparseVec* e = bracket_entry(i, j);
      if (!e) continue;
      Rat f = x[i] * y[j];
      for (const auto& [k, c] : *e) out[k] += f * c;
    }
  }
  return out;
}

Matrix Superalgebra::ad(const Vec& h) const {
  Matrix m(dim(), dim());
  for (int i = 0; i < dim(); ++i) {
    if (h[i] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      const SparseVec* e = bracket_entry(i, j);
      if (!e) continue;
      for (const auto& [k, c] : *e) m.at(k, j) += h[i] * c;
    }
  }
  return m;
}

const std::optional<Matrix>& Superalgebra::twist_inverse() const {
  if (!twist_inverse_) twist_inverse_ = inverse(twist_);
  return *twist_inverse_;
}

std::vector<BracketEntry> Superalgebra::bracket_table() const {
  std::vector<BracketEntry> out;
  out.reserve(bracket_.size());
  for (const auto& [key, value] : bracket_)
    out.push_back({key.first, key.second, value});
  return out;
}

Subspace Superalgebra::parity_axes(Parity p) const {
  std::vector<int> axes;
  for (int i = 0; i < dim(); ++i)
    if (parities_[i] == p) axes.push_back(i);
  return coordinate_subspace(dim(), axes);
}

bool Superalgebra::bracket_is_zero() const { return bracket_.empty(); }

std::optional<GradedSubspace> grade(const Subspace& s,
                                    const std::vector<Parity>& parities) {
  std::vector<int> even_axes, odd_axes;
  for (size_t i = 0; i < parities.size(); ++i)
    (parities[i] == Parity::even ? even_axes : odd_axes).push_back(static_cast<int>(i));
  int n = static_cast<int>(parities.size());
  Subspace even = intersect(s, coordinate_subspace(n, even_axes));
  Subspace odd = intersect(s, coordinate_subspace(n, odd_axes));
  if (even.dim() + odd.dim() != s.dim()) return std::nullopt;
  return GradedSubspace{s, even, odd};
}

GradedSubspace graded_zero(int ambient) {
  return {Subspace::zero(ambient), Subspace::zero(ambient),
          Subspace::zero(ambient)};
}

GradedSubspace graded_sum(const GradedSubspace& a, const GradedSubspace& b) {
  return {sum(a.total, b.total), sum(a.even, b.even), sum(a.odd, b.odd)};
}

namespace {

void add_violation(ValidationReport& report, std::string axiom,
                   std::vector<int> where, std::string detail) {
  report.passed = false;
  report.violations.push_back({std::move(axiom), std::move(where), std::move(detail)});
}

std::string vec_str_named(const Vec& v, const std::vector<std::string>& names) {
  return sparse_str(dense_to_sparse(v), names);
}

}  // namespace

ValidationReport validate(const Superalgebra& alg) {
  ValidationReport report;
  int n = alg.dim();
  const auto& names = alg.names();

  // Bracket grading: [L_a, L_b] ⊆ L_{a+b}.
  for (const BracketEntry& e : alg.bracket_table()) {
    Parity want = parity_sum(alg.parity(e.left), alg.parity(e.right));
    for (const auto& [k, c] : e.value) {
      (void)c;
      if (alg.parity(k) != want)
        add_violation(report, "grading", {e.left, e.right, k},
                      "[" + names[e.left] + "," + names[e.right] +
                          "] has a component on " + names[k] +
                          " of the wrong parity");
    }
  }

  // Skew-supersymmetry on every ordered pair.
  bool skew_ok = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec lhs = alg.bracket_basis(i, j);
      Vec rhs = vec_scale(
          Rat(-super_sign(alg.parity(i), alg.parity(j))),
          alg.bracket_basis(j, i));
      if (lhs != rhs) {
        skew_ok = false;
        add_violation(report, "skew_supersymmetry", {i, j},
                      "[" + names[i] + "," + names[j] + "] = " +
                          vec_str_named(lhs, names) + " but the mirror gives " +
                          vec_str_named(rhs, names));
      }
    }

  // Super Hom-Jacobi. Under skew-supersymmetry the cyclic sum is invariant
  // (up to a global sign) under permuting the triple, so sorted triples
  // suffice; without it every ordered triple is checked.
  auto jacobi_defect = [&](int i, int j, int k) {
    Vec t1 = alg.bracket(alg.bracket_basis(i, j), alg.twist().col(k));
    Vec t2 = alg.bracket(alg.bracket_basis(j, k), alg.twist().col(i));
    Vec t3 = alg.bracket(alg.bracket_basis(k, i), alg.twist().col(j));
    Vec acc = vec_scale(Rat(super_sign(alg.parity(i), alg.parity(k))), t1);
    vec_axpy(acc, Rat(super_sign(alg.parity(i), alg.parity(j))), t2);
    vec_axpy(acc, Rat(super_sign(alg.parity(j), alg.parity(k))), t3);
    return acc;
  };
  auto check_triple = [&](int i, int j, int k) {
    Vec defect = jacobi_defect(i, j, k);
    if (!is_zero(defect))
      add_violation(report, "hom_jacobi", {i, j, k},
                    "cyclic sum on (" + names[i] + "," + names[j] + "," +
                        names[k] + ") = " + vec_str_named(defect, names));
  };
  if (skew_ok) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = j; k < n; ++k) check_triple(i, j, k);
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) check_triple(i, j, k);
  }

  // The twist must be an even map.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (alg.twist().at(i, j) != 0 && alg.parity(i) != alg.parity(j))
        add_violation(report, "twist_parity", {i, j},
                      "twist sends " + names[j] + " across parities to " +
                          names[i]);

  // The twist must respect the bracket on every ordered pair.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec lhs = alg.twist_apply(alg.bracket_basis(i, j));
      Vec rhs = alg.bracket(alg.twist().col(i), alg.twist().col(j));
      if (lhs != rhs)
        add_violation(report, "twist_homomorphism", {i, j},
                      "twist([" + names[i] + "," + names[j] + "]) = " +
                          vec_str_named(lhs, names) +
                          " but [twist " + names[i] + ", twist " + names[j] +
                          "] = " + vec_str_named(rhs, names));
    }

  // A regular algebra needs an invertible twist.
  if (alg.regular() && !alg.twist_inverse())
    add_violation(report, "twist_regular", {},
                  "algebra is declared regular but the twist is singular");

  return report;
}

Superalgebra yau_twist(const Superalgebra& alg, const Matrix& psi) {
  int n = alg.dim();
  if (alg.twist() != Matrix::identity(n))
    throw error(errc::validation,
                "yau_twist input must carry the identity twist");
  auto psi_inv = inverse(psi);
  if (!psi_inv)
    throw error(errc::validation, "yau_twist map is singular");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (psi.at(i, j) != 0 && alg.parity(i) != alg.parity(j))
        throw error(errc::validation, "yau_twist map is not even");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (psi.apply(alg.bracket_basis(i, j)) !=
          alg.bracket(psi.col(i), psi.col(j)))
        throw error(errc::validation,
                    "yau_twist map is not a bracket automorphism (pair " +
                        alg.name(i) + "," + alg.name(j) + ")");

  std::vector<BracketEntry> entries;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseVec v = dense_to_sparse(psi.apply(alg.bracket_basis(i, j)));
      if (!v.empty()) entries.push_back({i, j, std::move(v)});
    }
  return Superalgebra::make(alg.names(), alg.parities(), entries, psi,
                            alg.regular());
}

Superalgebra change_of_basis(const Superalgebra& alg, const Matrix& p) {
  int n = alg.dim();
  auto p_inv = inverse(p);
  if (!p_inv) throw error(errc::validation, "change of basis is singular");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.at(i, j) != 0 && alg.parity(i) != alg.parity(j))
        throw error(errc::validation,
                    "change of basis does not preserve parity");

  std::vector<BracketEntry> entries;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec w = p_inv->apply(alg.bracket(p.col(i), p.col(j)));
      SparseVec v = dense_to_sparse(w);
      if (!v.empty()) entries.push_back({i, j, std::move(v)});
    }
  Matrix new_twist = (*p_inv) * alg.twist() * p;
  return Superalgebra::make(alg.names(), alg.parities(), entries, new_twist,
                            alg.regular());
}

Restriction restrict_to(const Superalgebra& alg, const GradedSubspace& sub,
                        const std::string& prefix) {
  int n = alg.dim();
  if (sub.even.dim() + sub.odd.dim() != sub.total.dim())
    throw error(errc::validation, "restriction target is not graded");

  std::vector<Vec> rows;
  std::vector<Parity> parities;
  for (int i = 0; i < sub.even.dim(); ++i) {
    rows.push_back(sub.even.basis_row(i));
    parities.push_back(Parity::even);
  }
  for (int i = 0; i < sub.odd.dim(); ++i) {
    rows.push_back(sub.odd.basis_row(i));
    parities.push_back(Parity::odd);
  }
  int r = static_cast<int>(rows.size());
  Matrix embed = Matrix::from_rows(rows, n);

  // Original basis vectors keep their names; other rows get synthesized ones.
  std::vector<std::string> names;
  std::set<std::string> used;
  for (int a = 0; a < r; ++a) {
    std::string name;
    int unit = -1, nonzeros = 0;
    for (int j = 0; j < n; ++j)
      if (rows[a][j] != 0) {
        ++nonzeros;
        if (rows[a][j] == 1) unit = j;
      }
    if (nonzeros == 1 && unit >= 0)
      name = alg.name(unit);
    else
      name = prefix + std::to_string(a);
    while (used.count(name)) name += "'";
    used.insert(name);
    names.push_back(name);
  }

  auto coords_or_fail = [&](const Vec& w, const std::string& what) {
    auto c = coordinates_in(embed, w);
    if (!c)
      throw error(errc::validation,
                  "restriction target is not closed under " + what);
    return *c;
  };

  std::vector<BracketEntry> entries;
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      Vec w = alg.bracket(rows[a], rows[b]);
      SparseVec v = dense_to_sparse(coords_or_fail(w, "the bracket"));
      if (!v.empty()) entries.push_back({a, b, std::move(v)});
    }

  Matrix twist(r, r);
  for (int a = 0; a < r; ++a) {
    Vec c = coords_or_fail(alg.twist_apply(rows[a]), "the twist");
    for (int b = 0; b < r; ++b) twist.at(b, a) = c[b];
  }
  bool regular = inverse(twist).has_value();
  Superalgebra out = Superalgebra::make(std::move(names), std::move(parities),
                                        entries, std::move(twist), regular);
  return {std::move(out), std::move(embed)};
}

}  // namespace hls
