#include "hls/oracle.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "hls/connect.hpp"
#include "hls/decomp.hpp"
#include "hls/error.hpp"

namespace hls {

namespace {

// Independent center test (per-column kernels intersected, unlike the
// stacked-operator computation the certification path uses).
bool center_is_zero(const Superalgebra& alg) {
  int n = alg.dim();
  Subspace z = Subspace::full(n);
  for (int j = 0; j < n && !z.is_zero(); ++j) {
    Matrix rj(n, n);  // v ↦ [v, e_j]
    for (int i = 0; i < n; ++i)
      if (const SparseVec* e = alg.bracket_entry(i, j))
        for (const auto& [k, c] : *e) rj.at(k, i) += c;
    z = intersect(z, Subspace::span(n, kernel_basis(rj)));
  }
  return z.is_zero();
}

Rat dot(const Vec& a, const Vec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

GeneratedIdeal generate_ideal(const Superalgebra& alg, const Vec& seed) {
  int n = alg.dim();
  GeneratedIdeal out;
  out.seed = seed;
  Subspace cur = Subspace::span(n, std::vector<Vec>{seed});
  for (;;) {
    std::vector<Vec> rows = cur.basis_rows();
    for (int i = 0; i < cur.dim(); ++i) {
      Vec b = cur.basis_row(i);
      for (int j = 0; j < n; ++j)
        rows.push_back(alg.bracket(b, vec_unit(n, j)));
      rows.push_back(alg.twist_apply(b));
      if (alg.regular()) rows.push_back(alg.twist_inverse()->apply(b));
    }
    Subspace next = Subspace::span(n, rows);
    if (next == cur) break;
    cur = next;
    ++out.rounds;
  }
  out.closure = cur;

  // Re-certify the result against the ideal definition; the fixpoint makes
  // these hold, so a failure is a bug.
  for (int i = 0; i < cur.dim(); ++i)
    for (int j = 0; j < n; ++j)
      internal_check(
          cur.contains(alg.bracket(cur.basis_row(i), vec_unit(n, j))),
          "generated ideal does not absorb brackets");
  Subspace image = cur.image(alg.twist());
  internal_check(alg.regular() ? image == cur : cur.contains(image),
                 "generated ideal is not twist-stable");
  return out;
}

OracleReport brute_simplicity(const Superalgebra& alg,
                              const RootDecomposition& dec) {
  int n = alg.dim();
  OracleReport report;

  bool maxlen = true;
  for (const RootSpace& rs : dec.spaces)
    if (rs.space.even.dim() > 1 || rs.space.odd.dim() > 1) maxlen = false;
  if (!maxlen) {
    report.notes.push_back(
        "inapplicable: a root-space parity piece has dimension above one");
    return report;
  }
  if (!center_is_zero(alg)) {
    report.notes.push_back("inapplicable: the center is nonzero");
    return report;
  }
  if (dec.root_count() == 0) {
    report.notes.push_back("inapplicable: the root system is empty");
    return report;
  }

  // With one-dimensional pieces and zero center, every nonzero graded ideal
  // contains a whole root-space piece, so these closures exhaust the
  // candidate minimal ideals.
  int seeds = 0;
  for (const RootSpace& rs : dec.spaces)
    for (const Subspace* piece : {&rs.space.even, &rs.space.odd}) {
      if (piece->is_zero()) continue;
      ++seeds;
      GeneratedIdeal gen = generate_ideal(alg, piece->basis_row(0));
      internal_check(!gen.closure.is_zero(), "closure of a nonzero seed is zero");
      if (gen.closure.dim() < n) {
        report.verdict = OracleVerdict::not_simple;
        report.witness = std::move(gen);
        std::ostringstream os;
        os << "a root-space vector generates a proper ideal of dim "
           << report.witness->closure.dim();
        report.notes.push_back(os.str());
        return report;
      }
    }
  report.verdict = OracleVerdict::simple;
  std::ostringstream os;
  os << "all " << seeds << " root-piece closures equal the whole algebra";
  report.notes.push_back(os.str());
  return report;
}

namespace {

// Incremental direct-sum assembly of fuzz templates. All template twists are
// diagonal; a later change of basis produces dense ones.
struct Assembler {
  std::vector<std::string> names;
  std::vector<Parity> parities;
  std::vector<BracketEntry> entries;
  std::vector<Rat> twist_diag;
  std::vector<int> magsa;

  int dim() const { return static_cast<int>(names.size()); }

  int add(const std::string& name, Parity p, const Rat& d, bool in_magsa) {
    names.push_back(name);
    parities.push_back(p);
    twist_diag.push_back(d);
    if (in_magsa) magsa.push_back(dim() - 1);
    return dim() - 1;
  }

  void rel(int i, int j, const SparseVec& v) {
    entries.push_back(BracketEntry{i, j, v});
  }

  Superalgebra build() const {
    int n = dim();
    Matrix twist(n, n);
    for (int i = 0; i < n; ++i) twist.at(i, i) = twist_diag[i];
    return Superalgebra::make(names, parities, entries, twist, true);
  }
};

// Twisted sl(2): [h,x] = 2t·x, [h,y] = −(2/t)·y, [x,y] = h, twist
// diag(1, t, 1/t). Valid for every rational t ≠ 0; the lone root pair is
// ±α with α(h) = 2.
void add_sl2(Assembler& a, const Rat& t, int tag) {
  std::string s = std::to_string(tag);
  int h = a.add("h" + s, Parity::even, 1, true);
  int x = a.add("x" + s, Parity::even, t, false);
  int y = a.add("y" + s, Parity::even, 1 / t, false);
  a.rel(h, x, {{x, 2 * t}});
  a.rel(h, y, {{y, -2 / t}});
  a.rel(x, y, {{h, 1}});
}

// Five-dimensional h/x/y/f/g template with rational parameter n ≠ 0 (the
// relations are rational identities in n, so any nonzero value is valid).
// Roots on ⟨h⟩: ±2 (even spaces) and ∓1 (odd spaces); simple.
void add_block5(Assembler& a, const Rat& n, int tag) {
  std::string s = std::to_string(tag);
  Rat n2 = n * n;
  int h = a.add("h" + s, Parity::even, 1, true);
  int x = a.add("x" + s, Parity::even, n2, false);
  int y = a.add("y" + s, Parity::even, 1 / n2, false);
  int f = a.add("f" + s, Parity::odd, 1 / n, false);
  int g = a.add("g" + s, Parity::odd, n, false);
  a.rel(h, x, {{x, 2 * n2}});
  a.rel(h, y, {{y, -2 / n2}});
  a.rel(x, y, {{h, 1}});
  a.rel(y, g, {{f, 1 / n}});
  a.rel(x, f, {{g, n}});
  a.rel(h, f, {{f, -1 / n}});
  a.rel(h, g, {{g, n}});
  a.rel(g, f, {{h, 1}});
  a.rel(g, g, {{x, -2 * n2}});
  a.rel(f, f, {{y, 2 / n2}});
}

void add_abelian(Assembler& a, Parity p, const Rat& d, int tag) {
  a.add("z" + std::to_string(tag), p, d, true);
}

Rat random_nonzero(std::mt19937_64& rng) {
  long num = 1 + static_cast<long>(rng() % 4);
  long den = 1 + static_cast<long>(rng() % 3);
  long sign = rng() % 4 == 0 ? -1 : 1;
  return rat(sign * num, den);
}

}  // namespace

FuzzInstance fuzz_instance(uint64_t seed, int max_dim) {
  internal_check(max_dim >= 3, "fuzz_instance needs max_dim >= 3");
  std::mt19937_64 rng(seed);
  Assembler a;
  std::ostringstream desc;
  int tag = 0;

  while (max_dim - a.dim() >= 3) {
    int remaining = max_dim - a.dim();
    int kind = static_cast<int>(rng() % 3);
    if (kind == 1 && remaining < 5) kind = 0;
    ++tag;
    if (a.dim() > 0) desc << " + ";
    if (kind == 0) {
      Rat t = random_nonzero(rng);
      add_sl2(a, t, tag);
      desc << "sl2(t=" << rat_str(t) << ")";
    } else if (kind == 1) {
      Rat n = random_nonzero(rng);
      add_block5(a, n, tag);
      desc << "block5(n=" << rat_str(n) << ")";
    } else {
      int k = 1 + static_cast<int>(rng() % 2);
      k = std::min(k, remaining);
      for (int i = 0; i < k; ++i) {
        Parity p = rng() % 2 == 0 ? Parity::even : Parity::odd;
        add_abelian(a, p, random_nonzero(rng), ++tag);
      }
      desc << "abelian(" << k << ")";
    }
  }

  Superalgebra alg = a.build();
  Subspace h_span = coordinate_subspace(alg.dim(), a.magsa);

  // Optional random parity-preserving change of basis, with the splitting
  // subalgebra transported along.
  if (rng() % 2 == 0) {
    int n = alg.dim();
    Matrix p;
    bool found = false;
    for (int attempt = 0; attempt < 8 && !found; ++attempt) {
      Matrix cand(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (alg.parity(i) != alg.parity(j)) continue;
          cand.at(i, j) = rat(static_cast<long>(rng() % 5) - 2);
        }
      if (inverse(cand).has_value()) {
        p = cand;
        found = true;
      }
    }
    if (found) {
      Matrix p_inv = *inverse(p);
      alg = change_of_basis(alg, p);
      h_span = Subspace::span(n, h_span.basis() * p_inv.transpose());
      desc << " / basis change";
    }
  }

  FuzzInstance out{alg, graded_zero(alg.dim()), desc.str()};
  auto g = grade(h_span, alg.parities());
  internal_check(g.has_value(), "fuzz MAGSA fails to be graded");
  out.magsa = *g;
  return out;
}

std::optional<Vec> separating_element(const RootDecomposition& dec, int alpha,
                                      int beta) {
  int m = dec.h_basis.rows();
  const Vec& a = dec.spaces[alpha].root;
  const Vec& b = dec.spaces[beta].root;
  auto ambient = [&](const Vec& coeffs) {
    Vec h(dec.h_basis.cols());
    for (int j = 0; j < m; ++j) vec_axpy(h, coeffs[j], dec.h_basis.row(j));
    return h;
  };
  auto good = [&](const Vec& coeffs) {
    Rat va = dot(coeffs, a);
    return !(va == 0) && va != dot(coeffs, b);
  };

  for (int i = 0; i < m; ++i) {
    Vec unit = vec_unit(m, i);
    if (good(unit)) return ambient(unit);
  }
  // Vandermonde probe h = Σ t^j b_j: each disqualifying condition is a
  // nonzero polynomial in t of degree < m, so 2m+1 values cannot all fail.
  for (long t = 1; t <= 2 * m + 1; ++t) {
    Vec coeffs(m);
    Rat power = 1;
    for (int j = 0; j < m; ++j) {
      coeffs[j] = power;
      power *= t;
    }
    if (good(coeffs)) return ambient(coeffs);
  }
  return std::nullopt;
}

namespace {

struct SuiteRun {
  std::vector<PropertyViolation>& out;
  uint64_t seed;

  void fail(const std::string& property, const std::string& detail) {
    out.push_back(PropertyViolation{seed, property, detail});
  }
};

bool same_instance(const FuzzInstance& a, const FuzzInstance& b) {
  if (a.alg.names() != b.alg.names()) return false;
  if (a.alg.parities() != b.alg.parities()) return false;
  if (a.alg.twist() != b.alg.twist()) return false;
  if (a.magsa.total != b.magsa.total) return false;
  if (a.description != b.description) return false;
  for (int i = 0; i < a.alg.dim(); ++i)
    for (int j = 0; j < a.alg.dim(); ++j)
      if (a.alg.bracket_basis(i, j) != b.alg.bracket_basis(i, j)) return false;
  return true;
}

void run_one(SuiteRun& run, const FuzzInstance& inst) {
  const Superalgebra& alg = inst.alg;
  int n = alg.dim();

  ValidationReport val = validate(alg);
  if (!val.passed) {
    run.fail("axioms", val.violations.front().axiom + ": " +
                           val.violations.front().detail);
    return;
  }
  MagsaReport magsa = verify_magsa(alg, inst.magsa);
  if (!magsa.ok()) {
    run.fail("magsa", "transported MAGSA fails a splitting requirement");
    return;
  }

  SplitAnalysis analysis = analyze_roots(alg, inst.magsa);
  if (analysis.status != SplitAnalysis::Status::split) {
    run.fail("split", analysis.detail);
    return;
  }
  const RootDecomposition& dec = *analysis.dec;

  TransportReport transport = check_transport(alg, dec);
  if (!transport.ok) run.fail("transport", transport.failures.front());

  RootPartition partition = connection_classes(dec);
  for (int i = 0; i < dec.root_count(); ++i)
    for (int j = 0; j < dec.root_count(); ++j) {
      bool connected = partition.class_of[i] == partition.class_of[j];
      auto witness = connection_witness(dec, i, j);
      if (witness.has_value() != connected) {
        run.fail("connection", "witness existence disagrees with partition");
        continue;
      }
      std::string why;
      if (witness && !check_witness(dec, i, j, *witness, &why))
        run.fail("witness", why);
    }

  IdealDecomposition global = global_decomposition(alg, dec, partition);
  for (const ClassIdeal& ideal : global.ideals) {
    if (!ideal.certified_subalgebra)
      run.fail("class_subalgebra", "class ideal fails subalgebra containment");
    if (!ideal.certified_ideal)
      run.fail("class_ideal", "class ideal fails ideal containment");
  }
  if (!global.pairwise_orthogonal)
    run.fail("orthogonality", "distinct class ideals have nonzero bracket");

  StructureFlags flags = structure_flags(alg, dec, partition);
  if (flags.center_zero && flags.h_generated && !global.direct_sum)
    run.fail("direct_sum", "zero center and H-generation without directness");

  SimplicityReport simplicity = certify_simple(alg, dec, partition);
  if (simplicity.verdict == SimplicityVerdict::not_simple &&
      !simplicity.witness_ideal && !alg.bracket_is_zero())
    run.fail("witness_ideal", "NOT_SIMPLE without witness on nonzero bracket");

  for (const RootSpace& rs : dec.spaces)
    for (const Subspace* piece : {&rs.space.even, &rs.space.odd}) {
      if (piece->is_zero()) continue;
      GeneratedIdeal gen = generate_ideal(alg, piece->basis_row(0));
      IdealSupport support = ideal_support(alg, dec, gen.closure);
      if (!support.reconstructs)
        run.fail("ideal_support",
                 "generated ideal does not decompose along root spaces");
    }

  for (int i = 0; i < dec.root_count(); ++i)
    for (int j = 0; j < dec.root_count(); ++j) {
      if (i == j) continue;
      if (!separating_element(dec, i, j).has_value())
        run.fail("separating_element", "no separating even element found");
    }

  if (flags.maximal_length && flags.root_multiplicative && flags.center_zero &&
      flags.h_generated && flags.symmetric_roots) {
    std::vector<ComponentReport> components =
        simple_components(alg, dec, partition);
    for (const ComponentReport& comp : components)
      if (comp.verdict != SimplicityVerdict::simple)
        run.fail("components", "a component is not certified simple");
  }
  (void)n;
}

}  // namespace

std::vector<PropertyViolation> run_property_suite(
    const std::vector<uint64_t>& seeds, int max_dim, std::ostream* progress) {
  std::vector<PropertyViolation> violations;
  for (uint64_t seed : seeds) {
    SuiteRun run{violations, seed};
    size_t before = violations.size();
    try {
      FuzzInstance inst = fuzz_instance(seed, max_dim);
      if (!same_instance(inst, fuzz_instance(seed, max_dim)))
        run.fail("determinism", "two builds from one seed differ");
      run_one(run, inst);
    } catch (const error& e) {
      run.fail(std::string("exception_") + category_name(e.category()),
               e.what());
    } catch (const std::exception& e) {
      run.fail("exception", e.what());
    }
    if (progress)
      *progress << "seed " << seed << ": "
                << (violations.size() == before ? "ok" : "VIOLATION") << "\n";
  }
  return violations;
}

}  // namespace hls
