#include "hls/rootspace.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hls/eigen.hpp"
#include "hls/error.hpp"

namespace hls {

int RootDecomposition::find_root(const Vec& coords) const {
  int lo = 0, hi = root_count();
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    int c = vec_cmp(spaces[mid].root, coords);
    if (c == 0) return mid;
    if (c < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return -1;
}

Vec RootDecomposition::root_after_inverse_twists(const Vec& coords,
                                                 int e) const {
  Vec out = coords;
  for (int k = 0; k < e; ++k) out = root_action.apply(out);
  return out;
}

namespace {

std::string dim_str(const Subspace& s) {
  std::ostringstream os;
  os << "dim " << s.dim();
  return os.str();
}

SplitAnalysis fail(SplitAnalysis::Status status, std::string detail) {
  return {status, std::move(detail), std::nullopt};
}

// Shared tail of both modes: turn joint eigen blocks (given in ambient
// coordinates, zero tuple excluded) into the sorted root list with the
// twist-orbit permutation.
SplitAnalysis assemble(const Superalgebra& alg, const GradedSubspace& h,
                       Matrix h_basis, Matrix phi_h, Matrix phi_h_inv,
                       std::vector<RootSpace> spaces, bool non_regular) {
  std::sort(spaces.begin(), spaces.end(), [](const RootSpace& a, const RootSpace& b) {
    return vec_cmp(a.root, b.root) < 0;
  });
  RootDecomposition dec;
  dec.H = h;
  dec.h_basis = std::move(h_basis);
  dec.phi_H = std::move(phi_h);
  dec.phi_H_inv = std::move(phi_h_inv);
  dec.root_action = dec.phi_H_inv.transpose();
  dec.spaces = std::move(spaces);
  dec.non_regular = non_regular;

  Subspace vhat = Subspace::zero(alg.dim());
  for (const RootSpace& rs : dec.spaces) vhat = sum(vhat, rs.space.total);
  dec.vhat = std::move(vhat);
  internal_check(dec.vhat.dim() + h.total.dim() == alg.dim(),
                 "root spaces plus H do not fill the algebra");

  dec.phi_perm.resize(dec.spaces.size());
  for (int i = 0; i < dec.root_count(); ++i) {
    Vec moved = dec.root_action.apply(dec.spaces[i].root);
    int j = dec.find_root(moved);
    internal_check(j >= 0,
                   "twist does not permute the root set (transport law)");
    dec.phi_perm[i] = j;
  }
  SplitAnalysis out;
  out.status = SplitAnalysis::Status::split;
  out.dec = std::move(dec);
  return out;
}

std::optional<RootSpace> to_root_space(const Superalgebra& alg,
                                       const Vec& root, const Subspace& s) {
  auto graded = grade(s, alg.parities());
  if (!graded) return std::nullopt;
  return RootSpace{root, *graded};
}

SplitAnalysis analyze_regular(const Superalgebra& alg,
                              const GradedSubspace& h) {
  int n = alg.dim();
  Matrix h_basis = h.even.basis();
  int m = h_basis.rows();

  auto phi_h_opt = restrict_operator(alg.twist(), h.even);
  if (!phi_h_opt)
    return fail(SplitAnalysis::Status::not_split,
                "twist does not stabilize the even part of H");
  auto phi_h_inv_opt = inverse(*phi_h_opt);
  if (!phi_h_inv_opt)
    return fail(SplitAnalysis::Status::not_split,
                "twist is singular on the even part of H");

  const Matrix& phi_inv_global = *alg.twist_inverse();
  std::vector<Matrix> ops;
  ops.reserve(m);
  for (int i = 0; i < m; ++i)
    ops.push_back(phi_inv_global * alg.ad(h_basis.row(i)));

  EigenRefinement ref = simultaneous_eigenspaces(ops, Subspace::full(n));
  if (!ref.unsplit.empty())
    return fail(SplitAnalysis::Status::non_rational_spectrum,
                "the twisted adjoint action has a non-rational joint "
                "spectrum on a block of " + dim_str(ref.unsplit.front()));

  std::vector<RootSpace> spaces;
  for (EigenBlock& b : ref.blocks) {
    if (is_zero(b.eigenvalues)) {
      if (!(b.space == h.total))
        return fail(SplitAnalysis::Status::not_split,
                    "the zero-root space (" + dim_str(b.space) +
                        ") strictly exceeds H (" + dim_str(h.total) + ")");
      continue;
    }
    auto rs = to_root_space(alg, b.eigenvalues, b.space);
    internal_check(rs.has_value(), "root space fails to be graded");
    spaces.push_back(std::move(*rs));
  }
  // m == 0 edge: the refinement is the single empty-tuple block, which counts
  // as the zero root and was compared against H in the loop above.
  return assemble(alg, h, std::move(h_basis), std::move(*phi_h_opt),
                  std::move(*phi_h_inv_opt), std::move(spaces), false);
}

SplitAnalysis analyze_non_regular(const Superalgebra& alg,
                                  const GradedSubspace& h) {
  int n = alg.dim();
  Matrix h_basis = h.even.basis();
  int m = h_basis.rows();

  auto phi_h_opt = restrict_operator(alg.twist(), h.even);
  if (!phi_h_opt)
    return fail(SplitAnalysis::Status::not_split,
                "twist does not stabilize the even part of H");
  auto phi_h_inv_opt = inverse(*phi_h_opt);
  if (!phi_h_inv_opt)
    return fail(SplitAnalysis::Status::not_split,
                "twist is singular on the even part of H");

  std::vector<Matrix> ads;
  ads.reserve(m);
  for (int i = 0; i < m; ++i) ads.push_back(alg.ad(h_basis.row(i)));

  // The zero-root space is the joint ad-kernel; in a split algebra it is H.
  Subspace joint_kernel = Subspace::full(n);
  for (const Matrix& a : ads)
    joint_kernel = intersect(joint_kernel, Subspace::span(n, kernel_basis(a)));
  if (!(joint_kernel == h.total))
    return fail(SplitAnalysis::Status::not_split,
                "the joint kernel of ad(H) (" + dim_str(joint_kernel) +
                    ") differs from H (" + dim_str(h.total) + ")");

  // Candidate complement: everything the adjoint action produces, closed
  // under ad(H) and the twist. On a split algebra this is ⊕ L_α.
  Subspace vhat = Subspace::zero(n);
  for (const Matrix& a : ads)
    vhat = sum(vhat, Subspace::full(n).image(a));
  for (;;) {
    Subspace grown = sum(vhat, vhat.image(alg.twist()));
    for (const Matrix& a : ads) grown = sum(grown, vhat.image(a));
    if (grown.dim() == vhat.dim()) break;
    vhat = grown;
  }
  if (!intersect(vhat, h.total).is_zero() ||
      vhat.dim() + h.total.dim() != n)
    return fail(SplitAnalysis::Status::not_split,
                "the adjoint image closure (" + dim_str(vhat) +
                    ") does not complement H");
  if (!intersect(vhat, Subspace::span(n, kernel_basis(alg.twist()))).is_zero())
    return fail(SplitAnalysis::Status::not_split,
                "the twist is singular on the root-space complement");

  auto twist_on_v = restrict_operator(alg.twist(), vhat);
  internal_check(twist_on_v.has_value(), "complement lost twist stability");
  auto twist_on_v_inv = inverse(*twist_on_v);
  internal_check(twist_on_v_inv.has_value(),
                 "injective twist restriction is singular");

  std::vector<Matrix> ops;
  for (const Matrix& a : ads) {
    auto ad_on_v = restrict_operator(a, vhat);
    internal_check(ad_on_v.has_value(), "complement lost ad stability");
    ops.push_back((*twist_on_v_inv) * (*ad_on_v));
  }
  int vd = vhat.dim();
  EigenRefinement ref = simultaneous_eigenspaces(ops, Subspace::full(vd));
  if (!ref.unsplit.empty())
    return fail(SplitAnalysis::Status::non_rational_spectrum,
                "the twisted adjoint action has a non-rational joint "
                "spectrum on the complement of H");

  std::vector<RootSpace> spaces;
  for (EigenBlock& b : ref.blocks) {
    if (is_zero(b.eigenvalues))
      return fail(SplitAnalysis::Status::not_split,
                  "a zero joint eigenvalue survives inside the complement");
    // Back to ambient coordinates.
    std::vector<Vec> rows;
    for (int i = 0; i < b.space.dim(); ++i)
      rows.push_back(vhat.basis().apply_left(b.space.basis_row(i)));
    auto rs = to_root_space(alg, b.eigenvalues, Subspace::span(n, rows));
    internal_check(rs.has_value(), "root space fails to be graded");
    spaces.push_back(std::move(*rs));
  }
  return assemble(alg, h, std::move(h_basis), std::move(*phi_h_opt),
                  std::move(*phi_h_inv_opt), std::move(spaces), true);
}

}  // namespace

SplitAnalysis analyze_roots(const Superalgebra& alg, const GradedSubspace& h) {
  if (alg.regular()) {
    if (!alg.twist_inverse())
      return fail(SplitAnalysis::Status::not_split,
                  "regular algebra with singular twist");
    return analyze_regular(alg, h);
  }
  return analyze_non_regular(alg, h);
}

RootDecomposition root_decomposition(const Superalgebra& alg,
                                     const GradedSubspace& h) {
  SplitAnalysis a = analyze_roots(alg, h);
  if (a.status == SplitAnalysis::Status::split) return std::move(*a.dec);
  std::string tag = a.status == SplitAnalysis::Status::non_rational_spectrum
                        ? "NON_RATIONAL_SPECTRUM: "
                        : "NOT_SPLIT: ";
  throw error(errc::not_split, tag + a.detail);
}

MagsaReport verify_magsa(const Superalgebra& alg, const GradedSubspace& h) {
  MagsaReport report;
  int n = alg.dim();

  report.graded_ok = h.even.dim() + h.odd.dim() == h.total.dim() &&
                     sum(h.even, h.odd) == h.total &&
                     alg.parity_axes(Parity::even).contains(h.even) &&
                     alg.parity_axes(Parity::odd).contains(h.odd);
  if (!report.graded_ok) {
    report.notes.push_back("H is not a graded subspace");
    return report;
  }

  report.abelian = true;
  std::vector<Vec> h_rows;
  for (int i = 0; i < h.even.dim(); ++i) h_rows.push_back(h.even.basis_row(i));
  for (int i = 0; i < h.odd.dim(); ++i) h_rows.push_back(h.odd.basis_row(i));
  for (const Vec& u : h_rows)
    for (const Vec& v : h_rows)
      if (!is_zero(alg.bracket(u, v))) {
        report.abelian = false;
        break;
      }

  Subspace twisted = h.total.image(alg.twist());
  report.twist_stable =
      alg.regular() ? (twisted == h.total) : h.total.contains(twisted);

  if (alg.regular()) {
    report.twist_invertible_ok = alg.twist_inverse().has_value();
  } else {
    auto phi_h = restrict_operator(alg.twist(), h.even);
    report.twist_invertible_ok = phi_h && inverse(*phi_h).has_value();
    if (report.twist_invertible_ok) {
      auto phi_odd = restrict_operator(alg.twist(), h.odd);
      if (!phi_odd || !inverse(*phi_odd))
        report.notes.push_back(
            "twist is not a bijection on the odd part of H; only the even "
            "part is inverted by the decomposition");
    }
  }

  if (!report.ok()) return report;

  SplitAnalysis analysis = analyze_roots(alg, h);
  if (analysis.status == SplitAnalysis::Status::split) {
    report.maximality = MagsaReport::Maximality::confirmed;
    return report;
  }
  report.notes.push_back(analysis.detail);

  // Refutation search: a homogeneous vector outside H that commutes with H,
  // self-commutes, and stays twist-compatible extends H strictly.
  Subspace centralizer = Subspace::full(n);
  for (const Vec& u : h_rows)
    centralizer =
        intersect(centralizer, Subspace::span(n, kernel_basis(alg.ad(u))));
  for (Parity p : {Parity::even, Parity::odd}) {
    Subspace part = intersect(centralizer, alg.parity_axes(p));
    for (int i = 0; i < part.dim(); ++i) {
      Vec v = part.basis_row(i);
      if (h.total.contains(v)) continue;
      if (p == Parity::odd && !is_zero(alg.bracket(v, v))) continue;
      Subspace extended = sum(h.total, Subspace::span(n, std::vector<Vec>{v}));
      Subspace extended_image = extended.image(alg.twist());
      bool stable = alg.regular() ? (extended_image == extended)
                                  : extended.contains(extended_image);
      if (!stable) continue;
      report.maximality = MagsaReport::Maximality::refuted;
      report.refutation_witness = v;
      return report;
    }
  }
  report.maximality = MagsaReport::Maximality::unknown;
  report.notes.push_back(
      "no single-vector extension of H found; maximality undecided");
  return report;
}

TransportReport check_transport(const Superalgebra& alg,
                                const RootDecomposition& dec) {
  TransportReport report;
  auto complain = [&](const std::string& what) {
    report.ok = false;
    report.failures.push_back(what);
  };
  auto root_name = [&](int i) {
    std::ostringstream os;
    os << "root#" << i << " (";
    for (size_t k = 0; k < dec.spaces[i].root.size(); ++k) {
      if (k) os << ",";
      os << rat_str(dec.spaces[i].root[k]);
    }
    os << ")";
    return os.str();
  };

  int n = alg.dim();
  for (int a = 0; a < dec.root_count(); ++a) {
    const Subspace& va = dec.spaces[a].space.total;
    const Subspace& target = dec.spaces[dec.phi_perm[a]].space.total;
    if (!(va.image(alg.twist()) == target))
      complain("twist(" + root_name(a) + ") is not the root space of its "
               "twisted root");
    // [H, L_a] ⊆ L_{a∘twist⁻¹}
    for (int i = 0; i < dec.H.total.dim(); ++i)
      for (int r = 0; r < va.dim(); ++r)
        if (!target.contains(
                alg.bracket(dec.H.total.basis_row(i), va.basis_row(r))))
          complain("[H, " + root_name(a) + "] leaves the twisted root space");
  }

  for (int a = 0; a < dec.root_count(); ++a)
    for (int b = 0; b < dec.root_count(); ++b) {
      Vec target_root = vec_add(dec.root_action.apply(dec.spaces[a].root),
                                dec.root_action.apply(dec.spaces[b].root));
      const Subspace* target = nullptr;
      Subspace h_space = dec.H.total;
      Subspace zero = Subspace::zero(n);
      if (is_zero(target_root)) {
        target = &h_space;
      } else {
        int t = dec.find_root(target_root);
        target = t >= 0 ? &dec.spaces[t].space.total : &zero;
      }
      const Subspace& va = dec.spaces[a].space.total;
      const Subspace& vb = dec.spaces[b].space.total;
      for (int r = 0; r < va.dim(); ++r)
        for (int s = 0; s < vb.dim(); ++s)
          if (!target->contains(alg.bracket(va.basis_row(r), vb.basis_row(s)))) {
            complain("[" + root_name(a) + ", " + root_name(b) +
                     "] misses its transport target");
            r = va.dim();  // one failure per pair is enough
            break;
          }
    }
  return report;
}

}  // namespace hls
