#include "hls/eigen.hpp"

#include <algorithm>
#include <map>

#include "hls/error.hpp"

namespace hls {

std::vector<Rat> char_poly(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("char_poly of non-square matrix");
  int n = m.rows();
  // Faddeev–LeVerrier: M_1 = A, c_k = -tr(A M_{k-1} ...)/k; all divisions are
  // exact over Q.
  std::vector<Rat> coeffs(n + 1);
  coeffs[n] = 1;
  Matrix mk = Matrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk;
    Rat ck = -mk.trace() / k;
    coeffs[n - k] = ck;
    for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
  }
  return coeffs;
}

namespace {

mpz_class abs_z(const mpz_class& x) { return x < 0 ? mpz_class(-x) : x; }

mpz_class gcd_z(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Deterministic Brent-cycle Pollard rho; n must be odd composite > 1 and not
// a prime power handled by the caller loop.
mpz_class pollard_brent(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (mpz_class c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    auto f = [&](const mpz_class& v) { return (v * v + c) % n; };
    mpz_class saved_y = y;
    long power = 1, lam = 0;
    x = 2;
    y = f(x);
    while (d == 1) {
      if (power == lam) {
        x = y;
        power *= 2;
        lam = 0;
      }
      y = f(y);
      ++lam;
      mpz_class diff = abs_z(x - y);
      if (diff == 0) break;  // cycle without factor: retry with next c
      d = gcd_z(diff, n);
      (void)saved_y;
    }
    if (d != 1 && d != n) return d;
  }
}

void factorize_into(mpz_class n, std::map<mpz_class, int>& out) {
  if (n <= 1) return;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  for (mpz_class p = 41; p * p <= n && p < 100000; p += 2) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    ++out[n];
    return;
  }
  mpz_class d = pollard_brent(n);
  factorize_into(d, out);
  factorize_into(n / d, out);
}

// All positive divisors of |n|, unsorted. Guarded against pathological
// divisor counts; the guard tripping would be an internal capacity bug, not
// bad input, at the scales this library targets.
std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::map<mpz_class, int> factors;
  factorize_into(abs_z(n), factors);
  std::vector<mpz_class> divisors{1};
  for (const auto& [p, e] : factors) {
    size_t base = divisors.size();
    if (base * (e + 1) > 2000000)
      internal_failure("divisor enumeration overflow in eigenvalue search");
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  return divisors;
}

}  // namespace

std::vector<Rat> rational_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("rational_eigenvalues of non-square matrix");
  int n = m.rows();
  if (n == 0) return {};
  // Scale to an integer matrix: eigenvalues scale by the same factor, and a
  // monic integer characteristic polynomial has only integer rational roots.
  mpz_class scale = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpz_class den = m.at(i, j).get_den();
      scale = scale / gcd_z(scale, den) * den;
    }
  Matrix s = m.scaled(Rat(scale));
  std::vector<Rat> cp = char_poly(s);
  std::vector<mpz_class> coeffs(n + 1);
  for (int k = 0; k <= n; ++k) {
    internal_check(cp[k].get_den() == 1,
                   "char poly of integer matrix has non-integer coefficient");
    coeffs[k] = cp[k].get_num();
  }
  // Strip the power of lambda; collect the trailing coefficient.
  int low = 0;
  while (low <= n && coeffs[low] == 0) ++low;
  std::vector<Rat> roots;
  if (low > 0) roots.push_back(Rat(0));
  if (low <= n && low < n) {
    mpz_class trailing = coeffs[low];
    auto eval_at = [&](const mpz_class& x) {
      mpz_class acc = 0;
      for (int k = n; k >= low; --k) acc = acc * x + coeffs[k];
      return acc;
    };
    for (const mpz_class& d : positive_divisors(trailing)) {
      if (eval_at(d) == 0) roots.push_back(Rat(d));
      if (eval_at(-d) == 0) roots.push_back(Rat(mpz_class(-d)));
    }
  }
  for (Rat& r : roots) {
    r /= Rat(scale);
    r.canonicalize();
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::optional<Matrix> restrict_operator(const Matrix& op, const Subspace& s) {
  int r = s.dim();
  Matrix out(r, r);
  for (int i = 0; i < r; ++i) {
    Vec image_vec = op.apply(s.basis_row(i));
    auto coords = coordinates_in(s.basis(), image_vec);
    if (!coords) return std::nullopt;
    for (int j = 0; j < r; ++j) out.at(j, i) = (*coords)[j];
  }
  return out;
}

EigenRefinement simultaneous_eigenspaces(const std::vector<Matrix>& ops,
                                         const Subspace& start) {
  EigenRefinement result;
  std::vector<EigenBlock> current;
  current.push_back({Vec{}, start});
  for (const Matrix& op : ops) {
    std::vector<EigenBlock> next;
    for (EigenBlock& block : current) {
      if (block.space.is_zero()) continue;
      auto restricted = restrict_operator(op, block.space);
      if (!restricted) {
        result.unsplit.push_back(block.space);
        continue;
      }
      std::vector<EigenBlock> pieces;
      int covered = 0;
      for (const Rat& lambda : rational_eigenvalues(*restricted)) {
        Matrix shifted = *restricted;
        for (int i = 0; i < shifted.rows(); ++i) shifted.at(i, i) -= lambda;
        Matrix coords = kernel_basis(shifted);
        std::vector<Vec> rows;
        for (int i = 0; i < coords.rows(); ++i)
          rows.push_back(block.space.basis().apply_left(coords.row(i)));
        Subspace eig = Subspace::span(start.ambient(), rows);
        covered += eig.dim();
        Vec evs = block.eigenvalues;
        evs.push_back(lambda);
        pieces.push_back({std::move(evs), std::move(eig)});
      }
      if (covered == block.space.dim()) {
        for (EigenBlock& p : pieces) next.push_back(std::move(p));
      } else {
        // Rational eigenspaces do not exhaust the block: the spectrum has an
        // irrational/complex part. Hand the whole block back untouched.
        result.unsplit.push_back(block.space);
      }
    }
    current = std::move(next);
  }
  for (EigenBlock& b : current)
    if (!b.space.is_zero()) result.blocks.push_back(std::move(b));
  return result;
}

}  // namespace hls
