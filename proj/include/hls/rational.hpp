#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hls {

// Exact rational scalar. mpq_class keeps values canonical (gcd(p,q)=1, q>0)
// through arithmetic; the helpers below guarantee canonical construction and
// the "p/q" / "p" wire format used by documents and reports.
using Rat = mpq_class;
using Vec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p", "p/q" (optional sign on p; q > 0 after canonicalization).
// Throws std::invalid_argument on anything else, including "1/0".
Rat rat_parse(const std::string& text);

// Canonical serialization: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& value);

bool is_zero(const Vec& v);
Vec vec_zero(int n);
Vec vec_unit(int n, int i);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& a);
// Adds c*b into a in place.
void vec_axpy(Vec& a, const Rat& c, const Vec& b);

// Total order on vectors (entrywise rational comparison, lexicographic).
// Used for canonical orderings of root functionals and map keys.
int vec_cmp(const Vec& a, const Vec& b);

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return vec_cmp(a, b) < 0; }
};

}  // namespace hls
