#include "hls/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hls {

Rat rat_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto digits_with_sign = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!digits_with_sign(num, true) || !digits_with_sign(den, false))
    throw std::invalid_argument("bad rational literal: \"" + text + "\"");
  mpz_class den_z(den);
  if (den_z == 0)
    throw std::invalid_argument("zero denominator in \"" + text + "\"");
  Rat r{mpz_class(num), den_z};
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& value) { return value.get_str(); }

bool is_zero(const Vec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

Vec vec_zero(int n) { return Vec(n); }

Vec vec_unit(int n, int i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

void vec_axpy(Vec& a, const Rat& c, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += c * b[i];
}

int vec_cmp(const Vec& a, const Vec& b) {
  size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

}  // namespace hls
