#ifndef A4CB_LINFORM_HPP
#define A4CB_LINFORM_HPP

#include <numeric>

#include "a4cb/common.hpp"

namespace a4cb {

// An integer linear form on Z^k, f(v) = sum f[m] v[m].
using LinForm = IntVec;

inline bool is_zero(const LinForm& f) {
  for (long long x : f)
    if (x) return false;
  return true;
}

inline LinForm add(const LinForm& f, const LinForm& g) {
  LinForm h(f);
  for (size_t m = 0; m < g.size(); ++m) h[m] += g[m];
  return h;
}

inline LinForm sub(const LinForm& f, const LinForm& g) {
  LinForm h(f);
  for (size_t m = 0; m < g.size(); ++m) h[m] -= g[m];
  return h;
}

inline LinForm neg(const LinForm& f) {
  LinForm h(f);
  for (auto& x : h) x = -x;
  return h;
}

inline long long dot(const LinForm& f, const IntVec& v) {
  long long s = 0;
  for (size_t m = 0; m < f.size(); ++m) s += f[m] * v[m];
  return s;
}

// Divide by the gcd of the entries; orientation is preserved.
inline LinForm primitive(LinForm f) {
  long long g = 0;
  for (long long x : f) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : f) x /= g;
  return f;
}

// Canonical representative of the hyperplane f = 0: primitive with the
// first nonzero entry positive.
inline LinForm hyperplane(LinForm f) {
  f = primitive(std::move(f));
  for (long long x : f) {
    if (x > 0) break;
    if (x < 0) return neg(f);
  }
  return f;
}

}  // namespace a4cb

#endif
