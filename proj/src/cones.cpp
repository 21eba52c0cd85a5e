#include "a4cb/cones.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace a4cb {

std::string root_str(const RootSpan& r) {
  std::string out;
  for (int m = r.p; m < r.q; ++m) {
    if (!out.empty()) out += '+';
    out += 'a';
    out += std::to_string(m);
  }
  return out;
}

std::vector<RootSpan> root_order(const Word& w, int n) {
  // img[i] = image of i+1 under s_{i_1}...s_{i_{j-1}}, built by appending
  // each letter on the right (swap of values i_j, i_j+1 in position space).
  std::vector<int> img(n + 1);
  for (int i = 0; i <= n; ++i) img[i] = i + 1;
  std::vector<RootSpan> out;
  std::vector<char> seen((n + 1) * (n + 2), 0);
  for (int letter : w) {
    A4CB_CHECK(letter >= 1 && letter <= n, "letter out of range");
    int p = img[letter - 1], q = img[letter];
    if (p > q) std::swap(p, q);
    RootSpan r{p, q};
    A4CB_CHECK(!seen[p * (n + 2) + q], "root repeated; word not reduced");
    seen[p * (n + 2) + q] = 1;
    out.push_back(r);
    std::swap(img[letter - 1], img[letter]);
  }
  return out;
}

IntMat build_P(const Word& w, int n) {
  int k = (int)w.size();
  auto chambers = chamber_sets(w, n);  // ordered by first occurrence
  IntMat P;
  for (auto& c : chambers) {
    IntVec row(k, 0);
    row[c.s - 1] = -1;
    row[c.s2 - 1] = -1;
    for (int p = c.s + 1; p < c.s2; ++p)
      if (std::abs(w[p - 1] - c.letter) == 1) row[p - 1] = 1;
    P.push_back(std::move(row));
  }
  auto roots = root_order(w, n);
  for (int j = 1; j <= n; ++j) {
    IntVec row(k, 0);
    int pos = -1;
    for (int t = 0; t < k; ++t)
      if (roots[t].p == j && roots[t].q == j + 1) pos = t;
    A4CB_CHECK(pos >= 0, "simple root missing from root order");
    row[pos] = 1;
    P.push_back(std::move(row));
  }
  return P;
}

IntMat invert_exact(const IntMat& m) {
  using Rat = boost::multiprecision::cpp_rational;
  using BigInt = boost::multiprecision::cpp_int;
  int k = (int)m.size();
  std::vector<std::vector<Rat>> a(k, std::vector<Rat>(2 * k, 0));
  for (int i = 0; i < k; ++i) {
    A4CB_CHECK((int)m[i].size() == k, "matrix not square");
    for (int j = 0; j < k; ++j) a[i][j] = m[i][j];
    a[i][k + i] = 1;
  }
  Rat det = 1;
  for (int col = 0; col < k; ++col) {
    int piv = -1;
    for (int i = col; i < k; ++i)
      if (a[i][col] != 0) {
        piv = i;
        break;
      }
    A4CB_CHECK(piv >= 0, "singular matrix");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rat d = a[col][col];
    for (auto& x : a[col]) x /= d;
    for (int i = 0; i < k; ++i) {
      if (i == col) continue;
      Rat f = a[i][col];
      if (f == 0) continue;
      for (int j = 0; j < 2 * k; ++j) a[i][j] -= f * a[col][j];
    }
  }
  A4CB_CHECK(det == 1 || det == -1, "matrix is not unimodular");
  IntMat inv(k, IntVec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Rat x = a[i][k + j];
      A4CB_CHECK(denominator(x) == 1, "non-integer inverse entry");
      inv[i][j] = (long long)(BigInt)numerator(x);
    }
  return inv;
}

ConeSpec build_cone(const Word& w, int n) {
  ConeSpec cone;
  cone.word = w;
  cone.n = n;
  cone.chambers = chamber_sets(w, n);
  cone.roots = root_order(w, n);
  cone.P = build_P(w, n);
  cone.Q = invert_exact(cone.P);
  for (auto& row : cone.Q)
    for (long long x : row) A4CB_CHECK(x >= 0, "negative entry in Q");
  cone.simple_pos.assign(n, -1);
  int k = (int)w.size();
  for (int t = 0; t < k; ++t)
    if (cone.roots[t].q == cone.roots[t].p + 1)
      cone.simple_pos[cone.roots[t].p - 1] = t;
  return cone;
}

IntVec spanning_vector(const ConeSpec& cone, const PartialQuiver& quiver) {
  int n = cone.n;
  A4CB_CHECK(quiver.n == n, "rank mismatch");
  auto comps = components(quiver);
  int k = (int)cone.word.size();
  IntVec out(k, 0);
  for (int t = 0; t < k; ++t) {
    int m = 0;  // number of components Y with alpha^t in Phi+(Y)
    for (auto& y : comps)
      if (cone.roots[t].p <= y.a() && y.b() <= cone.roots[t].q) ++m;
    out[t] = (m + 1) / 2;
  }
  return out;
}

IntVec spanning_vector(const ConeSpec& cone, int j) {
  A4CB_CHECK(j >= 1 && j <= cone.n, "spanning label out of range");
  int k = (int)cone.word.size();
  IntVec out(k, 0);
  for (int t = 0; t < k; ++t)
    out[t] = (cone.roots[t].p <= j && j + 1 <= cone.roots[t].q) ? 1 : 0;
  return out;
}

bool cone_contains(const ConeSpec& cone, const IntVec& a) {
  A4CB_CHECK(a.size() == cone.word.size(), "dimension mismatch");
  for (auto& row : cone.P) {
    long long s = 0;
    for (size_t t = 0; t < a.size(); ++t) s += row[t] * a[t];
    if (s < 0) return false;
  }
  return true;
}

IntVec mat_vec(const IntMat& m, const IntVec& v) {
  IntVec out(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i) {
    A4CB_CHECK(m[i].size() == v.size(), "dimension mismatch");
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  size_t n = a.size(), m = b[0].size(), inner = b.size();
  IntMat out(n, IntVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < inner; ++t) {
      if (!a[i][t]) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

IntMat identity_mat(int k) {
  IntMat m(k, IntVec(k, 0));
  for (int i = 0; i < k; ++i) m[i][i] = 1;
  return m;
}

}  // namespace a4cb
