#ifndef A4CB_CONES_HPP
#define A4CB_CONES_HPP

#include "a4cb/chambers.hpp"

namespace a4cb {

// The positive root alpha_p + ... + alpha_{q-1}, 1 <= p < q <= n+1.
struct RootSpan {
  int p = 0, q = 0;
  bool operator==(const RootSpan& o) const { return p == o.p && q == o.q; }
  bool operator<(const RootSpan& o) const { return p < o.p || (p == o.p && q < o.q); }
};

std::string root_str(const RootSpan& r);  // "a1+a2+a3"

// alpha^j = s_{i_1}...s_{i_{j-1}}(alpha_{i_j}); enumerates Phi+ exactly once.
std::vector<RootSpan> root_order(const Word& w, int n);

// Integer inequality system P a >= 0 cutting out the Lusztig cone of w,
// with its exact inverse Q (entries in N).  Row r < k-n corresponds to
// chambers[r]; the last n rows are the simple-root rows in Dynkin order.
struct ConeSpec {
  Word word;
  int n = 0;
  std::vector<Chamber> chambers;
  std::vector<RootSpan> roots;
  IntMat P, Q;
  std::vector<int> simple_pos;  // position (0-based) carrying alpha_j, j=1..n
};

IntMat build_P(const Word& w, int n);

// Exact inverse of a unimodular integer matrix; throws otherwise.
IntMat invert_exact(const IntMat& m);

ConeSpec build_cone(const Word& w, int n);

// Multiplicity vectors of the spanning vectors, indexed by the word's roots.
IntVec spanning_vector(const ConeSpec& cone, const PartialQuiver& p);
IntVec spanning_vector(const ConeSpec& cone, int j);

bool cone_contains(const ConeSpec& cone, const IntVec& a);

IntVec mat_vec(const IntMat& m, const IntVec& v);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat identity_mat(int k);

}  // namespace a4cb

#endif
