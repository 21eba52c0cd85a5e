#include "a4cb/lp.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace a4cb {
namespace {

using BigInt = boost::multiprecision::cpp_int;

// Dense tableau simplex, exact rational arithmetic, Bland's rule.
// Only the phase-1 problem is ever solved here: feasibility of
// A x <= b, x >= 0, via a single artificial column.
struct Tableau {
  int m, n;  // constraint rows, structural columns (incl. artificial + slacks)
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> rhs;
  std::vector<Rat> obj;  // reduced costs of a maximization objective
  Rat objval = 0;
  std::vector<int> basis;

  void pivot(int r, int c) {
    Rat piv = a[r][c];
    for (auto& x : a[r]) x /= piv;
    rhs[r] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == r) continue;
      Rat f = a[i][c];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    Rat f = obj[c];
    if (f != 0) {
      for (int j = 0; j < n; ++j) obj[j] -= f * a[r][j];
      objval += f * rhs[r];
    }
    basis[r] = c;
  }

  // Primal simplex from a basic feasible tableau (all rhs >= 0).
  void maximize() {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (obj[j] > 0) {
          enter = j;
          break;
        }
      if (enter < 0) return;
      int leave = -1;
      Rat best;
      for (int i = 0; i < m; ++i) {
        if (a[i][enter] <= 0) continue;
        Rat ratio = rhs[i] / a[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      A4CB_CHECK(leave >= 0, "unbounded phase-1 objective");
      pivot(leave, enter);
    }
  }
};

// Feasibility of A x <= b over x >= 0.  Returns the feasible point found.
bool phase1(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
            std::vector<Rat>* point) {
  int m = (int)A.size();
  int nv = m ? (int)A[0].size() : 0;
  Tableau t;
  t.m = m;
  t.n = nv + 1 + m;  // structural, artificial, slacks
  t.a.assign(m, std::vector<Rat>(t.n, 0));
  t.rhs = b;
  t.obj.assign(t.n, 0);
  t.basis.resize(m);
  int worst = -1;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < nv; ++j) t.a[i][j] = A[i][j];
    t.a[i][nv] = -1;
    t.a[i][nv + 1 + i] = 1;
    t.basis[i] = nv + 1 + i;
    if (t.rhs[i] < 0 && (worst < 0 || t.rhs[i] < t.rhs[worst])) worst = i;
  }
  if (worst >= 0) {
    // minimize the artificial variable: maximize its negation
    t.obj[nv] = -1;
    t.pivot(worst, nv);
    t.maximize();
    if (t.objval != 0) return false;
  }
  if (point) {
    point->assign(nv, 0);
    for (int i = 0; i < m; ++i)
      if (t.basis[i] < nv) (*point)[t.basis[i]] = t.rhs[i];
  }
  return true;
}

// forms . v >= rhs with v free, as A x <= b over x = (p, q) >= 0, v = p - q.
bool exists_ge_impl(const std::vector<LinForm>& forms,
                    const std::vector<long long>& rhs, std::vector<Rat>* v) {
  size_t k = 0;
  for (auto& f : forms) k = std::max(k, f.size());
  std::vector<std::vector<Rat>> A(forms.size(), std::vector<Rat>(2 * k, 0));
  std::vector<Rat> b(forms.size());
  for (size_t i = 0; i < forms.size(); ++i) {
    for (size_t j = 0; j < forms[i].size(); ++j) {
      A[i][j] = -forms[i][j];
      A[i][k + j] = forms[i][j];
    }
    b[i] = -rhs[i];
  }
  std::vector<Rat> x;
  if (!phase1(A, b, v ? &x : nullptr)) return false;
  if (v) {
    v->assign(k, 0);
    for (size_t j = 0; j < k; ++j) (*v)[j] = x[j] - x[k + j];
  }
  return true;
}

}  // namespace

bool exists_ge(const std::vector<LinForm>& forms,
               const std::vector<long long>& rhs) {
  return exists_ge_impl(forms, rhs, nullptr);
}

bool cone_has_interior(const std::vector<LinForm>& forms) {
  std::vector<LinForm> nz;
  for (auto& f : forms)
    if (!is_zero(f)) nz.push_back(f);
  if (nz.empty()) return true;
  return exists_ge(nz, std::vector<long long>(nz.size(), 1));
}

bool valid_on_cone(const LinForm& g, const std::vector<LinForm>& cone) {
  std::vector<LinForm> sys;
  std::vector<long long> rhs;
  for (auto& f : cone) {
    if (is_zero(f)) continue;
    sys.push_back(f);
    rhs.push_back(0);
  }
  sys.push_back(neg(g));
  rhs.push_back(1);
  return !exists_ge(sys, rhs);
}

bool redundant_in_cone(const std::vector<LinForm>& cone, size_t idx) {
  std::vector<LinForm> others;
  for (size_t i = 0; i < cone.size(); ++i)
    if (i != idx) others.push_back(cone[i]);
  return valid_on_cone(cone[idx], others);
}

std::optional<IntVec> interior_point(const std::vector<LinForm>& forms) {
  std::vector<LinForm> nz;
  for (auto& f : forms)
    if (!is_zero(f)) nz.push_back(f);
  std::vector<Rat> v;
  size_t k = 0;
  for (auto& f : forms) k = std::max(k, f.size());
  if (nz.empty()) return IntVec(k, 0);
  if (!exists_ge_impl(nz, std::vector<long long>(nz.size(), 1), &v)) return std::nullopt;
  BigInt scale = 1;
  for (auto& x : v) scale = boost::multiprecision::lcm(scale, denominator(x));
  IntVec out(v.size());
  for (size_t j = 0; j < v.size(); ++j) {
    BigInt val = numerator(v[j]) * (scale / denominator(v[j]));
    out[j] = (long long)val;
  }
  return out;
}

}  // namespace a4cb
