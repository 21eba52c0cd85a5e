#include "a4cb/chambers.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace a4cb {

std::string chamber_set_str(ChamberSet s) {
  std::string out;
  for (int b = 0; b < 16; ++b)
    if (s & (1u << b)) out += (char)('1' + b);
  return out;
}

ChamberSet parse_chamber_set(const std::string& str) {
  ChamberSet s = 0;
  for (char ch : str) {
    A4CB_CHECK(ch >= '1' && ch <= '9', "bad chamber set digit");
    s |= 1u << (ch - '1');
  }
  return s;
}

std::vector<Chamber> chamber_sets(const Word& w, int n) {
  A4CB_CHECK(is_w0_word(w, n), "not a reduced w0 word");
  int k = (int)w.size();
  // rows[r] = string currently in row r+1
  std::vector<int> rows(n + 1);
  for (int r = 0; r <= n; ++r) rows[r] = r + 1;
  // last[i] = most recent occurrence of letter i (1-based position)
  std::vector<int> last(n + 1, 0);
  std::vector<Chamber> out;
  for (int t = 1; t <= k; ++t) {
    int i = w[t - 1];
    if (last[i]) {
      Chamber c;
      c.s = last[i];
      c.s2 = t;
      c.letter = i;
      out.push_back(c);
    }
    last[i] = t;
  }
  std::sort(out.begin(), out.end(),
            [](const Chamber& a, const Chamber& b) { return a.s < b.s; });
  // second pass: replay crossings, fill each chamber set at time s
  for (int r = 0; r <= n; ++r) rows[r] = r + 1;
  size_t next = 0;
  for (int t = 1; t <= k && next < out.size(); ++t) {
    std::swap(rows[w[t - 1] - 1], rows[w[t - 1]]);
    while (next < out.size() && out[next].s == t) {
      ChamberSet s = 0;
      for (int r = out[next].letter; r <= n; ++r) s |= 1u << (rows[r] - 1);
      out[next].set = s;
      ++next;
    }
  }
  A4CB_CHECK((int)out.size() == k - n, "chamber count mismatch");
  return out;
}

bool valid_partial_quiver(const PartialQuiver& p) {
  if (p.n < 2 || (int)p.edges.size() != p.n - 1) return false;
  int first = -1, last = -1;
  for (int idx = 0; idx < (int)p.edges.size(); ++idx) {
    char ch = p.edges[idx];
    if (ch != 'L' && ch != 'R' && ch != '-') return false;
    if (ch != '-') {
      if (first < 0) first = idx;
      last = idx;
    }
  }
  if (first < 0) return false;
  for (int idx = first; idx <= last; ++idx)
    if (p.edges[idx] == '-') return false;
  return true;
}

std::vector<PartialQuiver> partial_quivers(int n) {
  A4CB_CHECK(n >= 2, "rank too small for partial quivers");
  std::vector<PartialQuiver> out;
  int len = n - 1;
  std::string s(len, '-');
  // enumerate all strings over {-, L, R}, keep the valid ones
  std::vector<int> digits(len, 0);
  const char sym[3] = {'-', 'L', 'R'};
  for (;;) {
    for (int i = 0; i < len; ++i) s[i] = sym[digits[i]];
    PartialQuiver p{n, s};
    if (valid_partial_quiver(p)) out.push_back(p);
    int i = len - 1;
    while (i >= 0 && digits[i] == 2) digits[i--] = 0;
    if (i < 0) break;
    ++digits[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

ChamberSet l_map(const PartialQuiver& p) {
  A4CB_CHECK(valid_partial_quiver(p), "invalid partial quiver");
  int n = p.n;
  ChamberSet s = 0;
  int lo = 0, hi = 0;  // lowest / highest directed edge number
  for (int j = 2; j <= n; ++j) {
    char ch = p.edge(j);
    if (ch == 'L') s |= 1u << (j - 1);
    if (ch != '-') {
      if (!lo) lo = j;
      hi = j;
    }
  }
  if (p.edge(lo) == 'R')  // rightmost directed edge
    for (int m = 1; m <= lo - 1; ++m) s |= 1u << (m - 1);
  if (p.edge(hi) == 'R')  // leftmost directed edge
    for (int m = hi + 1; m <= n + 1; ++m) s |= 1u << (m - 1);
  return s;
}

namespace {
const std::map<ChamberSet, PartialQuiver>& l_inverse(int n) {
  static std::map<int, std::map<ChamberSet, PartialQuiver>> tables;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(n);
  if (it != tables.end()) return it->second;
  std::map<ChamberSet, PartialQuiver> table;
  for (auto& p : partial_quivers(n)) {
    auto [pos, fresh] = table.emplace(l_map(p), p);
    A4CB_CHECK(fresh, "l is not injective");
  }
  return tables.emplace(n, std::move(table)).first->second;
}
}  // namespace

PartialQuiver chamber_set_to_quiver(ChamberSet s, int n) {
  auto& table = l_inverse(n);
  auto it = table.find(s);
  A4CB_CHECK(it != table.end(),
             "not a chamber set: " + chamber_set_str(s));
  return it->second;
}

std::vector<PartialQuiver> quivers_of_word(const Word& w, int n) {
  std::vector<PartialQuiver> out;
  std::set<ChamberSet> seen;
  for (auto& c : chamber_sets(w, n)) {
    A4CB_CHECK(seen.insert(c.set).second, "duplicate chamber set");
    out.push_back(chamber_set_to_quiver(c.set, n));
  }
  return out;
}

std::vector<QuiverComponent> components(const PartialQuiver& p) {
  std::vector<QuiverComponent> out;
  int n = p.n;
  for (int j = n; j >= 2;) {  // left to right in the diagram
    char ch = p.edge(j);
    if (ch == '-') {
      --j;
      continue;
    }
    QuiverComponent c;
    c.type = ch;
    c.hi = j;
    while (j >= 2 && p.edge(j) == ch) --j;
    c.lo = j + 1;
    out.push_back(c);
  }
  return out;
}

}  // namespace a4cb
