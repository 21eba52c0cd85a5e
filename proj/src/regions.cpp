#include "a4cb/regions.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>

#include "a4cb/lp.hpp"
#include "a4cb/words.hpp"

namespace a4cb {

const Word& word_j() {
  static const Word w{1, 3, 2, 4, 1, 3, 2, 4, 1, 3};
  return w;
}

const Word& word_jprime() {
  static const Word w{2, 4, 1, 3, 2, 4, 1, 3, 2, 4};
  return w;
}

const Word& word_l() {
  static const Word w{4, 3, 4, 2, 3, 4, 1, 2, 3, 4};
  return w;
}

namespace {

// Derive the single move turning w into u.
Move diff_move(const Word& w, const Word& u) {
  A4CB_CHECK(w.size() == u.size(), "word length mismatch");
  int t = 0;
  while (t < (int)w.size() && w[t] == u[t]) ++t;
  A4CB_CHECK(t + 1 < (int)w.size(), "words do not differ by a move");
  if (w[t] == u[t + 1] && w[t + 1] == u[t] && t + 2 <= (int)w.size()) {
    bool braid = t + 2 < (int)w.size() && w[t + 2] == w[t] && u[t + 2] == u[t] &&
                 std::abs(w[t] - w[t + 1]) == 1;
    Move m{t, braid};
    A4CB_CHECK(apply_move(w, m) == u, "inconsistent move step");
    return m;
  }
  throw error("words do not differ by a move");
}

struct PathData {
  std::vector<Word> words;
  std::vector<Move> moves;
};

const PathData& path_data() {
  static const PathData data = [] {
    PathData d;
    d.words = parse_table1(kTable1);
    A4CB_CHECK(d.words.front() == word_j() && d.words.back() == word_jprime(),
               "move path endpoints");
    int braids = 0;
    for (size_t t = 0; t + 1 < d.words.size(); ++t) {
      Move m = diff_move(d.words[t], d.words[t + 1]);
      if (m.braid) ++braids;
      d.moves.push_back(m);
    }
    A4CB_CHECK(braids == 10 && d.moves.size() == 25, "move path shape");
    return d;
  }();
  return data;
}

}  // namespace

const std::vector<Word>& r_path_words() { return path_data().words; }
const std::vector<Move>& r_path_moves() { return path_data().moves; }

void apply_move_numeric(const Move& m, IntVec& v) {
  if (!m.braid) {
    std::swap(v[m.pos], v[m.pos + 1]);
    return;
  }
  long long a = v[m.pos], b = v[m.pos + 1], c = v[m.pos + 2];
  if (a <= c) {
    v[m.pos] = b + c - a;
    v[m.pos + 1] = a;
    v[m.pos + 2] = b;
  } else {
    v[m.pos] = b;
    v[m.pos + 1] = c;
    v[m.pos + 2] = b + a - c;
  }
}

IntVec replay_moves(const std::vector<Move>& moves, IntVec v) {
  for (auto& m : moves) apply_move_numeric(m, v);
  return v;
}

const std::vector<Move>& braid_path(const Word& from, const Word& to, int n) {
  static std::map<std::pair<Word, Word>, std::vector<Move>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(from, to);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  A4CB_CHECK(permutation_of(from, n) == permutation_of(to, n),
             "words have different permutations");
  A4CB_CHECK(is_reduced(from, n) && is_reduced(to, n), "words not reduced");
  std::map<Word, std::pair<Word, Move>> parent;
  std::deque<Word> queue{from};
  parent[from] = {from, Move{}};
  while (!queue.empty() && !parent.count(to)) {
    Word w = queue.front();
    queue.pop_front();
    for (auto& [m, u] : neighbors(w, n)) {
      if (parent.count(u)) continue;
      parent[u] = {w, m};
      queue.push_back(u);
    }
  }
  A4CB_CHECK(parent.count(to), "no braid path found");
  std::vector<Move> moves;
  for (Word w = to; w != from; w = parent[w].first) moves.push_back(parent[w].second);
  std::reverse(moves.begin(), moves.end());
  return cache.emplace(key, std::move(moves)).first->second;
}

IntVec transition_eval(const Word& from, const Word& to, int n, const IntVec& v) {
  A4CB_CHECK(v.size() == from.size(), "vector length mismatch");
  return replay_moves(braid_path(from, to, n), v);
}

IntVec R_eval(const IntVec& v) {
  A4CB_CHECK(v.size() == 10, "R is defined on 10 coordinates");
  return replay_moves(r_path_moves(), v);
}

IntVec tau(const IntVec& v) {
  IntVec u(v);
  for (size_t t = 0; t + 1 < u.size(); t += 2) std::swap(u[t], u[t + 1]);
  return u;
}

IntVec R_inverse(const IntVec& v) { return tau(R_eval(tau(v))); }

// ---------------------------------------------------------------------------
// Region enumeration by symbolic branching along the fixed move path.

namespace {

using Forms = std::vector<LinForm>;  // one form per word position

struct LeafData {
  std::string signs;
  Forms final_forms;
  Forms constraints;  // inward, unnormalized
};

void dfs(Forms forms, size_t move_idx, std::string signs, Forms constraints,
         std::vector<LinForm> pruned_set, std::vector<LeafData>& out) {
  auto& moves = r_path_moves();
  for (; move_idx < moves.size(); ++move_idx) {
    const Move& m = moves[move_idx];
    if (!m.braid) {
      std::swap(forms[m.pos], forms[m.pos + 1]);
      continue;
    }
    LinForm xi = forms[m.pos], eta = forms[m.pos + 1], zeta = forms[m.pos + 2];
    LinForm d = sub(xi, zeta);
    for (int branch = 0; branch < 2; ++branch) {
      Forms next(forms);
      LinForm c;
      if (branch == 0) {  // xi <= zeta
        c = neg(d);
        next[m.pos] = sub(add(eta, zeta), xi);
        next[m.pos + 1] = xi;
        next[m.pos + 2] = eta;
      } else {  // xi >= zeta
        c = d;
        next[m.pos] = eta;
        next[m.pos + 1] = zeta;
        next[m.pos + 2] = add(eta, d);
      }
      auto pruned = pruned_set;
      bool fresh = false;
      if (!is_zero(c)) {
        LinForm cp = primitive(c);
        if (std::find(pruned.begin(), pruned.end(), cp) == pruned.end()) {
          pruned.push_back(cp);
          fresh = true;
        }
      }
      if (fresh && !cone_has_interior(pruned)) continue;
      auto cs = constraints;
      cs.push_back(c);
      dfs(std::move(next), move_idx + 1, signs + (branch ? '+' : '-'),
          std::move(cs), std::move(pruned), out);
    }
    return;
  }
  out.push_back(LeafData{signs, std::move(forms), std::move(constraints)});
}

Forms initial_forms() {
  Forms forms(10, LinForm(10, 0));
  for (int t = 0; t < 10; ++t) forms[t][t] = 1;
  return forms;
}

IntMat forms_to_mat(const Forms& forms) {
  IntMat m;
  for (auto& f : forms) m.push_back(f);
  return m;
}

RegionCatalog compute_catalog() {
  RegionCatalog cat;

  // Constraint forms along the reference path (middle-rule replay).
  {
    Forms forms = initial_forms();
    int braid = 0;
    for (auto& m : r_path_moves()) {
      if (!m.braid) {
        std::swap(forms[m.pos], forms[m.pos + 1]);
        continue;
      }
      cat.alpha_path[braid++] = sub(forms[m.pos], forms[m.pos + 2]);
      LinForm eta = forms[m.pos + 1], zeta = forms[m.pos + 2];
      forms[m.pos] = eta;
      forms[m.pos + 1] = zeta;
      forms[m.pos + 2] = eta;
    }
    cat.g_map = forms_to_mat(forms);
  }

  std::vector<LeafData> leaves;
  dfs(initial_forms(), 0, "", {}, {}, leaves);
  cat.leaf_count = (int)leaves.size();

  // Group leaves by their final linear map.
  std::map<IntMat, std::vector<size_t>> groups;
  for (size_t t = 0; t < leaves.size(); ++t)
    groups[forms_to_mat(leaves[t].final_forms)].push_back(t);

  std::vector<Region> regions;
  for (auto& [map, members] : groups) {
    Region reg;
    reg.map = map;
    for (size_t t : members) reg.leaf_signs.push_back(leaves[t].signs);

    // Candidate walls: every branch constraint of every member leaf.
    std::vector<LinForm> candidates;
    for (size_t t : members)
      for (auto& c : leaves[t].constraints) {
        if (is_zero(c)) continue;
        LinForm cp = primitive(c);
        if (std::find(candidates.begin(), candidates.end(), cp) == candidates.end())
          candidates.push_back(cp);
      }
    // Keep those valid on the whole region (i.e. on every member cone).
    std::vector<LinForm> valid;
    for (auto& c : candidates) {
      bool ok = true;
      for (size_t t : members) {
        if (!valid_on_cone(c, leaves[t].constraints)) {
          ok = false;
          break;
        }
      }
      if (ok) valid.push_back(c);
    }
    // Irredundant subsystem = the facets of the region.
    for (size_t t = 0; t < valid.size();) {
      if (redundant_in_cone(valid, t))
        valid.erase(valid.begin() + t);
      else
        ++t;
    }
    std::sort(valid.begin(), valid.end());
    reg.system = std::move(valid);
    regions.push_back(std::move(reg));
  }

  // Attach the reference numbering by matching inequality systems.
  auto fixture = parse_table3(kTable3);
  std::map<std::vector<LinForm>, int> fixture_index;
  for (auto& row : fixture) {
    std::vector<LinForm> sys;
    for (auto& f : row.system.inward()) sys.push_back(primitive(f));
    std::sort(sys.begin(), sys.end());
    fixture_index[sys] = row.number;
  }
  cat.fixture_match = fixture_index.size() == regions.size();
  std::vector<char> used(regions.size() + 1, 0);
  for (auto& reg : regions) {
    auto it = fixture_index.find(reg.system);
    if (it == fixture_index.end() || used[it->second]) {
      cat.fixture_match = false;
    } else {
      reg.number = it->second;
      used[it->second] = 1;
    }
  }
  if (!cat.fixture_match) {
    // fall back to content order so the catalog stays usable
    int next = 1;
    for (auto& reg : regions)
      if (!reg.number) {
        while (next <= (int)regions.size() && used[next]) ++next;
        reg.number = next;
        used[next] = 1;
      }
  }
  std::sort(regions.begin(), regions.end(),
            [](const Region& a, const Region& b) { return a.number < b.number; });

  // Simplicial regions: 6 irredundant main walls; their coordinate walls.
  for (auto& reg : regions) {
    reg.simplicial = reg.system.size() == 6;
    if (!reg.simplicial) continue;
    std::vector<LinForm> sys(reg.system);
    std::vector<int> coord_of(sys.size(), -1);
    for (int m = 0; m < 10; ++m) {
      LinForm e(10, 0);
      e[m] = 1;
      coord_of.push_back(m);
      sys.push_back(std::move(e));
    }
    for (size_t t = 0; t < sys.size();) {
      if (coord_of[t] >= 0 && redundant_in_cone(sys, t)) {
        sys.erase(sys.begin() + t);
        coord_of.erase(coord_of.begin() + t);
      } else {
        ++t;
      }
    }
    A4CB_CHECK(sys.size() == 10, "simplicial region must have 10 walls");
    for (size_t t = 0; t < sys.size(); ++t) {
      // main walls must all have survived
      if (t < 6) A4CB_CHECK(coord_of[t] == -1, "main wall became redundant");
      if (coord_of[t] >= 0) reg.coord_walls.push_back(coord_of[t]);
    }
    reg.walls = std::move(sys);
  }

  cat.regions = std::move(regions);

  // Adjacency of simplicial regions: common wall hyperplane Q with a
  // bijection of the remaining walls of the shape w -> mu w + lambda Q.
  cat.adjacency.vertices = 62;
  auto solve_pair = [](const LinForm& wx, const LinForm& q, const LinForm& wy) {
    // exists mu > 0, lambda with wy = mu wx + lambda q?
    using R = Rat;
    int i1 = -1, i2 = -1;
    for (int i = 0; i < 10 && i2 < 0; ++i)
      for (int j = i + 1; j < 10; ++j)
        if (wx[i] * q[j] - wx[j] * q[i] != 0) {
          i1 = i;
          i2 = j;
          break;
        }
    if (i1 < 0) return false;  // wx parallel to q
    R det = R(wx[i1]) * q[i2] - R(wx[i2]) * q[i1];
    R mu = (R(wy[i1]) * q[i2] - R(wy[i2]) * q[i1]) / det;
    R lam = (R(wx[i1]) * wy[i2] - R(wx[i2]) * wy[i1]) / det;
    if (mu <= 0) return false;
    for (int i = 0; i < 10; ++i)
      if (mu * wx[i] + lam * q[i] != wy[i]) return false;
    return true;
  };
  for (int x = 1; x <= 62; ++x) {
    for (int y = x + 1; y <= 62; ++y) {
      const Region& rx = cat.by_number(x);
      const Region& ry = cat.by_number(y);
      bool adjacent = false;
      LinForm witness;
      for (auto& wq : rx.walls) {
        LinForm q = hyperplane(wq);
        auto others = [&](const Region& r) {
          std::vector<LinForm> out;
          for (auto& w : r.walls)
            if (hyperplane(w) != q) out.push_back(w);
          return out;
        };
        auto ox = others(rx), oy = others(ry);
        if (ox.size() != 9 || oy.size() != 9) continue;  // q not a wall of both
        // bipartite matching ox -> oy
        std::vector<std::vector<int>> compat(9);
        for (int i = 0; i < 9; ++i)
          for (int j = 0; j < 9; ++j)
            if (solve_pair(ox[i], q, oy[j])) compat[i].push_back(j);
        std::vector<int> match(9, -1);
        std::function<bool(int, std::vector<char>&)> augment =
            [&](int i, std::vector<char>& vis) {
              for (int j : compat[i]) {
                if (vis[j]) continue;
                vis[j] = 1;
                if (match[j] < 0 || augment(match[j], vis)) {
                  match[j] = i;
                  return true;
                }
              }
              return false;
            };
        int size = 0;
        for (int i = 0; i < 9; ++i) {
          std::vector<char> vis(9, 0);
          if (augment(i, vis)) ++size;
        }
        if (size == 9) {
          adjacent = true;
          witness = q;
          break;
        }
      }
      if (adjacent) {
        cat.adjacency.edges.insert({x - 1, y - 1});
        cat.adjacency_wall[{x, y}] = witness;
      }
    }
  }

  return cat;
}

}  // namespace

std::vector<int> RegionCatalog::locate(const IntVec& v) const {
  std::vector<int> out;
  for (auto& reg : regions)
    if (reg.contains(v)) out.push_back(reg.number);
  A4CB_CHECK(!out.empty(), "point not covered by any region");
  return out;
}

const RegionCatalog& RegionCatalog::get() {
  static const RegionCatalog cat = compute_catalog();
  return cat;
}

std::optional<std::string> form_name(const LinForm& f) {
  // coefficients in the basis alpha_A..alpha_E, alpha_H
  long long nA = f[0], nE = f[1], nB = f[2], nD = f[3];
  long long nH = f[4] + nA, nC = f[5] + nE;
  if (nA < 0 || nB < 0 || nC < 0 || nD < 0 || nE < 0 || nH < 0) return std::nullopt;
  if (f[6] != -nB || f[7] != -nD || f[8] != -nH || f[9] != -nC) return std::nullopt;
  std::string name;
  auto put = [&](char ch, long long mult) {
    if (!mult) return;
    name += ch;
    if (mult > 1) name += std::to_string(mult);
  };
  put('A', nA);
  put('B', nB);
  put('C', nC);
  put('D', nD);
  put('E', nE);
  put('H', nH);
  if (name.empty()) return std::nullopt;
  return name;
}

}  // namespace a4cb
