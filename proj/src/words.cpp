#include "a4cb/words.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace a4cb {

std::vector<int> permutation_of(const Word& w, int n) {
  std::vector<int> img(n + 1);
  for (int i = 0; i <= n; ++i) img[i] = i + 1;
  for (int letter : w) {
    A4CB_CHECK(letter >= 1 && letter <= n, "letter out of range");
    std::swap(img[letter - 1], img[letter]);
  }
  return img;
}

bool is_reduced(const Word& w, int n) {
  std::vector<int> img(n + 1);
  for (int i = 0; i <= n; ++i) img[i] = i + 1;
  for (int letter : w) {
    if (letter < 1 || letter > n) return false;
    if (img[letter - 1] > img[letter]) return false;  // length would drop
    std::swap(img[letter - 1], img[letter]);
  }
  return true;
}

bool is_w0_word(const Word& w, int n) {
  if ((int)w.size() != w0_length(n)) return false;
  if (!is_reduced(w, n)) return false;
  auto img = permutation_of(w, n);
  for (int i = 0; i <= n; ++i)
    if (img[i] != n + 1 - i) return false;
  return true;
}

Word apply_move(const Word& w, const Move& m) {
  Word out(w);
  if (m.braid) {
    A4CB_CHECK(m.pos + 2 < (int)w.size(), "braid move out of range");
    int i = w[m.pos], j = w[m.pos + 1];
    A4CB_CHECK(std::abs(i - j) == 1 && w[m.pos + 2] == i, "not a long braid site");
    out[m.pos] = j;
    out[m.pos + 1] = i;
    out[m.pos + 2] = j;
  } else {
    A4CB_CHECK(m.pos + 1 < (int)w.size(), "swap out of range");
    A4CB_CHECK(std::abs(w[m.pos] - w[m.pos + 1]) > 1, "letters do not commute");
    std::swap(out[m.pos], out[m.pos + 1]);
  }
  return out;
}

std::vector<std::pair<Move, Word>> neighbors(const Word& w, int n) {
  std::vector<std::pair<Move, Word>> out;
  for (int t = 0; t + 1 < (int)w.size(); ++t) {
    if (std::abs(w[t] - w[t + 1]) > 1) {
      Move m{t, false};
      out.emplace_back(m, apply_move(w, m));
    }
  }
  for (int t = 0; t + 2 < (int)w.size(); ++t) {
    if (std::abs(w[t] - w[t + 1]) == 1 && w[t + 2] == w[t]) {
      Move m{t, true};
      out.emplace_back(m, apply_move(w, m));
    }
  }
  (void)n;
  return out;
}

namespace {

Word seed_w0(int n) {
  // (1, 2,1, 3,2,1, ..., n,...,1)
  Word w;
  for (int b = 1; b <= n; ++b)
    for (int i = b; i >= 1; --i) w.push_back(i);
  return w;
}

struct RankCache {
  std::vector<Word> words;
  std::vector<CommClass> classes;
  std::map<Word, int> class_of;
  MoveGraph graph;
};

const RankCache& cache_for(int n) {
  static std::map<int, RankCache> caches;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = caches.find(n);
  if (it != caches.end()) return it->second;

  A4CB_CHECK(n >= 1 && n <= kMaxRank, "rank out of supported range");
  RankCache rc;

  // BFS closure of one w0 word under all moves.
  Word seed = seed_w0(n);
  A4CB_CHECK(is_w0_word(seed, n), "seed word not reduced w0");
  std::set<Word> seen{seed};
  std::deque<Word> queue{seed};
  while (!queue.empty()) {
    Word w = queue.front();
    queue.pop_front();
    for (auto& [m, u] : neighbors(w, n))
      if (seen.insert(u).second) queue.push_back(u);
  }
  rc.words.assign(seen.begin(), seen.end());

  // Partition under commutations only.
  std::set<Word> unassigned(seen);
  std::vector<std::vector<Word>> classes;
  while (!unassigned.empty()) {
    Word start = *unassigned.begin();
    std::vector<Word> members;
    std::set<Word> cseen{start};
    std::deque<Word> cq{start};
    unassigned.erase(start);
    while (!cq.empty()) {
      Word w = cq.front();
      cq.pop_front();
      members.push_back(w);
      for (auto& [m, u] : neighbors(w, n)) {
        if (m.braid) continue;
        if (cseen.insert(u).second) {
          unassigned.erase(u);
          cq.push_back(u);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  std::sort(classes.begin(), classes.end(),
            [](auto& a, auto& b) { return a.front() < b.front(); });
  for (size_t c = 0; c < classes.size(); ++c) {
    CommClass cc;
    cc.id = (int)c + 1;
    cc.rep = classes[c].front();
    cc.members = std::move(classes[c]);
    for (auto& w : cc.members) rc.class_of[w] = (int)c;
    rc.classes.push_back(std::move(cc));
  }

  rc.graph.vertices = (int)rc.classes.size();
  for (auto& w : rc.words) {
    int cw = rc.class_of.at(w);
    for (auto& [m, u] : neighbors(w, n)) {
      if (!m.braid) continue;
      int cu = rc.class_of.at(u);
      if (cu != cw) rc.graph.edges.insert({std::min(cw, cu), std::max(cw, cu)});
    }
  }

  return caches.emplace(n, std::move(rc)).first->second;
}

}  // namespace

const std::vector<Word>& enumerate_w0_words(int n) { return cache_for(n).words; }

const std::vector<CommClass>& commutation_classes(int n) {
  return cache_for(n).classes;
}

int class_index_of(const Word& w, int n) {
  auto& rc = cache_for(n);
  auto it = rc.class_of.find(w);
  A4CB_CHECK(it != rc.class_of.end(), "word is not a reduced w0 expression");
  return it->second;
}

const MoveGraph& class_graph(int n) { return cache_for(n).graph; }

bool MoveGraph::connected() const {
  if (vertices == 0) return true;
  std::vector<char> vis(vertices, 0);
  std::deque<int> q{0};
  vis[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (auto& [a, b] : edges) {
      int y = (a == x) ? b : (b == x ? a : -1);
      if (y >= 0 && !vis[y]) {
        vis[y] = 1;
        ++count;
        q.push_back(y);
      }
    }
  }
  return count == vertices;
}

Word iota(const Word& w, int n) {
  Word out(w);
  for (auto& letter : out) letter = n + 1 - letter;
  return out;
}

}  // namespace a4cb
