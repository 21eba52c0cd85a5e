#ifndef A4CB_WORDS_HPP
#define A4CB_WORDS_HPP

#include <map>
#include <set>

#include "a4cb/common.hpp"

namespace a4cb {

// Reduced expressions of the longest element w0 of the symmetric group
// S_{n+1}, together with commutation / long braid moves between them.

constexpr int kMaxRank = 5;  // enumeration guard; word counts explode beyond

inline int w0_length(int n) { return n * (n + 1) / 2; }

// Image array of the product s_{w[0]} ... s_{w[k-1]}: entry i (0-based) is
// the image of i+1, values 1..n+1.
std::vector<int> permutation_of(const Word& w, int n);

bool is_reduced(const Word& w, int n);
bool is_w0_word(const Word& w, int n);

struct Move {
  int pos = 0;         // leftmost letter position affected (0-based)
  bool braid = false;  // true: s_i s_j s_i -> s_j s_i s_j; false: swap
};

std::vector<std::pair<Move, Word>> neighbors(const Word& w, int n);
Word apply_move(const Word& w, const Move& m);

// All reduced expressions of w0, lexicographically sorted.  n <= 5.
const std::vector<Word>& enumerate_w0_words(int n);

struct CommClass {
  int id = 0;   // 1-based position in the deterministic class order
  Word rep;     // lexicographically least member
  std::vector<Word> members;
};

// Partition of the w0 words into commutation classes, ordered by
// representative.
const std::vector<CommClass>& commutation_classes(int n);

// Index of the class containing w, 0-based into commutation_classes(n).
int class_index_of(const Word& w, int n);

struct MoveGraph {
  int vertices = 0;
  std::set<std::pair<int, int>> edges;  // 0-based, first < second

  bool adjacent(int x, int y) const {
    if (x > y) std::swap(x, y);
    return edges.count({x, y}) != 0;
  }
  bool connected() const;
};

// Long-braid adjacency graph on commutation classes.
const MoveGraph& class_graph(int n);

// The Dynkin-diagram involution i -> n+1-i applied letterwise.
Word iota(const Word& w, int n);

}  // namespace a4cb

#endif
