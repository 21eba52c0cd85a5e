#ifndef A4CB_CHAMBERS_HPP
#define A4CB_CHAMBERS_HPP

#include "a4cb/words.hpp"

namespace a4cb {

// Chamber sets of the wiring diagram of a reduced w0 word, partial quivers,
// and the bijection l between them.

// Subset of the strings 1..n+1 as a bitmask (bit s-1 = string s).
using ChamberSet = unsigned;

std::string chamber_set_str(ChamberSet s);        // e.g. "134"
ChamberSet parse_chamber_set(const std::string&); // inverse of the above

struct Chamber {
  int s = 0, s2 = 0;   // consecutive occurrences of the same letter (1-based)
  int letter = 0;
  ChamberSet set = 0;
};

// The k-n bounded chambers of the wiring diagram, in order of the first
// occurrence position s.  For the chamber of the pair (s, s2) with letter i,
// the chamber set collects the strings lying in rows i+1..n+1 after the
// first s crossings.
std::vector<Chamber> chamber_sets(const Word& w, int n);

// A partial quiver: edges n..2 written left to right over {L, R, -} with the
// directed part nonempty and contiguous.  edges[idx] is edge number n-idx.
struct PartialQuiver {
  int n = 0;
  std::string edges;

  char edge(int j) const { return edges.at(n - j); }  // j in [2, n]
  bool operator==(const PartialQuiver& o) const { return n == o.n && edges == o.edges; }
  bool operator<(const PartialQuiver& o) const { return edges < o.edges; }
};

bool valid_partial_quiver(const PartialQuiver& p);

// All partial quivers of type A_n in lexicographic order of the edge string.
std::vector<PartialQuiver> partial_quivers(int n);

// l(P) = l1 (L-edges) + l2 (left run, if the rightmost directed edge is R)
//      + l3 (right run, if the leftmost directed edge is R).
ChamberSet l_map(const PartialQuiver& p);

// Inverse of l on its image; throws if s is not a chamber set.
PartialQuiver chamber_set_to_quiver(ChamberSet s, int n);

// The partial quivers attached to the chamber sets of w, in chamber order.
std::vector<PartialQuiver> quivers_of_word(const Word& w, int n);

// Maximal same-direction component of a quiver, with its flanking edge
// numbers a = lowest edge - 1 and b = highest edge + 1.
struct QuiverComponent {
  char type = 0;  // 'L' or 'R'
  int lo = 0, hi = 0;  // edge number range, lo <= hi
  int a() const { return lo - 1; }
  int b() const { return hi + 1; }
};

// Components listed left to right in the diagram (descending edge numbers).
std::vector<QuiverComponent> components(const PartialQuiver& p);

}  // namespace a4cb

#endif
