#ifndef A4CB_REGIONS_HPP
#define A4CB_REGIONS_HPP

#include <array>
#include <optional>

#include "a4cb/cones.hpp"
#include "a4cb/tables.hpp"

namespace a4cb {

// The piecewise-linear reparametrization R between the two fixed A4 words
// j = (1,3,2,4,1,3,2,4,1,3) and j' = (2,4,1,3,2,4,1,3,2,4), its regions of
// linearity, and the transition maps attached to arbitrary word pairs.

const Word& word_j();
const Word& word_jprime();
const Word& word_l();  // (4,3,4,2,3,4,1,2,3,4)

// The fixed 25-move path from j to j' (15 commutations, 10 long braids).
const std::vector<Word>& r_path_words();
const std::vector<Move>& r_path_moves();

// Apply one move to a parameter vector: commutation swaps the pair, a long
// braid maps (a,b,c) to (b+c-a,a,b) if a <= c and to (b,c,b+a-c) if a >= c.
void apply_move_numeric(const Move& m, IntVec& v);

IntVec replay_moves(const std::vector<Move>& moves, IntVec v);

// Shortest move sequence from one reduced w0 word to another (BFS; cached).
const std::vector<Move>& braid_path(const Word& from, const Word& to, int n);

// phi_to . phi_from^{-1} on parameter vectors.
IntVec transition_eval(const Word& from, const Word& to, int n, const IntVec& v);

IntVec R_eval(const IntVec& v);
IntVec tau(const IntVec& v);
IntVec R_inverse(const IntVec& v);  // tau . R . tau

struct Region {
  int number = 0;                       // reference numbering 1..144
  std::vector<std::string> leaf_signs;  // sign strings over the letters A..J
  IntMat map;                           // the linear map on this region
  std::vector<LinForm> system;          // irredundant inward forms (f.v >= 0)
  bool simplicial = false;
  std::vector<LinForm> walls;       // simplicial only: 10 inward walls
  std::vector<int> coord_walls;     // coordinates m with wall v_m >= 0

  bool contains(const IntVec& v) const {
    for (auto& f : system)
      if (dot(f, v) < 0) return false;
    return true;
  }
};

struct RegionCatalog {
  int leaf_count = 0;  // consistent sign choices (204)
  std::vector<Region> regions;          // by number, 1..144
  std::array<LinForm, 10> alpha_path;   // constraint forms A..J on the g path
  IntMat g_map;                         // the map v -> g(v)
  bool fixture_match = false;           // numbering agreed with the table3 data

  // 62-vertex long-braid-analogue graph on simplicial regions
  // (vertex = number-1) with a witness common wall per edge.
  MoveGraph adjacency;
  std::map<std::pair<int, int>, LinForm> adjacency_wall;

  const Region& by_number(int num) const { return regions.at(num - 1); }
  std::vector<int> locate(const IntVec& v) const;  // ascending region numbers

  static const RegionCatalog& get();  // computed once, lazily
};

// Express a form as a nonnegative combination of alpha_A..alpha_E, alpha_H
// and print it in the compact letter syntax ("ABC", "AB2CDEH").
std::optional<std::string> form_name(const LinForm& f);

}  // namespace a4cb

#endif
