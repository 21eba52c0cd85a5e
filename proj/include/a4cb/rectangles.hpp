#ifndef A4CB_RECTANGLES_HPP
#define A4CB_RECTANGLES_HPP

#include "a4cb/cones.hpp"
#include "a4cb/regions.hpp"

namespace a4cb {

// The rectangle algorithm: rectangles rho(Y) on the numeric triangle array,
// the glued diagram E(P) with its centre and vertical line, and the root
// sets / 0-1 vectors they produce.

// A (p,q,r,s)-rectangle: top vertex on line p, left vertex on line q, right
// vertex on line r, bottom vertex on line s; p+s = q+r.
struct Rho {
  int p = 0, q = 0, r = 0, s = 0;
};

Rho rho(const QuiverComponent& y, int n);
Rho rho_j(int j, int n);

// A placed rectangle in diagonal coordinates: alpha counts steps toward the
// lower left, beta steps toward the lower right, and the array line of a
// vertex (alpha, beta) is alpha + beta + line0 of the diagram.
struct PlacedRect {
  long long alo = 0, ahi = 0, blo = 0, bhi = 0;
};

struct DiagramE {
  int n = 0;
  long long line0 = 0;
  std::vector<PlacedRect> rects;      // one per component, left to right
  bool single = false;                // one rectangle: no centre needed
  long long alphaG = 0, betaH = 0;    // centre (valid when !single)
  long long deltaV = 0;               // column coordinate of the line V

  bool covered(long long a, long long b) const;  // unit cell [a,a+1]x[b,b+1]
  bool kept_column(long long kappa) const {      // alternate-column rule
    return ((kappa - (line0 - 1)) % 2) == 0;
  }
};

struct CornerRead {
  long long a = 0, b = 0;       // corner vertex (alpha, beta)
  bool left = false;            // points left (otherwise right)
  std::string label;            // component label, empty for unlabelled ones
  PlacedRect r_of_x;            // the maximal rectangle R(X)
  std::vector<RootSpan> roots;  // the half of R(X) on the corner's side of V
};

DiagramE build_E(const PartialQuiver& p);

// Extremal left/right corners of E(P) with their readings.
std::vector<CornerRead> corner_reads(const DiagramE& e, const PartialQuiver& p);

std::vector<RootSpan> phi_plus(const PartialQuiver& p);  // sorted, distinct
std::vector<RootSpan> phi_plus_j(int j, int n);

// 0/1 vectors of length 10 in the root order of the word j (A4 only).
IntVec vector_vP(const PartialQuiver& p);
IntVec vector_vj(int j);

// Wall incidence: does the named wall form vanish on the vector?
// Wall names: letter forms ("A", "BCD", ...) or a coordinate letter a..j.
bool incidence(const IntVec& v, const std::string& wall);

// The simplicial region spanned by the ten vectors of a commutation class
// (6 quiver vectors + v_1..v_4); returns its number.
int region_for_class(const Word& rep, const RegionCatalog& cat);

}  // namespace a4cb

#endif
