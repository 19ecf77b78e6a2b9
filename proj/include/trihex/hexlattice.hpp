#pragma once

#include <array>
#include <tuple>

#include "trihex/signature.hpp"

namespace trihex {

// Hexagon of the infinite tiling, addressed by column q and row r.  Columns
// run SW->NE: (q+1, r) is the NE neighbor, (q+1, r+1) the SE neighbor, and
// (q, r+1) sits directly below (south of) (q, r).
struct HexCoord {
  Int q = 0;
  Int r = 0;

  friend bool operator==(const HexCoord&, const HexCoord&) = default;
  friend auto operator<=>(const HexCoord& a, const HexCoord& b) {
    return std::tie(a.q, a.r) <=> std::tie(b.q, b.r);
  }
  friend HexCoord operator+(HexCoord a, HexCoord b) {
    return HexCoord{a.q + b.q, a.r + b.r};
  }
  friend HexCoord operator-(HexCoord a, HexCoord b) {
    return HexCoord{a.q - b.q, a.r - b.r};
  }
  friend HexCoord operator-(HexCoord a) { return HexCoord{-a.q, -a.r}; }
};

// The six tiling neighbors: N, S, NE, SE, SW, NW.
std::array<HexCoord, 6> hex_neighbors(HexCoord h);
bool hexes_adjacent(HexCoord a, HexCoord b);

// The two hexagons adjacent to both a and b (a, b themselves adjacent).
std::array<HexCoord, 2> common_neighbors(HexCoord a, HexCoord b);

// A vertex of the tiling = the three mutually adjacent hexagons meeting
// there, kept sorted.
using TilingVertex = std::array<HexCoord, 3>;

// Sorts and validates (throws std::invalid_argument on a triple that is not
// pairwise adjacent).
TilingVertex make_tiling_vertex(HexCoord a, HexCoord b, HexCoord c);

// The six vertices on the boundary of hexagon h.
std::array<TilingVertex, 6> corner_vertices(HexCoord h);

// The three hexagons of x in counterclockwise order around the vertex.
std::array<HexCoord, 3> ccw_faces(const TilingVertex& x);

// The vertex across the k-th edge of x, where edge k separates ccw_faces[k]
// from ccw_faces[k+1]; edges indexed this way run counterclockwise.
TilingVertex neighbor_vertex(const TilingVertex& x, int k);

// The lattice L of rotation centers for a signature: generated by
// u = (0, s+1) (one column, s+1 hexagons apart) and w = (b+1, -f) (b+1
// columns NE, correcting f hexagons of southward drift).  The symmetry
// group is generated by the 180-degree rotations about points of L; its
// elements act on hexagons as x -> +-x + t with t in the doubled lattice
// 2L, and the quotient of the tiling by this group is the trihex.
class RotocenterLattice {
 public:
  explicit RotocenterLattice(const Signature& sig);

  const Signature& source() const { return sig_; }
  HexCoord u() const { return u_; }
  HexCoord w() const { return w_; }
  // |det(u, w)| = (s+1)(b+1) = v/4.
  Int det() const;

  bool is_rotocenter(HexCoord h) const;
  bool in_doubled_lattice(HexCoord t) const;

  // Unique representative of h + 2L in [0, 2(b+1)) x [0, 2(s+1)).
  HexCoord reduce_doubled(HexCoord h) const;

  // Lexicographic minimum of reduce_doubled(h) and reduce_doubled(-h):
  // a canonical name for the orbit of hexagon h under the group.
  HexCoord canonical_hex_orbit(HexCoord h) const;

  // Orbit of size one: h is equivalent to -h, i.e. h lies in L.  Exactly
  // four such orbits exist; they become the four triangles.
  bool is_fixed_hex(HexCoord h) const;

  // Canonical name for the orbit of a tiling vertex: least sorted triple
  // over both signs and all three anchor choices for the translation.
  TilingVertex canonical_vertex_orbit(const TilingVertex& x) const;

 private:
  Signature sig_;
  HexCoord u_, w_;
};

}  // namespace trihex
