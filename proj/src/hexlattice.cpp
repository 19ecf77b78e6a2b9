#include "trihex/hexlattice.hpp"

#include <algorithm>

namespace trihex {

namespace {

constexpr std::array<HexCoord, 6> kNeighborOffsets = {{
    {0, -1},   // N
    {0, 1},    // S
    {1, 0},    // NE
    {1, 1},    // SE
    {-1, 0},   // SW
    {-1, -1},  // NW
}};

}  // namespace

std::array<HexCoord, 6> hex_neighbors(HexCoord h) {
  std::array<HexCoord, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = h + kNeighborOffsets[i];
  return out;
}

bool hexes_adjacent(HexCoord a, HexCoord b) {
  HexCoord d = b - a;
  for (const HexCoord& o : kNeighborOffsets)
    if (d == o) return true;
  return false;
}

std::array<HexCoord, 2> common_neighbors(HexCoord a, HexCoord b) {
  if (!hexes_adjacent(a, b))
    throw std::invalid_argument("common_neighbors: hexagons not adjacent");
  std::array<HexCoord, 2> out;
  int found = 0;
  for (const HexCoord& na : hex_neighbors(a)) {
    if (na == b) continue;
    if (hexes_adjacent(na, b)) {
      if (found == 2) throw internal_error("common_neighbors: more than two");
      out[found++] = na;
    }
  }
  if (found != 2) throw internal_error("common_neighbors: expected two");
  return out;
}

TilingVertex make_tiling_vertex(HexCoord a, HexCoord b, HexCoord c) {
  TilingVertex x{a, b, c};
  std::sort(x.begin(), x.end());
  if (x[0] == x[1] || x[1] == x[2] || !hexes_adjacent(x[0], x[1]) ||
      !hexes_adjacent(x[1], x[2]) || !hexes_adjacent(x[0], x[2]))
    throw std::invalid_argument("tiling vertex: hexagons not mutually adjacent");
  return x;
}

std::array<TilingVertex, 6> corner_vertices(HexCoord h) {
  // Consecutive neighbors share a corner with h; counterclockwise starting
  // at the top: N, NW, SW, S, SE, NE.
  const HexCoord n = h + HexCoord{0, -1}, s = h + HexCoord{0, 1};
  const HexCoord ne = h + HexCoord{1, 0}, se = h + HexCoord{1, 1};
  const HexCoord sw = h + HexCoord{-1, 0}, nw = h + HexCoord{-1, -1};
  return {make_tiling_vertex(h, n, nw),  make_tiling_vertex(h, nw, sw),
          make_tiling_vertex(h, sw, s),  make_tiling_vertex(h, s, se),
          make_tiling_vertex(h, se, ne), make_tiling_vertex(h, ne, n)};
}

std::array<HexCoord, 3> ccw_faces(const TilingVertex& x) {
  // Sorted mutually adjacent triples come in exactly two shapes relative to
  // the least member P: {P, P+(1,0), P+(1,1)} (corner pointing left) and
  // {P, P+(0,1), P+(1,1)} (corner pointing right).
  HexCoord d1 = x[1] - x[0];
  HexCoord d2 = x[2] - x[0];
  if (d1 == HexCoord{1, 0} && d2 == HexCoord{1, 1}) return {x[0], x[2], x[1]};
  if (d1 == HexCoord{0, 1} && d2 == HexCoord{1, 1}) return {x[0], x[1], x[2]};
  throw std::invalid_argument("ccw_faces: not a tiling vertex");
}

TilingVertex neighbor_vertex(const TilingVertex& x, int k) {
  if (k < 0 || k > 2) throw std::invalid_argument("neighbor_vertex: bad edge index");
  auto cc = ccw_faces(x);
  HexCoord f1 = cc[k], f2 = cc[(k + 1) % 3], other = cc[(k + 2) % 3];
  auto common = common_neighbors(f1, f2);
  HexCoord w = (common[0] == other) ? common[1] : common[0];
  return make_tiling_vertex(f1, f2, w);
}

RotocenterLattice::RotocenterLattice(const Signature& sig)
    : sig_(sig), u_{0, sig.s + 1}, w_{sig.b + 1, -sig.f} {}

Int RotocenterLattice::det() const {
  Int d = u_.q * w_.r - u_.r * w_.q;
  return d < 0 ? -d : d;
}

bool RotocenterLattice::is_rotocenter(HexCoord h) const {
  // h = m*u + n*w forces n = h.q/(b+1) and then m = (h.r + n*f)/(s+1).
  Int bw = sig_.b + 1, sw = sig_.s + 1;
  if (floor_mod(h.q, bw) != 0) return false;
  Int n = h.q / bw;
  return floor_mod(h.r + n * sig_.f, sw) == 0;
}

bool RotocenterLattice::in_doubled_lattice(HexCoord t) const {
  return reduce_doubled(t) == HexCoord{0, 0};
}

HexCoord RotocenterLattice::reduce_doubled(HexCoord h) const {
  const Int qm = 2 * (sig_.b + 1), rm = 2 * (sig_.s + 1);
  Int q = floor_mod(h.q, qm);
  Int n = (h.q - q) / qm;  // subtract n copies of 2w = (2(b+1), -2f)
  Int r = floor_mod(h.r + 2 * n * sig_.f, rm);
  return HexCoord{q, r};
}

HexCoord RotocenterLattice::canonical_hex_orbit(HexCoord h) const {
  return std::min(reduce_doubled(h), reduce_doubled(-h));
}

bool RotocenterLattice::is_fixed_hex(HexCoord h) const {
  return reduce_doubled(h) == reduce_doubled(-h);
}

TilingVertex RotocenterLattice::canonical_vertex_orbit(
    const TilingVertex& x) const {
  TilingVertex sorted = make_tiling_vertex(x[0], x[1], x[2]);
  bool first = true;
  TilingVertex best{};
  for (int eps = 0; eps < 2; ++eps) {
    TilingVertex base = sorted;
    if (eps) {
      base = {-sorted[0], -sorted[1], -sorted[2]};
      std::sort(base.begin(), base.end());
    }
    for (const HexCoord& anchor : base) {
      HexCoord t = reduce_doubled(anchor) - anchor;
      TilingVertex cand{base[0] + t, base[1] + t, base[2] + t};
      if (first || cand < best) {
        best = cand;
        first = false;
      }
    }
  }
  return best;
}

}  // namespace trihex
