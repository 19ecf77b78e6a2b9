#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trihex/hexlattice.hpp"
#include "trihex/map.hpp"

namespace trihex {

namespace {

// Apply the symmetry x -> eps*x + t to a sorted vertex triple.  Translation
// preserves lexicographic order and negation reverses it, so the image stays
// sorted without re-sorting.
TilingVertex apply_move(const TilingVertex& x, int eps, HexCoord t) {
  TilingVertex out;
  for (int i = 0; i < 3; ++i) {
    out[i] = (eps > 0 ? x[i] : -x[2 - i]) + t;
  }
  return out;
}

// Recover the unique symmetry that maps one vertex triple onto another.
// The group acts freely on tiling vertices, so at most one move fits.
std::pair<int, HexCoord> find_move(const RotocenterLattice& lat,
                                   const TilingVertex& src,
                                   const TilingVertex& dst) {
  for (int eps : {+1, -1}) {
    TilingVertex base = apply_move(src, eps, HexCoord{0, 0});
    HexCoord t = dst[0] - base[0];
    if (!lat.in_doubled_lattice(t)) continue;
    if (apply_move(src, eps, t) == dst) return {eps, t};
  }
  throw internal_error("no symmetry maps vertex onto its representative");
}

}  // namespace

CombinatorialMap build_by_quotient(const Signature& sig) {
  const RotocenterLattice lat(sig);
  const Int v = sig.vertices();
  if (v > std::numeric_limits<int>::max() / 3) {
    throw std::invalid_argument("vertex count too large to build");
  }

  // One period of the doubled lattice covers every orbit; collect the
  // canonical representative of each corner vertex seen.
  std::vector<TilingVertex> reps;
  reps.reserve(static_cast<size_t>(24 * (sig.s + 1) * (sig.b + 1)));
  for (Int q = 0; q < 2 * (sig.b + 1); ++q) {
    for (Int r = 0; r < 2 * (sig.s + 1); ++r) {
      for (const TilingVertex& x : corner_vertices(HexCoord{q, r})) {
        reps.push_back(lat.canonical_vertex_orbit(x));
      }
    }
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  if (static_cast<Int>(reps.size()) != v) {
    throw internal_error("vertex orbit count disagrees with signature");
  }

  auto vertex_id = [&reps](const TilingVertex& x) {
    auto it = std::lower_bound(reps.begin(), reps.end(), x);
    if (it == reps.end() || *it != x) {
      throw internal_error("vertex representative lookup failed");
    }
    return static_cast<int>(it - reps.begin());
  };

  // Dart 3a+k sits at vertex a on edge slot k; slots advance counterclockwise.
  const int n = static_cast<int>(v);
  CombinatorialMap m;
  m.dart_count = 3 * n;
  m.next_ccw.resize(static_cast<size_t>(m.dart_count));
  m.opposite.assign(static_cast<size_t>(m.dart_count), -1);
  for (int a = 0; a < n; ++a) {
    for (int k = 0; k < 3; ++k) {
      m.next_ccw[static_cast<size_t>(3 * a + k)] = 3 * a + (k + 1) % 3;
    }
  }

  for (int a = 0; a < n; ++a) {
    for (int k = 0; k < 3; ++k) {
      const TilingVertex nb = neighbor_vertex(reps[static_cast<size_t>(a)], k);
      const TilingVertex c = lat.canonical_vertex_orbit(nb);
      const auto [eps, t] = find_move(lat, nb, c);
      const TilingVertex image =
          apply_move(reps[static_cast<size_t>(a)], eps, t);
      const int b = vertex_id(c);
      int k2 = -1;
      for (int j = 0; j < 3; ++j) {
        if (neighbor_vertex(c, j) == image) {
          k2 = j;
          break;
        }
      }
      if (k2 < 0) throw internal_error("return edge slot not found");
      m.opposite[static_cast<size_t>(3 * a + k)] = 3 * b + k2;
    }
  }

  for (int d = 0; d < m.dart_count; ++d) {
    const int e = m.opposite[static_cast<size_t>(d)];
    if (e < 0 || e == d || m.opposite[static_cast<size_t>(e)] != d) {
      throw internal_error("edge pairing is not a fixed-point-free involution");
    }
  }

  m.finalize();

  const Counts expect = counts(sig);
  if (m.vertex_count != expect.vertices) {
    throw internal_error("built map has wrong vertex count");
  }
  Int triangles = 0;
  Int hexagons = 0;
  for (int f = 0; f < m.face_count; ++f) {
    const int size = m.face_size[static_cast<size_t>(f)];
    if (size == 3) {
      ++triangles;
    } else if (size == 6) {
      ++hexagons;
    } else {
      throw internal_error("built map has a face that is not a triangle or hexagon");
    }
  }
  if (triangles != 4 || hexagons != expect.hexagons) {
    throw internal_error("built map has wrong face census");
  }
  return m;
}

}  // namespace trihex
