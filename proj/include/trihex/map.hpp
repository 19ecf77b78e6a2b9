#pragma once

#include <string>
#include <vector>

#include "trihex/signature.hpp"

namespace trihex {

// An oriented combinatorial map: darts 0..dart_count-1, the edge involution
// `opposite` pairing the two darts of each edge, and the vertex rotation
// `next_ccw` giving the next outgoing dart counterclockwise around the same
// vertex.  Faces are traversed counterclockwise (interior on the left) by
// d -> prev_ccw(opposite(d)); finalize() materializes the orbit partitions.
struct CombinatorialMap {
  int dart_count = 0;
  std::vector<int> opposite;
  std::vector<int> next_ccw;

  // Derived by finalize(); ids are assigned in order of each orbit's
  // smallest dart, so the numbering is a pure function of the map.
  std::vector<int> prev_ccw;
  std::vector<int> vertex_of;
  std::vector<int> face_of;
  std::vector<int> vertex_dart;  // smallest dart of each vertex
  std::vector<int> face_dart;    // smallest dart of each face
  std::vector<int> face_size;
  int vertex_count = 0;
  int edge_count = 0;
  int face_count = 0;

  // Next dart counterclockwise around the face of d.  Valid after
  // finalize().
  int face_next(int d) const { return prev_ccw[opposite[d]]; }

  // Computes the inverse rotation and the vertex/face partitions.  Throws
  // internal_error if opposite/next_ccw are not permutations of the darts.
  void finalize();

  // Vertices adjacent to v, one per incident dart, in rotation order
  // starting from vertex_dart[v].  Valid after finalize().
  std::vector<int> neighbors(int v) const;

  friend bool operator==(const CombinatorialMap& a, const CombinatorialMap& b) {
    return a.dart_count == b.dart_count && a.opposite == b.opposite &&
           a.next_ccw == b.next_ccw;
  }
};

// Checklist result for "is this map a trihex".  Checks run in the listed
// order; first_failure names the first one that failed.
struct ValidationReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int triangles = 0;
  int hexagons = 0;
  Int euler_residual = 0;

  bool well_formed = false;         // permutations of the right size
  bool involution_ok = false;       // opposite is a fixed-point-free involution
  bool three_regular = false;       // every rotation orbit has size 3
  bool face_sizes_ok = false;       // every face a triangle or hexagon
  bool four_triangles = false;      // exactly 4 triangles
  bool connected = false;
  bool simple = false;              // no loops, no parallel edges
  bool euler_ok = false;            // V - E + F == 2
  bool two_connected = false;       // no cut vertex

  bool pass = false;
  std::string first_failure;
};

// Never throws on bad content; reports what failed instead.
ValidationReport validate(const CombinatorialMap& m);

// Constructs the trihex as the quotient of the hexagonal tiling by the
// rotation group of the signature's rotocenter lattice.  Deterministic:
// darts are numbered (canonical vertex orbit, edge index in rotation order).
CombinatorialMap build_by_quotient(const Signature& sig);

// Constructs the same trihex by assembling two spines and b belts and
// gluing the boundaries with the signature's offset.  Independent of the
// lattice machinery; agrees with build_by_quotient up to
// orientation-preserving isomorphism.
CombinatorialMap build_by_spines(const Signature& sig);

}  // namespace trihex
