#pragma once

#include <array>
#include <vector>

#include "trihex/map.hpp"
#include "trihex/signature.hpp"

namespace trihex {

// A closed circuit of distinct hexagonal faces in which consecutive faces
// (cyclically) share an edge and each face is entered and left through
// opposite edges.  Stored in canonical form: the lexicographically least
// rotation of the face cycle or of its reversal.
struct Belt {
  std::vector<int> faces;

  int length() const { return static_cast<int>(faces.size()); }
  friend bool operator==(const Belt&, const Belt&) = default;
  friend auto operator<=>(const Belt& a, const Belt& b) {
    return a.faces <=> b.faces;
  }
};

// A triangle-to-triangle chain of distinct hexagons, consecutive faces
// sharing an edge and every hexagon crossed through opposite edges.  The
// hexagon list may be empty (two triangles sharing an edge).
struct PseudoRoad {
  int source = -1;               // triangle face id
  int target = -1;               // triangle face id
  std::vector<int> hexagons;     // interior chain, in crossing order

  int length() const { return static_cast<int>(hexagons.size()); }
  friend bool operator==(const PseudoRoad&, const PseudoRoad&) = default;
};

// A maximal straight trace between two triangles is exactly a pseudo-road;
// find_spines reports each one once, regardless of traversal direction.
using SpinePath = PseudoRoad;

// The graph on the four triangular faces whose edges record the existence of
// a pseudo-road between the endpoints.  Loop-free and symmetric; each present
// edge carries one witness road of minimal length plus the number of distinct
// roads joining the pair.
struct CurvatureGraph {
  std::array<int, 4> triangles{};                    // face ids, ascending
  std::array<std::array<bool, 4>, 4> adjacent{};     // indexed by node
  std::array<std::array<int, 4>, 4> road_count{};    // roads per node pair
  std::vector<PseudoRoad> witnesses;                 // one per present edge

  bool complete() const;
};

// All distinct belts of a validated map, each in canonical form, sorted.
std::vector<Belt> find_belts(const CombinatorialMap& m);

// All maximal triangle-to-triangle straight traces of a validated map.  Every
// triangle anchors one trace per edge, and each undirected chain is reported
// once; results are sorted by (source, target, hexagon sequence).
std::vector<SpinePath> find_spines(const CombinatorialMap& m);

// The graph of curvatures of a validated map, computed by exhaustive tracing
// from every triangle edge.
CurvatureGraph curvature_graph(const CombinatorialMap& m);

enum class IsoRelation { none, mirror_only, orientation_preserving };

// Canonical traversal encoding of a connected map: breadth-first discovery
// over (rotation, involution) from every root dart, minimized
// lexicographically.  Two maps are orientation-preservingly isomorphic
// exactly when their encodings coincide.
std::vector<int> canonical_form(const CombinatorialMap& m);

// The same map with every vertex rotation reversed (the mirror image).
CombinatorialMap reversed_orientation(const CombinatorialMap& m);

// Strongest relation holding between two validated maps.
IsoRelation is_isomorphic(const CombinatorialMap& m1,
                          const CombinatorialMap& m2);

enum class ConnectivityGrade { two_connected, three_connected };

// three_connected iff no pair of vertices disconnects the graph, checked by
// exhaustive pair removal.
ConnectivityGrade connectivity_grade(const CombinatorialMap& m);

enum class Chirality { as_built, mirrored };

struct Identification {
  SignatureClass cls;
  Chirality chirality = Chirality::as_built;
};

// Recover the signature class of a validated map by matching it against the
// built representative of every class with the same vertex count.  A map
// matching no class orientation-preservingly but matching one as a mirror
// image is flagged mirrored; no match at all is an internal error.
Identification identify_signature(const CombinatorialMap& m);

}  // namespace trihex
