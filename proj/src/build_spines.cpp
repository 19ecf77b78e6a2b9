#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trihex/map.hpp"

namespace trihex {

namespace detail {

// Gluing-offset rule for closing the final seam.  The closing shift is
// sign*2f plus a constant depending only on the belt count; the values below
// are frozen by calibrating against build_by_quotient.
struct SpineGluing {
  int sign = +1;
  long long c_closed = 0;    // belt-free case
  long long c_first = 1;     // one belt
  long long c_per_belt = 2;  // increment per additional belt
  bool inner_first = true;   // which belt boundary faces the first spine
  bool flip = false;         // mirror the assembled map
  bool use_raw = false;      // override: close with raw_shift as-is
  long long raw_shift = 0;
};

CombinatorialMap build_by_spines_tuned(const Signature& sig,
                                       const SpineGluing& g);

}  // namespace detail

namespace {

// A planar patch under construction: faces are polygons with darts laid out
// counterclockwise; glued darts form the edge involution, unglued darts make
// up the boundary.
class PatchBuilder {
 public:
  int add_face(int size) {
    const int face = static_cast<int>(size_.size());
    const int base = static_cast<int>(alpha_.size());
    offset_.push_back(base);
    size_.push_back(size);
    for (int k = 0; k < size; ++k) {
      alpha_.push_back(-1);
      face_of_.push_back(face);
    }
    return face;
  }

  int dart(int face, int k) const {
    return offset_[static_cast<size_t>(face)] + k;
  }

  bool paired(int d) const { return alpha_[static_cast<size_t>(d)] >= 0; }

  // Next and previous dart around the face of d.
  int succ(int d) const {
    const int face = face_of_[static_cast<size_t>(d)];
    const int o = offset_[static_cast<size_t>(face)];
    return o + (d - o + 1) % size_[static_cast<size_t>(face)];
  }
  int pred(int d) const {
    const int face = face_of_[static_cast<size_t>(d)];
    const int o = offset_[static_cast<size_t>(face)];
    const int n = size_[static_cast<size_t>(face)];
    return o + (d - o + n - 1) % n;
  }

  void glue(int a, int b) {
    if (paired(a) || paired(b) || a == b) {
      throw internal_error("darts cannot be glued");
    }
    alpha_[static_cast<size_t>(a)] = b;
    alpha_[static_cast<size_t>(b)] = a;
  }

  // The boundary dart following d: continue around d's face, skipping over
  // glued edges into the neighboring face.
  int next_boundary(int d) const {
    int e = succ(d);
    while (paired(e)) e = succ(alpha_[static_cast<size_t>(e)]);
    return e;
  }

  std::vector<int> boundary_cycle(int start) const {
    if (paired(start)) throw internal_error("boundary anchor is glued");
    std::vector<int> cycle;
    int d = start;
    do {
      cycle.push_back(d);
      d = next_boundary(d);
      if (cycle.size() > alpha_.size()) {
        throw internal_error("boundary walk does not close");
      }
    } while (d != start);
    return cycle;
  }

  // Glue two boundary cycles of equal length; facing cycles run in opposite
  // directions, so index i of p meets index shift-i of q.
  void glue_cycles(const std::vector<int>& p, const std::vector<int>& q,
                   long long shift) {
    if (p.size() != q.size() || p.empty()) {
      throw internal_error("boundary cycles do not match");
    }
    const long long n = static_cast<long long>(p.size());
    for (long long i = 0; i < n; ++i) {
      glue(p[static_cast<size_t>(i)],
           q[static_cast<size_t>(floor_mod(shift - i, n))]);
    }
  }

  // Assemble the closed map: the rotation sends each dart to the partner of
  // its face predecessor.
  CombinatorialMap finish() const {
    CombinatorialMap m;
    m.dart_count = static_cast<int>(alpha_.size());
    m.opposite.resize(alpha_.size());
    m.next_ccw.resize(alpha_.size());
    for (int d = 0; d < m.dart_count; ++d) {
      if (!paired(d)) throw internal_error("unglued boundary remains");
      m.opposite[static_cast<size_t>(d)] = alpha_[static_cast<size_t>(d)];
      m.next_ccw[static_cast<size_t>(d)] =
          alpha_[static_cast<size_t>(pred(d))];
    }
    m.finalize();
    return m;
  }

 private:
  std::vector<int> offset_;
  std::vector<int> size_;
  std::vector<int> face_of_;
  std::vector<int> alpha_;
};

// Triangle, s hexagons, triangle, consecutive faces glued on opposite edges.
// Returns the boundary anchor dart; the boundary has length 4s+4.
int add_spine(PatchBuilder& pb, Int s) {
  const int t0 = pb.add_face(3);
  int open = pb.dart(t0, 0);
  for (Int i = 0; i < s; ++i) {
    const int h = pb.add_face(6);
    pb.glue(open, pb.dart(h, 3));
    open = pb.dart(h, 0);
  }
  const int t1 = pb.add_face(3);
  pb.glue(open, pb.dart(t1, 0));
  return pb.dart(t0, 2);
}

// Closed ring of 2s+2 hexagons glued on opposite edges.  Returns anchors on
// the ring's two boundary cycles, each of length 4s+4.
std::pair<int, int> add_belt(PatchBuilder& pb, Int s) {
  const Int ring = 2 * s + 2;
  std::vector<int> faces;
  faces.reserve(static_cast<size_t>(ring));
  for (Int j = 0; j < ring; ++j) faces.push_back(pb.add_face(6));
  for (Int j = 0; j < ring; ++j) {
    pb.glue(pb.dart(faces[static_cast<size_t>(j)], 0),
            pb.dart(faces[static_cast<size_t>((j + 1) % ring)], 3));
  }
  return {pb.dart(faces[0], 1), pb.dart(faces[0], 4)};
}

CombinatorialMap reverse_orientation_of(const CombinatorialMap& m) {
  CombinatorialMap r;
  r.dart_count = m.dart_count;
  r.opposite = m.opposite;
  r.next_ccw.resize(static_cast<size_t>(m.dart_count));
  for (int d = 0; d < m.dart_count; ++d) {
    r.next_ccw[static_cast<size_t>(m.next_ccw[static_cast<size_t>(d)])] = d;
  }
  r.finalize();
  return r;
}

void check_built(const CombinatorialMap& m, const Signature& sig) {
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
}

}  // namespace

namespace detail {

CombinatorialMap build_by_spines_tuned(const Signature& sig,
                                       const SpineGluing& g) {
  if (sig.vertices() > std::numeric_limits<int>::max() / 3) {
    throw std::invalid_argument("vertex count too large to build");
  }
  PatchBuilder pb;
  const Int n = 4 * sig.s + 4;

  const int anchor1 = add_spine(pb, sig.s);
  std::vector<std::pair<int, int>> belts;
  belts.reserve(static_cast<size_t>(sig.b));
  for (Int k = 0; k < sig.b; ++k) belts.push_back(add_belt(pb, sig.s));
  const int anchor2 = add_spine(pb, sig.s);

  std::vector<int> p = pb.boundary_cycle(anchor1);
  if (static_cast<Int>(p.size()) != n) {
    throw internal_error("spine boundary has wrong length");
  }
  for (Int k = 0; k < sig.b; ++k) {
    auto [facing, away] = belts[static_cast<size_t>(k)];
    if (!g.inner_first) std::swap(facing, away);
    const std::vector<int> q = pb.boundary_cycle(facing);
    if (q.size() != p.size()) {
      throw internal_error("belt boundary has wrong length");
    }
    pb.glue_cycles(p, q, k == 0 ? 1 : 0);
    p = pb.boundary_cycle(away);
  }

  const std::vector<int> q2 = pb.boundary_cycle(anchor2);
  long long shift = 0;
  if (g.use_raw) {
    shift = g.raw_shift;
  } else if (sig.b == 0) {
    shift = g.sign * 2 * sig.f + g.c_closed;
  } else {
    shift = g.sign * 2 * sig.f + g.c_first + g.c_per_belt * (sig.b - 1);
  }
  pb.glue_cycles(p, q2, shift);

  CombinatorialMap m = pb.finish();
  if (g.flip) m = reverse_orientation_of(m);
  check_built(m, sig);
  return m;
}

}  // namespace detail

CombinatorialMap build_by_spines(const Signature& sig) {
  return detail::build_by_spines_tuned(sig, detail::SpineGluing{});
}

}  // namespace trihex
