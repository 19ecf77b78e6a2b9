#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trihex/analysis.hpp"
#include "trihex/census.hpp"

namespace trihex {

namespace {

// Undirected edge label: the smaller dart of the pair.
int edge_id(const CombinatorialMap& m, int d) {
  return std::min(d, m.opposite[d]);
}

// Dart three face steps along; on a hexagon this lies on the opposite edge.
int across_face(const CombinatorialMap& m, int d) {
  int e = d;
  for (int i = 0; i < 3; ++i) e = m.face_next(e);
  return e;
}

struct StraightTrace {
  int source = -1;             // triangle the trace starts at
  int target = -1;             // triangle it ends at, when it ends
  std::vector<int> hexagons;   // faces crossed, in order
  std::vector<int> edges;      // edges crossed, in order
  bool finished = false;
};

// Follow the straight trace leaving the triangle of dart t through t's edge:
// every hexagon is left through the edge opposite the entering one.  Stops on
// reaching a triangle; a safety cap covers traces that never do.
StraightTrace trace_from(const CombinatorialMap& m, int t) {
  StraightTrace tr;
  tr.source = m.face_of[static_cast<size_t>(t)];
  tr.edges.push_back(edge_id(m, t));
  int d = m.opposite[static_cast<size_t>(t)];
  for (int guard = 0; guard <= m.face_count; ++guard) {
    const int f = m.face_of[static_cast<size_t>(d)];
    if (m.face_size[static_cast<size_t>(f)] == 3) {
      tr.target = f;
      tr.finished = true;
      return tr;
    }
    tr.hexagons.push_back(f);
    const int exit = across_face(m, d);
    tr.edges.push_back(edge_id(m, exit));
    d = m.opposite[static_cast<size_t>(exit)];
  }
  return tr;
}

// Every finished straight trace, one representative per undirected chain,
// oriented so the crossed-edge sequence is lexicographically least.
std::vector<SpinePath> undirected_traces(const CombinatorialMap& m) {
  std::vector<SpinePath> out;
  std::set<std::vector<int>> seen;
  for (int d = 0; d < m.dart_count; ++d) {
    if (m.face_size[static_cast<size_t>(m.face_of[static_cast<size_t>(d)])] !=
        3) {
      continue;
    }
    StraightTrace tr = trace_from(m, d);
    if (!tr.finished) continue;
    std::vector<int> reversed(tr.edges.rbegin(), tr.edges.rend());
    const bool keep_forward = tr.edges <= reversed;
    if (!seen.insert(keep_forward ? tr.edges : reversed).second) continue;
    SpinePath p;
    p.source = tr.source;
    p.target = tr.target;
    p.hexagons = tr.hexagons;
    if (!keep_forward) {
      std::swap(p.source, p.target);
      std::reverse(p.hexagons.begin(), p.hexagons.end());
    }
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const SpinePath& a, const SpinePath& b) {
    return std::tie(a.source, a.target, a.hexagons) <
           std::tie(b.source, b.target, b.hexagons);
  });
  return out;
}

// Lexicographically least rotation of the cycle or of its reversal.
std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
  std::vector<int> best;
  std::vector<int> work = cycle;
  for (int pass = 0; pass < 2; ++pass) {
    for (size_t shift = 0; shift < work.size(); ++shift) {
      std::vector<int> rot(work.begin() + static_cast<long>(shift),
                           work.end());
      rot.insert(rot.end(), work.begin(),
                 work.begin() + static_cast<long>(shift));
      if (best.empty() || rot < best) best = std::move(rot);
    }
    std::reverse(work.begin(), work.end());
  }
  return best;
}

}  // namespace

bool CurvatureGraph::complete() const {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j && !adjacent[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Belt> find_belts(const CombinatorialMap& m) {
  std::set<std::vector<int>> canon;
  for (int d0 = 0; d0 < m.dart_count; ++d0) {
    if (m.face_size[static_cast<size_t>(
            m.face_of[static_cast<size_t>(d0)])] != 6) {
      continue;
    }
    std::vector<int> faces;
    int d = d0;
    bool closed = false;
    while (static_cast<int>(faces.size()) <= m.face_count) {
      const int f = m.face_of[static_cast<size_t>(d)];
      if (m.face_size[static_cast<size_t>(f)] != 6) break;  // ran into a triangle
      if (std::find(faces.begin(), faces.end(), f) != faces.end()) break;
      faces.push_back(f);
      d = m.opposite[static_cast<size_t>(across_face(m, d))];
      if (d == d0) {
        closed = true;
        break;
      }
    }
    if (closed && faces.size() >= 2) canon.insert(canonical_cycle(faces));
  }
  std::vector<Belt> out;
  out.reserve(canon.size());
  for (const std::vector<int>& faces : canon) out.push_back(Belt{faces});
  return out;
}

std::vector<SpinePath> find_spines(const CombinatorialMap& m) {
  return undirected_traces(m);
}

CurvatureGraph curvature_graph(const CombinatorialMap& m) {
  CurvatureGraph g;
  std::vector<int> tris;
  for (int f = 0; f < m.face_count; ++f) {
    if (m.face_size[static_cast<size_t>(f)] == 3) tris.push_back(f);
  }
  if (tris.size() != 4) throw internal_error("map does not have four triangles");
  std::copy(tris.begin(), tris.end(), g.triangles.begin());

  auto node = [&g](int face) {
    for (int i = 0; i < 4; ++i) {
      if (g.triangles[static_cast<size_t>(i)] == face) return i;
    }
    throw internal_error("trace endpoint is not a triangle");
  };

  std::map<std::pair<int, int>, PseudoRoad> best;
  for (const SpinePath& p : undirected_traces(m)) {
    if (p.source == p.target) continue;  // loops never enter the graph
    std::vector<int> sorted_hexes = p.hexagons;
    std::sort(sorted_hexes.begin(), sorted_hexes.end());
    if (std::adjacent_find(sorted_hexes.begin(), sorted_hexes.end()) !=
        sorted_hexes.end()) {
      continue;  // a road's hexagons must be distinct
    }
    const int i = node(p.source);
    const int j = node(p.target);
    g.adjacent[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
    g.adjacent[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
    ++g.road_count[static_cast<size_t>(i)][static_cast<size_t>(j)];
    ++g.road_count[static_cast<size_t>(j)][static_cast<size_t>(i)];
    auto shorter = [](const PseudoRoad& a, const PseudoRoad& b) {
      return std::tuple(a.hexagons.size(), a.hexagons, a.source) <
             std::tuple(b.hexagons.size(), b.hexagons, b.source);
    };
    const auto key = std::minmax(i, j);
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(key, p);
    } else if (shorter(p, it->second)) {
      it->second = p;
    }
  }
  for (auto& [key, road] : best) g.witnesses.push_back(road);
  return g;
}

std::vector<int> canonical_form(const CombinatorialMap& m) {
  const int n = m.dart_count;
  std::vector<int> best;
  std::vector<int> index(static_cast<size_t>(n));
  std::vector<int> order;
  order.reserve(static_cast<size_t>(n));
  std::vector<int> encoding;
  encoding.reserve(2 * static_cast<size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(index.begin(), index.end(), -1);
    order.clear();
    encoding.clear();
    index[static_cast<size_t>(root)] = 0;
    order.push_back(root);
    for (size_t head = 0; head < order.size(); ++head) {
      const int d = order[head];
      for (const int e : {m.next_ccw[static_cast<size_t>(d)],
                          m.opposite[static_cast<size_t>(d)]}) {
        if (index[static_cast<size_t>(e)] < 0) {
          index[static_cast<size_t>(e)] = static_cast<int>(order.size());
          order.push_back(e);
        }
      }
    }
    if (static_cast<int>(order.size()) != n) {
      throw internal_error("map is not connected");
    }
    for (const int d : order) {
      encoding.push_back(index[static_cast<size_t>(m.next_ccw[static_cast<size_t>(d)])]);
      encoding.push_back(index[static_cast<size_t>(m.opposite[static_cast<size_t>(d)])]);
    }
    if (best.empty() || encoding < best) best = encoding;
  }
  return best;
}

CombinatorialMap reversed_orientation(const CombinatorialMap& m) {
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

IsoRelation is_isomorphic(const CombinatorialMap& m1,
                          const CombinatorialMap& m2) {
  if (m1.dart_count != m2.dart_count) return IsoRelation::none;
  const std::vector<int> c1 = canonical_form(m1);
  if (c1 == canonical_form(m2)) return IsoRelation::orientation_preserving;
  if (c1 == canonical_form(reversed_orientation(m2))) {
    return IsoRelation::mirror_only;
  }
  return IsoRelation::none;
}

ConnectivityGrade connectivity_grade(const CombinatorialMap& m) {
  const int n = m.vertex_count;
  std::vector<std::vector<int>> adj;
  adj.reserve(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) adj.push_back(m.neighbors(v));

  std::vector<int> stack;
  std::vector<char> seen(static_cast<size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      std::fill(seen.begin(), seen.end(), 0);
      seen[static_cast<size_t>(u)] = 1;
      seen[static_cast<size_t>(w)] = 1;
      int start = -1;
      for (int x = 0; x < n; ++x) {
        if (!seen[static_cast<size_t>(x)]) {
          start = x;
          break;
        }
      }
      if (start < 0) continue;
      stack.assign(1, start);
      seen[static_cast<size_t>(start)] = 1;
      int reached = 1;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (const int y : adj[static_cast<size_t>(x)]) {
          if (!seen[static_cast<size_t>(y)]) {
            seen[static_cast<size_t>(y)] = 1;
            ++reached;
            stack.push_back(y);
          }
        }
      }
      if (reached != n - 2) return ConnectivityGrade::two_connected;
    }
  }
  return ConnectivityGrade::three_connected;
}

Identification identify_signature(const CombinatorialMap& m) {
  const Int v = m.vertex_count;
  std::map<Signature, SignatureClass> classes;
  for (const Signature& sig : signatures_for_vertices(v)) {
    SignatureClass cls = equivalent_signatures(sig);
    classes.emplace(cls.canonical, std::move(cls));
  }

  const std::vector<int> own = canonical_form(m);
  const std::vector<int> mirrored = canonical_form(reversed_orientation(m));

  const SignatureClass* op_match = nullptr;
  const SignatureClass* mirror_match = nullptr;
  for (const auto& [canon, cls] : classes) {
    const std::vector<int> built = canonical_form(build_by_quotient(canon));
    if (built == own) {
      if (op_match != nullptr) {
        throw internal_error("multiple signature classes match the map");
      }
      op_match = &cls;
    } else if (built == mirrored) {
      if (mirror_match != nullptr) {
        throw internal_error("multiple signature classes mirror the map");
      }
      mirror_match = &cls;
    }
  }
  if (op_match != nullptr) return {*op_match, Chirality::as_built};
  if (mirror_match != nullptr) return {*mirror_match, Chirality::mirrored};
  throw internal_error("no signature class matches the map");
}

}  // namespace trihex
