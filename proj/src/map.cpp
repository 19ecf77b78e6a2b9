#include "trihex/map.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace trihex {

namespace {

bool is_permutation_of_darts(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : p) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

// Partitions darts into orbits of `step`, assigning ids in order of each
// orbit's smallest dart.  Returns orbit count.
int partition(const std::vector<int>& step, std::vector<int>& id,
              std::vector<int>& first_dart, std::vector<int>& size) {
  int n = static_cast<int>(step.size());
  id.assign(n, -1);
  first_dart.clear();
  size.clear();
  int next = 0;
  for (int d = 0; d < n; ++d) {
    if (id[d] >= 0) continue;
    first_dart.push_back(d);
    size.push_back(0);
    for (int e = d; id[e] < 0; e = step[e]) {
      id[e] = next;
      ++size[next];
    }
    ++next;
  }
  return next;
}

}  // namespace

void CombinatorialMap::finalize() {
  if (!is_permutation_of_darts(opposite, dart_count) ||
      !is_permutation_of_darts(next_ccw, dart_count))
    throw internal_error("map: opposite/next_ccw are not dart permutations");
  prev_ccw.assign(dart_count, 0);
  for (int d = 0; d < dart_count; ++d) prev_ccw[next_ccw[d]] = d;

  std::vector<int> vertex_degree;
  vertex_count = partition(next_ccw, vertex_of, vertex_dart, vertex_degree);

  std::vector<int> face_step(dart_count);
  for (int d = 0; d < dart_count; ++d) face_step[d] = prev_ccw[opposite[d]];
  face_count = partition(face_step, face_of, face_dart, face_size);
  edge_count = dart_count / 2;
}

std::vector<int> CombinatorialMap::neighbors(int v) const {
  std::vector<int> out;
  int d0 = vertex_dart[v];
  int d = d0;
  do {
    out.push_back(vertex_of[opposite[d]]);
    d = next_ccw[d];
  } while (d != d0);
  return out;
}

namespace {

// Underlying-graph connectivity with up to two vertices removed.
bool connected_without(const std::vector<std::vector<int>>& adj, int skip1,
                       int skip2) {
  int n = static_cast<int>(adj.size());
  std::vector<char> seen(n, 0);
  if (skip1 >= 0) seen[skip1] = 1;
  if (skip2 >= 0) seen[skip2] = 1;
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (!seen[v]) {
      start = v;
      break;
    }
  if (start < 0) return true;
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  int alive = n - (skip1 >= 0 ? 1 : 0) - (skip2 >= 0 ? 1 : 0);
  return reached == alive;
}

}  // namespace

ValidationReport validate(const CombinatorialMap& m) {
  ValidationReport r;
  auto fail = [&r](const char* what) {
    if (r.first_failure.empty()) r.first_failure = what;
    return r;
  };

  r.well_formed = m.dart_count > 0 && m.dart_count % 2 == 0 &&
                  is_permutation_of_darts(m.opposite, m.dart_count) &&
                  is_permutation_of_darts(m.next_ccw, m.dart_count);
  if (!r.well_formed) return fail("well_formed");

  r.involution_ok = true;
  for (int d = 0; d < m.dart_count; ++d)
    if (m.opposite[d] == d || m.opposite[m.opposite[d]] != d) {
      r.involution_ok = false;
      break;
    }
  if (!r.involution_ok) return fail("involution");

  // Work on a finalized copy so the input itself can stay raw.
  CombinatorialMap w;
  w.dart_count = m.dart_count;
  w.opposite = m.opposite;
  w.next_ccw = m.next_ccw;
  w.finalize();
  r.vertices = w.vertex_count;
  r.edges = w.edge_count;
  r.faces = w.face_count;
  for (int f = 0; f < w.face_count; ++f) {
    if (w.face_size[f] == 3) ++r.triangles;
    if (w.face_size[f] == 6) ++r.hexagons;
  }
  r.euler_residual = static_cast<Int>(r.vertices) - r.edges + r.faces - 2;

  r.three_regular = true;
  std::vector<int> orbit_size(w.vertex_count, 0);
  for (int d = 0; d < w.dart_count; ++d) ++orbit_size[w.vertex_of[d]];
  for (int sz : orbit_size)
    if (sz != 3) {
      r.three_regular = false;
      break;
    }
  if (!r.three_regular) return fail("three_regular");

  r.face_sizes_ok = r.triangles + r.hexagons == r.faces;
  if (!r.face_sizes_ok) return fail("face_sizes");

  r.four_triangles = r.triangles == 4;
  if (!r.four_triangles) return fail("four_triangles");

  // Connectivity over darts via rotation + involution moves.
  {
    std::vector<char> seen(w.dart_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int d = stack.back();
      stack.pop_back();
      for (int e : {w.next_ccw[d], w.opposite[d]})
        if (!seen[e]) {
          seen[e] = 1;
          ++reached;
          stack.push_back(e);
        }
    }
    r.connected = reached == w.dart_count;
  }
  if (!r.connected) return fail("connected");

  r.simple = true;
  {
    std::map<std::pair<int, int>, int> edge_multiplicity;
    for (int d = 0; d < w.dart_count; ++d) {
      if (d > w.opposite[d]) continue;
      int a = w.vertex_of[d], b = w.vertex_of[w.opposite[d]];
      if (a == b) {
        r.simple = false;  // loop
        break;
      }
      if (++edge_multiplicity[{std::min(a, b), std::max(a, b)}] > 1) {
        r.simple = false;  // parallel edge
        break;
      }
    }
  }
  if (!r.simple) return fail("simple");

  r.euler_ok = r.euler_residual == 0;
  if (!r.euler_ok) return fail("euler");

  {
    std::vector<std::vector<int>> adj(w.vertex_count);
    for (int v = 0; v < w.vertex_count; ++v) adj[v] = w.neighbors(v);
    r.two_connected = w.vertex_count >= 3;
    for (int v = 0; v < w.vertex_count && r.two_connected; ++v)
      if (!connected_without(adj, v, -1)) r.two_connected = false;
  }
  if (!r.two_connected) return fail("two_connected");

  r.pass = true;
  return r;
}

}  // namespace trihex
