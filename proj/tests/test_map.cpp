#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "trihex/census.hpp"
#include "trihex/map.hpp"

using namespace trihex;

TEST_CASE("quotient of the smallest signature is the tetrahedron") {
  const CombinatorialMap m = build_by_quotient(Signature{0, 0, 0});
  CHECK(m.dart_count == 12);
  CHECK(m.vertex_count == 4);
  CHECK(m.edge_count == 6);
  CHECK(m.face_count == 4);
  for (int v = 0; v < 4; ++v) {
    std::vector<int> nb = m.neighbors(v);
    std::sort(nb.begin(), nb.end());
    std::vector<int> want;
    for (int w = 0; w < 4; ++w)
      if (w != v) want.push_back(w);
    CHECK(nb == want);
  }
  const ValidationReport r = validate(m);
  CHECK(r.pass);
  CHECK(r.triangles == 4);
  CHECK(r.hexagons == 0);
}

TEST_CASE("quotient of the eight-vertex signature") {
  const CombinatorialMap m = build_by_quotient(Signature{1, 0, 0});
  const ValidationReport r = validate(m);
  CHECK(r.pass);
  CHECK(r.vertices == 8);
  CHECK(r.edges == 12);
  CHECK(r.faces == 6);
  CHECK(r.triangles == 4);
  CHECK(r.hexagons == 2);
  CHECK(r.euler_residual == 0);
  CHECK(r.first_failure.empty());

  std::multiset<int> sizes(m.face_size.begin(), m.face_size.end());
  CHECK(sizes == std::multiset<int>{3, 3, 3, 3, 6, 6});
}

TEST_CASE("face traversal agrees with face_size") {
  const CombinatorialMap m = build_by_quotient(Signature{3, 1, 2});
  for (int f = 0; f < m.face_count; ++f) {
    int d = m.face_dart[f];
    int steps = 0;
    do {
      CHECK(m.face_of[d] == f);
      d = m.face_next(d);
      ++steps;
    } while (d != m.face_dart[f]);
    CHECK(steps == m.face_size[f]);
  }
  for (int d = 0; d < m.dart_count; ++d) {
    CHECK(m.next_ccw[m.prev_ccw[d]] == d);
    CHECK(m.prev_ccw[m.next_ccw[d]] == d);
  }
}

TEST_CASE("quotient construction is deterministic") {
  const Signature sig{4, 1, 2};
  CHECK(build_by_quotient(sig) == build_by_quotient(sig));
}

TEST_CASE("quotients validate for every signature up to 32 vertices") {
  for (Int v = 4; v <= 32; v += 4) {
    for (const Signature& sig : signatures_for_vertices(v)) {
      const CombinatorialMap m = build_by_quotient(sig);
      const ValidationReport r = validate(m);
      CHECK_MESSAGE(r.pass, to_string(sig), ": ", r.first_failure);
      CHECK(r.vertices == counts(sig).vertices);
      CHECK(r.hexagons == counts(sig).hexagons);
      CHECK(3 * r.vertices == 2 * r.edges);
    }
  }
}

TEST_CASE("spine assembly of the smallest signature is the tetrahedron") {
  const CombinatorialMap m = build_by_spines(Signature{0, 0, 0});
  const ValidationReport r = validate(m);
  CHECK(r.pass);
  CHECK(r.vertices == 4);
  CHECK(r.triangles == 4);
  CHECK(r.hexagons == 0);
}

TEST_CASE("validate flags a fixed point in the edge pairing") {
  CombinatorialMap m;
  m.dart_count = 6;
  m.opposite = {0, 1, 2, 3, 4, 5};
  m.next_ccw = {1, 2, 0, 4, 5, 3};
  const ValidationReport r = validate(m);
  CHECK_FALSE(r.pass);
  CHECK(r.well_formed);
  CHECK_FALSE(r.involution_ok);
  CHECK(r.first_failure == "involution");
}

TEST_CASE("validate flags non-permutations") {
  CombinatorialMap m;
  m.dart_count = 6;
  m.opposite = {1, 0, 3, 2, 5, 4};
  m.next_ccw = {0, 0, 0, 3, 3, 3};
  const ValidationReport r = validate(m);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.well_formed);
  CHECK(r.first_failure == "well_formed");

  CombinatorialMap empty;
  CHECK_FALSE(validate(empty).pass);

  CombinatorialMap odd;
  odd.dart_count = 3;
  odd.opposite = {1, 0, 2};
  odd.next_ccw = {1, 2, 0};
  CHECK_FALSE(validate(odd).well_formed);
}

TEST_CASE("validate flags wrong vertex degrees") {
  // one edge, both endpoints of degree 1
  CombinatorialMap m;
  m.dart_count = 2;
  m.opposite = {1, 0};
  m.next_ccw = {0, 1};
  const ValidationReport r = validate(m);
  CHECK_FALSE(r.pass);
  CHECK(r.involution_ok);
  CHECK_FALSE(r.three_regular);
  CHECK(r.first_failure == "three_regular");
}

TEST_CASE("validate counts triangles of a disjoint union") {
  const CombinatorialMap k4 = build_by_quotient(Signature{0, 0, 0});
  CombinatorialMap two;
  two.dart_count = 24;
  for (int copy = 0; copy < 2; ++copy) {
    for (int d = 0; d < 12; ++d) {
      two.opposite.push_back(k4.opposite[d] + 12 * copy);
      two.next_ccw.push_back(k4.next_ccw[d] + 12 * copy);
    }
  }
  const ValidationReport r = validate(two);
  CHECK_FALSE(r.pass);
  CHECK(r.triangles == 8);
  CHECK_FALSE(r.four_triangles);
  CHECK(r.first_failure == "four_triangles");
}

TEST_CASE("both constructions refuse an oversized signature") {
  CHECK_THROWS_AS(build_by_quotient(Signature{1'000'000'000, 2, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_by_spines(Signature{1'000'000'000, 2, 0}),
                  std::invalid_argument);
}
