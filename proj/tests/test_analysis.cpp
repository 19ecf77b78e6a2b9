#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "trihex/analysis.hpp"
#include "trihex/census.hpp"
#include "trihex/map.hpp"

using namespace trihex;

namespace {

CombinatorialMap built(Int s, Int b, Int f) {
  return build_by_quotient(Signature{s, b, f});
}

std::multiset<int> spine_lengths(const CombinatorialMap& m) {
  std::multiset<int> lens;
  for (const SpinePath& p : find_spines(m)) lens.insert(p.length());
  return lens;
}

std::multiset<int> belt_lengths(const CombinatorialMap& m) {
  std::multiset<int> lens;
  for (const Belt& b : find_belts(m)) lens.insert(b.length());
  return lens;
}

}  // namespace

TEST_CASE("tight maps have no belts") {
  CHECK(find_belts(built(0, 0, 0)).empty());
  CHECK(find_belts(built(2, 0, 1)).empty());
  CHECK(find_belts(built(6, 0, 2)).empty());
}

TEST_CASE("belts of small loose maps") {
  const std::vector<Belt> one = find_belts(built(0, 1, 0));
  REQUIRE(one.size() == 1);
  CHECK(one[0].length() == 2);

  // class (5,0,2) = (2,1,0) = (1,2,1): one decomposition with a single
  // 6-ring and one with two 4-rings
  CHECK(belt_lengths(built(5, 0, 2)) == std::multiset<int>{4, 4, 6});
  CHECK(belt_lengths(built(0, 3, 0)) == std::multiset<int>{2, 2, 2});
}

TEST_CASE("belt structure invariants") {
  for (const Signature sig :
       {Signature{0, 1, 0}, Signature{5, 0, 2}, Signature{5, 2, 2},
        Signature{0, 3, 0}, Signature{3, 1, 2}}) {
    const CombinatorialMap m = build_by_quotient(sig);
    const std::vector<Belt> belts = find_belts(m);
    CHECK(std::is_sorted(belts.begin(), belts.end()));
    for (const Belt& b : belts) {
      REQUIRE(b.length() >= 2);
      std::set<int> uniq(b.faces.begin(), b.faces.end());
      CHECK(uniq.size() == b.faces.size());  // faces distinct
      for (int f : b.faces) CHECK(m.face_size[f] == 6);
    }
    std::set<Belt> uniq(belts.begin(), belts.end());
    CHECK(uniq.size() == belts.size());
  }
}

TEST_CASE("spines of the tetrahedron join every triangle pair directly") {
  const CombinatorialMap m = built(0, 0, 0);
  const std::vector<SpinePath> spines = find_spines(m);
  REQUIRE(spines.size() == 6);
  std::set<std::pair<int, int>> pairs;
  for (const SpinePath& p : spines) {
    CHECK(p.length() == 0);
    pairs.insert({std::min(p.source, p.target), std::max(p.source, p.target)});
  }
  CHECK(pairs.size() == 6);  // all pairs of the four triangles
}

TEST_CASE("spine lengths come from the signature class") {
  CHECK(spine_lengths(built(5, 2, 2)) == std::multiset<int>{5, 5, 8, 8, 17, 17});
  CHECK(spine_lengths(built(6, 0, 2)) == std::multiset<int>{6, 6, 6, 6, 6, 6});
  CHECK(spine_lengths(built(9, 0, 2)) == std::multiset<int>{4, 4, 9, 9, 9, 9});
  CHECK(spine_lengths(built(1, 0, 0)) == std::multiset<int>{0, 0, 1, 1, 1, 1});
}

TEST_CASE("every map has six spines, three ends per triangle") {
  for (const Signature sig :
       {Signature{2, 0, 1}, Signature{5, 0, 2}, Signature{3, 1, 0},
        Signature{0, 3, 0}, Signature{5, 2, 2}}) {
    const CombinatorialMap m = build_by_quotient(sig);
    const std::vector<SpinePath> spines = find_spines(m);
    CHECK(spines.size() == 6);
    std::map<int, int> ends;
    for (const SpinePath& p : spines) {
      ++ends[p.source];
      ++ends[p.target];
      for (int h : p.hexagons) CHECK(m.face_size[h] == 6);
      CHECK(m.face_size[p.source] == 3);
      CHECK(m.face_size[p.target] == 3);
    }
    CHECK(ends.size() == 4);
    for (auto [t, n] : ends) CHECK(n == 3);
  }
}

TEST_CASE("curvature graph of tight maps is complete") {
  CHECK(curvature_graph(built(2, 0, 1)).complete());
  CHECK(curvature_graph(built(6, 0, 4)).complete());
  CHECK(curvature_graph(built(6, 0, 2)).complete());
  CHECK(curvature_graph(built(0, 0, 0)).complete());
}

TEST_CASE("curvature graph invariants on a loose map") {
  const CombinatorialMap m = built(0, 2, 0);
  const CurvatureGraph g = curvature_graph(m);
  CHECK(std::is_sorted(g.triangles.begin(), g.triangles.end()));
  for (int t : g.triangles) CHECK(m.face_size[t] == 3);

  int present = 0;
  for (int i = 0; i < 4; ++i) {
    CHECK_FALSE(g.adjacent[i][i]);
    CHECK(g.road_count[i][i] == 0);
    for (int j = 0; j < 4; ++j) {
      CHECK(g.adjacent[i][j] == g.adjacent[j][i]);
      CHECK(g.road_count[i][j] == g.road_count[j][i]);
      CHECK(g.adjacent[i][j] == (g.road_count[i][j] > 0));
      if (i < j && g.adjacent[i][j]) ++present;
    }
  }
  CHECK(static_cast<int>(g.witnesses.size()) == present);
  for (const PseudoRoad& r : g.witnesses) {
    CHECK(r.source != r.target);
    std::set<int> uniq(r.hexagons.begin(), r.hexagons.end());
    CHECK(uniq.size() == r.hexagons.size());
    CHECK(std::count(g.triangles.begin(), g.triangles.end(), r.source) == 1);
    CHECK(std::count(g.triangles.begin(), g.triangles.end(), r.target) == 1);
  }
}

TEST_CASE("isomorphism relations between built maps") {
  CHECK(is_isomorphic(built(5, 2, 2), built(8, 1, 4)) ==
        IsoRelation::orientation_preserving);
  CHECK(is_isomorphic(built(5, 2, 2), built(17, 0, 3)) ==
        IsoRelation::orientation_preserving);
  CHECK(is_isomorphic(built(5, 0, 2), built(5, 0, 3)) ==
        IsoRelation::mirror_only);
  CHECK(is_isomorphic(built(2, 0, 0), built(2, 0, 1)) == IsoRelation::none);
  CHECK(is_isomorphic(built(0, 0, 0), built(1, 0, 0)) == IsoRelation::none);

  const CombinatorialMap m = built(4, 1, 2);
  CHECK(is_isomorphic(m, m) == IsoRelation::orientation_preserving);
  CHECK(canonical_form(built(5, 2, 2)) == canonical_form(built(8, 1, 4)));
}

TEST_CASE("reversing orientation mirrors the map") {
  const CombinatorialMap chiral = built(5, 0, 2);
  const CombinatorialMap reversed = reversed_orientation(chiral);
  CHECK(validate(reversed).pass);
  CHECK(is_isomorphic(chiral, reversed) == IsoRelation::mirror_only);
  CHECK(is_isomorphic(reversed, built(5, 0, 3)) ==
        IsoRelation::orientation_preserving);
  CHECK(is_isomorphic(reversed_orientation(reversed), chiral) ==
        IsoRelation::orientation_preserving);

  const CombinatorialMap k4 = built(0, 0, 0);
  CHECK(is_isomorphic(k4, reversed_orientation(k4)) ==
        IsoRelation::orientation_preserving);
}

TEST_CASE("connectivity grades") {
  CHECK(connectivity_grade(built(0, 0, 0)) ==
        ConnectivityGrade::three_connected);
  CHECK(connectivity_grade(built(3, 1, 2)) ==
        ConnectivityGrade::three_connected);
  CHECK(connectivity_grade(built(2, 0, 1)) ==
        ConnectivityGrade::three_connected);
  CHECK(connectivity_grade(built(0, 3, 0)) == ConnectivityGrade::two_connected);
  CHECK(connectivity_grade(built(0, 1, 0)) == ConnectivityGrade::two_connected);
  CHECK(connectivity_grade(built(1, 0, 0)) ==
        ConnectivityGrade::two_connected);  // same map as (0,1,0)
}

TEST_CASE("identify recovers the class of a built map") {
  const Identification a = identify_signature(built(4, 1, 2));
  CHECK(a.cls.canonical == Signature{9, 0, 2});
  CHECK(a.chirality == Chirality::as_built);

  const Identification b = identify_signature(build_by_spines(Signature{0, 0, 0}));
  CHECK(b.cls.members == std::vector<Signature>{Signature{0, 0, 0}});
  CHECK(b.chirality == Chirality::as_built);

  const Identification c =
      identify_signature(reversed_orientation(built(5, 0, 2)));
  CHECK(c.cls.canonical == Signature{5, 0, 3});

  for (Int v = 4; v <= 16; v += 4) {
    for (const Signature& sig : signatures_for_vertices(v)) {
      const Identification id = identify_signature(build_by_quotient(sig));
      CHECK(id.cls.canonical == equivalent_signatures(sig).canonical);
      CHECK(id.chirality == Chirality::as_built);
    }
  }
}
