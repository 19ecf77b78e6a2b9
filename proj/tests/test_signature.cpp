#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "trihex/signature.hpp"

using namespace trihex;

namespace {

Signature sig(Int s, Int b, Int f) { return Signature{s, b, f}; }

std::vector<Signature> members_of(Int s, Int b, Int f) {
  return equivalent_signatures(sig(s, b, f)).members;
}

}  // namespace

TEST_CASE("floor_mod stays in range") {
  CHECK(floor_mod(7, 3) == 1);
  CHECK(floor_mod(-7, 3) == 2);
  CHECK(floor_mod(0, 5) == 0);
  CHECK(floor_mod(-6, 3) == 0);
  CHECK(floor_mod(5, 1) == 0);
}

TEST_CASE("smallest_positive_solution") {
  CHECK(smallest_positive_solution(2, 0, 6) == 3);   // 3*2 = 6 = 0 mod 6
  CHECK(smallest_positive_solution(5, 1, 6) == 5);   // 25 = 1 mod 6
  CHECK(smallest_positive_solution(2, 2, 6) == 1);
  CHECK(smallest_positive_solution(0, 0, 1) == 1);   // trivial modulus
  CHECK(smallest_positive_solution(4, 0, 6) == 3);
  CHECK_THROWS_AS(smallest_positive_solution(2, 1, 4), internal_error);
}

TEST_CASE("signature normalization and counts") {
  CHECK(sig(5, 0, 7) == sig(5, 0, 1));    // offset reduced mod s+1
  CHECK(sig(5, 0, -1) == sig(5, 0, 5));
  CHECK(sig(5, 2, 2).vertices() == 72);
  CHECK(sig(5, 2, 2).hexagons() == 34);
  CHECK(sig(0, 0, 0).vertices() == 4);
  CHECK(sig(0, 0, 0).hexagons() == 0);
  CHECK(counts(sig(4, 1, 2)).vertices == 40);
  CHECK(counts(sig(4, 1, 2)).hexagons == 18);
  CHECK_THROWS_AS(Signature(-1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Signature(0, -2, 0), std::invalid_argument);
}

TEST_CASE("signature ordering follows (belts, offset)") {
  std::vector<Signature> v{sig(5, 2, 2), sig(8, 1, 4), sig(17, 0, 3)};
  std::sort(v.begin(), v.end());
  CHECK(v == std::vector<Signature>{sig(17, 0, 3), sig(8, 1, 4), sig(5, 2, 2)});
}

TEST_CASE("worked class: (5,2,2) = (8,1,4) = (17,0,3)") {
  EquivalenceDerivation d;
  const SignatureClass cls = equivalent_signatures(sig(5, 2, 2), d);
  CHECK(cls.members ==
        std::vector<Signature>{sig(17, 0, 3), sig(8, 1, 4), sig(5, 2, 2)});
  CHECK(cls.canonical == sig(17, 0, 3));
  CHECK(d.h == 34);
  CHECK(d.j2 == 3);
  CHECK(d.p2 == 1);
  CHECK(d.sig2 == sig(8, 1, 4));
  CHECK(d.j3 == 6);
  CHECK(d.p3 == 5);
  CHECK(d.sig3 == sig(17, 0, 3));
}

TEST_CASE("worked class memberships") {
  CHECK(members_of(0, 0, 0) == std::vector<Signature>{sig(0, 0, 0)});
  CHECK(members_of(9, 0, 2) ==
        std::vector<Signature>{sig(9, 0, 2), sig(9, 0, 3), sig(4, 1, 2)});
  CHECK(members_of(9, 0, 4) ==
        std::vector<Signature>{sig(9, 0, 4), sig(4, 1, 0), sig(1, 4, 1)});
  CHECK(members_of(8, 0, 5) ==
        std::vector<Signature>{sig(8, 0, 5), sig(8, 0, 6), sig(2, 2, 1)});
  CHECK(members_of(3, 1, 0) ==
        std::vector<Signature>{sig(3, 1, 0), sig(3, 1, 2), sig(1, 3, 0)});
  CHECK(members_of(4, 0, 1) ==
        std::vector<Signature>{sig(4, 0, 1), sig(4, 0, 2), sig(4, 0, 3)});
  CHECK(members_of(1, 0, 0) ==
        std::vector<Signature>{sig(1, 0, 0), sig(1, 0, 1), sig(0, 1, 0)});
}

TEST_CASE("mirror signature") {
  CHECK(mirror_signature(sig(5, 0, 2)) == sig(5, 0, 3));
  CHECK(mirror_signature(sig(5, 0, 3)) == sig(5, 0, 2));
  CHECK(mirror_signature(sig(0, 0, 0)) == sig(0, 0, 0));
  CHECK(mirror_signature(sig(0, 3, 0)) == sig(0, 3, 0));
  CHECK(mirror_signature(sig(5, 2, 2)) == sig(5, 2, 1));
}

TEST_CASE("chirality and merged classes") {
  const SignatureClass a = equivalent_signatures(sig(5, 0, 2));
  CHECK(a.chiral);
  const SignatureClass b = equivalent_signatures(sig(5, 0, 3));
  CHECK(b.chiral);
  CHECK(a.canonical != b.canonical);

  const SignatureClass m = merged_class(sig(5, 0, 2));
  CHECK(m.members.size() == 6);
  CHECK(m.canonical == sig(5, 0, 2));
  CHECK(merged_class(sig(5, 0, 3)).canonical == m.canonical);

  const SignatureClass t = equivalent_signatures(sig(4, 0, 1));
  CHECK_FALSE(t.chiral);  // (4,0,1),(4,0,2),(4,0,3) is its own mirror
  CHECK(merged_class(sig(4, 0, 1)).members == t.members);
}

TEST_CASE("tightness") {
  CHECK(is_tight(sig(0, 0, 0)));
  CHECK(is_tight(sig(2, 0, 1)));
  CHECK(is_tight(sig(6, 0, 2)));
  CHECK(is_tight(sig(6, 0, 4)));
  CHECK_FALSE(is_tight(sig(5, 0, 2)));  // gcd(2, 6) = 2
  CHECK_FALSE(is_tight(sig(2, 0, 0)));  // f = 0 never tight beyond s = 0
  CHECK_FALSE(is_tight(sig(0, 1, 0)));
  CHECK_FALSE(is_tight(sig(5, 2, 2)));
}

TEST_CASE("text form round trip") {
  CHECK(to_string(sig(5, 2, 2)) == "5,2,2");
  CHECK(parse_signature("5,2,2") == sig(5, 2, 2));
  CHECK(parse_signature("0,0,0") == sig(0, 0, 0));
  CHECK(parse_signature("17,0,3") == sig(17, 0, 3));
  CHECK_THROWS_AS(parse_signature("2,1,5"), std::invalid_argument);  // f > s
  CHECK_THROWS_AS(parse_signature("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_signature("1,2,3,4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_signature("a,b,c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_signature("-1,0,0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_signature("1, 0, 0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_signature(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_signature("1,0,0 "), std::invalid_argument);
}

TEST_CASE("class relation is an equivalence over a sweep") {
  for (Int s = 0; s <= 12; ++s) {
    for (Int b = 0; b <= 4; ++b) {
      for (Int f = 0; f <= s; ++f) {
        const Signature x = sig(s, b, f);
        const SignatureClass cls = equivalent_signatures(x);

        CHECK((cls.members.size() == 1 || cls.members.size() == 3));
        CHECK(std::is_sorted(cls.members.begin(), cls.members.end()));
        CHECK(cls.canonical == cls.members.front());
        CHECK(std::count(cls.members.begin(), cls.members.end(), x) == 1);

        bool all_beltless = true;
        for (const Signature& y : cls.members) {
          CHECK(y.vertices() == x.vertices());
          // every member names the same class
          CHECK(equivalent_signatures(y).members == cls.members);
          all_beltless = all_beltless && y.b == 0;
        }
        CHECK(is_tight(x) == all_beltless);

        // mirroring commutes with the class relation
        const Signature mx = mirror_signature(x);
        CHECK(mirror_signature(mx) == x);
        std::vector<Signature> mirrored;
        for (const Signature& y : cls.members) {
          mirrored.push_back(mirror_signature(y));
        }
        std::sort(mirrored.begin(), mirrored.end());
        const SignatureClass mcls = equivalent_signatures(mx);
        CHECK(mcls.members == mirrored);
        CHECK(cls.chiral == (mcls.canonical != cls.canonical));
        CHECK(cls.chiral == mcls.chiral);

        const SignatureClass merged = merged_class(x);
        CHECK(merged.members.size() ==
              (cls.chiral ? 2 : 1) * cls.members.size());
        CHECK(merged_class(mx).canonical == merged.canonical);
      }
    }
  }
}
