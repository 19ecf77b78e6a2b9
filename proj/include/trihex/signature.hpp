#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace trihex {

using Int = long long;

// Raised when a computation violates an invariant the construction itself is
// supposed to guarantee (non-integral belt count, unsolvable congruence,
// orbit counts that disagree with the closed formulas, ...).  Anything of
// this kind is a bug, never bad user input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Floor modulus: result always in [0, m).  m must be positive.
Int floor_mod(Int a, Int m);

// Smallest p >= 1 with p*a == c (mod m).  Solved by extended Euclid; throws
// internal_error when no solution exists.  For m == 1 every p works and the
// answer is 1.
Int smallest_positive_solution(Int a, Int c, Int m);

// A trihex signature (s, b, f): spine length s, number of belts b, and the
// gluing offset f with 0 <= f <= s.  Constructors normalize f into [0, s]
// by reducing mod s+1, so arithmetic that lands outside the window (mirror
// images, derived offsets) stays canonical.
struct Signature {
  Int s = 0;
  Int b = 0;
  Int f = 0;

  Signature() = default;
  Signature(Int s_, Int b_, Int f_);

  Int vertices() const { return 4 * (s + 1) * (b + 1); }
  Int hexagons() const { return 2 * (s + 1) * (b + 1) - 2; }

  friend bool operator==(const Signature&, const Signature&) = default;
  // Table order: smaller belt count first, then smaller offset.  Within one
  // vertex count b determines s, so this is a total order there; s breaks
  // ties across vertex counts.
  friend auto operator<=>(const Signature& x, const Signature& y) {
    return std::tie(x.b, x.f, x.s) <=> std::tie(y.b, y.f, y.s);
  }
};

struct Counts {
  Int hexagons = 0;
  Int vertices = 0;
};

// Face and vertex counts forced by the signature: h = 2(s+1)(b+1)-2 and
// v = 4(s+1)(b+1).
Counts counts(const Signature& sig);

// Intermediate values of the two re-slicing derivations, exposed for
// diagnostics (CLI --verbose) and tests.
struct EquivalenceDerivation {
  Int h = 0;            // hexagon count, preserved by both derivations
  Int j2 = 0, p2 = 0;   // SW->NE re-slicing
  Int j3 = 0, p3 = 0;   // NW->SE re-slicing
  Signature sig2, sig3;
};

// An equivalence class of signatures.  members is sorted (belt count, then
// offset) and has size 1 or 3 for plain classes, 1, 3 or 6 for merged ones;
// canonical is members.front().  chiral says whether the mirror class is a
// distinct class.
struct SignatureClass {
  std::vector<Signature> members;
  Signature canonical;
  bool chiral = false;
};

// The up-to-three signatures describing the same trihex, obtained by
// re-slicing the quotient along the two diagonal directions.
SignatureClass equivalent_signatures(const Signature& sig);
SignatureClass equivalent_signatures(const Signature& sig,
                                     EquivalenceDerivation& derivation);

// Signature of the mirror image: (s, b, (s - f - b) mod (s+1)).
Signature mirror_signature(const Signature& sig);

// Union of the class of sig and the class of its mirror.  The two are
// either identical (achiral, 1 or 3 members) or disjoint (chiral, 2 or 6).
SignatureClass merged_class(const Signature& sig);

// Tight = no belts in any description: b == 0 and f, f+1 both coprime to
// s+1.  Equivalently all three class members have b == 0.
bool is_tight(const Signature& sig);

// Text form "s,b,f" (no spaces).
std::string to_string(const Signature& sig);

// Strict parse of "s,b,f": three base-10 integers, no spaces; rejects
// negative s or b and offsets outside [0, s] with std::invalid_argument.
Signature parse_signature(const std::string& text);

}  // namespace trihex
