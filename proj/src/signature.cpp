#include "trihex/signature.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace trihex {

Int floor_mod(Int a, Int m) {
  if (m <= 0) throw internal_error("floor_mod: modulus must be positive");
  Int r = a % m;
  return r < 0 ? r + m : r;
}

namespace {

// Extended Euclid: returns gcd(a, b) and x, y with a*x + b*y == gcd.
Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  Int x1 = 0, y1 = 0;
  Int g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

Int mod_inverse(Int a, Int m) {
  if (m == 1) return 0;
  Int x = 0, y = 0;
  Int g = ext_gcd(floor_mod(a, m), m, x, y);
  if (g != 1) throw internal_error("mod_inverse: arguments not coprime");
  return floor_mod(x, m);
}

}  // namespace

Int smallest_positive_solution(Int a, Int c, Int m) {
  if (m <= 0) throw internal_error("smallest_positive_solution: bad modulus");
  a = floor_mod(a, m);
  c = floor_mod(c, m);
  if (m == 1) return 1;
  Int g = std::gcd(a, m);
  if (g == 0) g = m;  // a == 0
  if (c % g != 0)
    throw internal_error("smallest_positive_solution: congruence unsolvable");
  Int m1 = m / g;
  Int p0 = floor_mod((c / g) % m1 * mod_inverse((a / g) % m1, m1), m1);
  return p0 == 0 ? m1 : p0;
}

Signature::Signature(Int s_, Int b_, Int f_) : s(s_), b(b_) {
  if (s_ < 0 || b_ < 0)
    throw std::invalid_argument("signature: s and b must be nonnegative");
  f = floor_mod(f_, s_ + 1);
}

Counts counts(const Signature& sig) {
  return Counts{sig.hexagons(), sig.vertices()};
}

namespace {

// The raw member set {sig, sig2, sig3}, sorted and deduplicated, without
// the chirality flag (computing that needs the mirror's member set, and
// doing it here would recurse).
std::vector<Signature> class_members(const Signature& sig,
                                     EquivalenceDerivation* out) {
  const Int m = sig.s + 1;
  const Int h = sig.hexagons();

  // SW->NE re-slicing.
  Int j2 = smallest_positive_solution(sig.f, 0, m);
  Int s2 = j2 * (sig.b + 1) - 1;
  Int num = h - 2 * s2;
  Int den = 2 * s2 + 2;
  if (num < 0 || num % den != 0)
    throw internal_error("equivalent_signatures: non-integral belt count b2");
  Int b2 = num / den;
  Int p2 = smallest_positive_solution(sig.f, floor_mod(b2 + 1, m), m);
  Signature sig2(s2, b2, s2 - p2 * (sig.b + 1) - b2);

  // NW->SE re-slicing.
  Int a3 = floor_mod(sig.f + sig.b + 1, m);
  Int j3 = smallest_positive_solution(a3, 0, m);
  Int s3 = j3 * (sig.b + 1) - 1;
  num = h - 2 * s3;
  den = 2 * s3 + 2;
  if (num < 0 || num % den != 0)
    throw internal_error("equivalent_signatures: non-integral belt count b3");
  Int b3 = num / den;
  Int p3 = smallest_positive_solution(a3, floor_mod(b3 + 1, m), m);
  Signature sig3(s3, b3, s3 + 1 - p3 * (sig.b + 1));

  if (out) {
    out->h = h;
    out->j2 = j2;
    out->p2 = p2;
    out->j3 = j3;
    out->p3 = p3;
    out->sig2 = sig2;
    out->sig3 = sig3;
  }

  std::vector<Signature> members{sig, sig2, sig3};
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.size() == 2)
    throw internal_error("equivalent_signatures: class of size 2");
  for (const Signature& x : members)
    if (x.vertices() != sig.vertices())
      throw internal_error("equivalent_signatures: vertex count not preserved");
  return members;
}

bool same_members(const std::vector<Signature>& a,
                  const std::vector<Signature>& b) {
  return a == b;  // both sorted and unique
}

bool intersects(const std::vector<Signature>& a,
                const std::vector<Signature>& b) {
  for (const Signature& x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  return false;
}

}  // namespace

SignatureClass equivalent_signatures(const Signature& sig,
                                     EquivalenceDerivation& derivation) {
  SignatureClass cls;
  cls.members = class_members(sig, &derivation);
  cls.canonical = cls.members.front();
  std::vector<Signature> mirror = class_members(mirror_signature(sig), nullptr);
  if (same_members(cls.members, mirror)) {
    cls.chiral = false;
  } else if (!intersects(cls.members, mirror)) {
    cls.chiral = true;
  } else {
    throw internal_error("equivalent_signatures: class and mirror class overlap partially");
  }
  return cls;
}

SignatureClass equivalent_signatures(const Signature& sig) {
  EquivalenceDerivation scratch;
  return equivalent_signatures(sig, scratch);
}

Signature mirror_signature(const Signature& sig) {
  return Signature(sig.s, sig.b, sig.s - sig.f - sig.b);
}

SignatureClass merged_class(const Signature& sig) {
  std::vector<Signature> own = class_members(sig, nullptr);
  std::vector<Signature> mirror = class_members(mirror_signature(sig), nullptr);
  SignatureClass cls;
  cls.chiral = !same_members(own, mirror);
  if (cls.chiral && intersects(own, mirror))
    throw internal_error("merged_class: class and mirror class overlap partially");
  cls.members = own;
  cls.members.insert(cls.members.end(), mirror.begin(), mirror.end());
  std::sort(cls.members.begin(), cls.members.end());
  cls.members.erase(std::unique(cls.members.begin(), cls.members.end()),
                    cls.members.end());
  cls.canonical = cls.members.front();
  return cls;
}

bool is_tight(const Signature& sig) {
  return sig.b == 0 && std::gcd(sig.f, sig.s + 1) == 1 &&
         std::gcd(sig.f + 1, sig.s + 1) == 1;
}

std::string to_string(const Signature& sig) {
  return std::to_string(sig.s) + "," + std::to_string(sig.b) + "," +
         std::to_string(sig.f);
}

Signature parse_signature(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  if (parts.size() != 3)
    throw std::invalid_argument("signature: expected \"s,b,f\"");
  Int value[3];
  for (int i = 0; i < 3; ++i) {
    const std::string& p = parts[i];
    if (p.empty()) throw std::invalid_argument("signature: empty component");
    for (size_t k = 0; k < p.size(); ++k)
      if (!(std::isdigit(static_cast<unsigned char>(p[k])) ||
            (k == 0 && p[k] == '-')))
        throw std::invalid_argument("signature: malformed integer \"" + p + "\"");
    try {
      value[i] = std::stoll(p);
    } catch (const std::exception&) {
      throw std::invalid_argument("signature: integer out of range \"" + p + "\"");
    }
  }
  if (value[0] < 0 || value[1] < 0)
    throw std::invalid_argument("signature: s and b must be nonnegative");
  if (value[2] < 0 || value[2] > value[0])
    throw std::invalid_argument("signature: offset out of range (need 0 <= f <= s)");
  return Signature(value[0], value[1], value[2]);
}

}  // namespace trihex
