#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trihex/signature.hpp"

namespace trihex {

// Prime factorization by trial division; adequate for the counts this
// library sweeps (v/4 up to 10^6).
struct Factorization {
  std::vector<std::pair<Int, int>> factors;  // (prime, multiplicity)
};
Factorization factorize(Int n);

// Number of signatures with vertex count v: the divisor sum of v/4,
// computed from the prime factorization by the product formula.
// v must be a positive multiple of 4.
Int sigma(Int v);

// All signatures with exactly v vertices, in lexicographic (s, b, f) order:
// one (s, b) per divisor d of v/4 via s = d-1, b = v/(4d)-1, offsets 0..s.
std::vector<Signature> signatures_for_vertices(Int v);

// Number of equivalence classes at v, and number of classes after merging
// each class with its mirror (= graph-isomorphism classes).
Int alpha(Int v);
Int beta(Int v);

struct CensusRow {
  Int v = 0;
  Int sigma = 0;
  Int alpha = 0;
  Int beta = 0;
  Int ceil_sigma_3 = 0;
  Int ceil_sigma_6 = 0;
};

// One row per multiple of 4 in [v_min, v_max], ascending.  Requires
// 4 <= v_min <= v_max; a window containing no multiple of 4 yields an
// empty list.
std::vector<CensusRow> census(Int v_min, Int v_max);

// CSV rendering with header "v,sigma,alpha,beta,ceil_sigma_3,ceil_sigma_6"
// and LF line endings.
std::string census_csv(const std::vector<CensusRow>& rows);

// Exact nonnegative rational, kept reduced.
struct Rational {
  Int num = 0;
  Int den = 1;

  Rational() = default;
  Rational(Int n, Int d);
  // Decimal rendering to `places` digits, round half up.
  std::string decimal(int places) const;
  friend bool operator==(const Rational&, const Rational&) = default;
};
bool rational_less(const Rational& a, const Rational& b);

// How far the class counts over a window sit above their divisor-sum floor:
// gaps alpha - ceil(sigma/3) and beta - ceil(sigma/6), their maxima, how
// often each exceeds 1, and the worst ratios alpha/(sigma/3), beta/(sigma/6).
struct ConjectureStats {
  Int v_min = 0, v_max = 0;
  Int count = 0;  // multiples of 4 considered
  Int alpha_gap_max = 0;
  Int alpha_gap_gt1_count = 0;
  Rational alpha_gap_gt1_fraction;
  Int beta_gap_max = 0;
  Int beta_gap_gt1_count = 0;
  Rational beta_gap_gt1_fraction;
  Rational max_alpha_ratio;  // max over v of 3*alpha(v)/sigma(v)
  Rational max_beta_ratio;   // max over v of 6*beta(v)/sigma(v)
};

// Requires a window as for census() that contains at least one multiple
// of 4.
ConjectureStats conjecture_stats(Int v_min, Int v_max);

}  // namespace trihex
