#include "trihex/census.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace trihex {

Factorization factorize(Int n) {
  if (n <= 0) throw std::invalid_argument("factorize: need a positive integer");
  Factorization out;
  for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int mult = 0;
    while (n % p == 0) {
      n /= p;
      ++mult;
    }
    out.factors.emplace_back(p, mult);
  }
  if (n > 1) out.factors.emplace_back(n, 1);
  return out;
}

namespace {

void require_vertex_count(Int v) {
  if (v <= 0 || v % 4 != 0)
    throw std::invalid_argument("vertex count must be a positive multiple of 4");
}

std::vector<Int> divisors(Int n) {
  std::vector<Int> ds;
  for (Int i = 1; i * i <= n; ++i) {
    if (n % i) continue;
    ds.push_back(i);
    if (i != n / i) ds.push_back(n / i);
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

// Canonical representatives of the plain class and the mirror-merged class
// of sig, computed together so the census sweeps do the arithmetic once.
struct ClassKeys {
  Signature plain;
  Signature merged;
};

ClassKeys class_keys(const Signature& sig) {
  SignatureClass own = equivalent_signatures(sig);
  ClassKeys keys;
  keys.plain = own.canonical;
  if (own.chiral) {
    Signature mc = equivalent_signatures(mirror_signature(sig)).canonical;
    keys.merged = std::min(own.canonical, mc);
  } else {
    keys.merged = own.canonical;
  }
  return keys;
}

struct ClassCounts {
  Int alpha = 0;
  Int beta = 0;
};

ClassCounts count_classes(Int v) {
  std::set<Signature> plain, merged;
  for (const Signature& sig : signatures_for_vertices(v)) {
    ClassKeys keys = class_keys(sig);
    plain.insert(keys.plain);
    merged.insert(keys.merged);
  }
  return ClassCounts{static_cast<Int>(plain.size()),
                     static_cast<Int>(merged.size())};
}

}  // namespace

Int sigma(Int v) {
  require_vertex_count(v);
  Int result = 1;
  for (auto [p, mult] : factorize(v / 4).factors) {
    Int term = 1, power = 1;
    for (int i = 0; i < mult; ++i) {
      power *= p;
      term += power;
    }
    result *= term;
  }
  return result;
}

std::vector<Signature> signatures_for_vertices(Int v) {
  require_vertex_count(v);
  std::vector<Signature> sigs;
  for (Int d : divisors(v / 4)) {
    Int s = d - 1;
    Int b = v / (4 * d) - 1;
    for (Int f = 0; f <= s; ++f) sigs.emplace_back(s, b, f);
  }
  return sigs;
}

Int alpha(Int v) {
  require_vertex_count(v);
  return count_classes(v).alpha;
}

Int beta(Int v) {
  require_vertex_count(v);
  return count_classes(v).beta;
}

std::vector<CensusRow> census(Int v_min, Int v_max) {
  if (v_min < 4) throw std::invalid_argument("census: window starts below 4");
  if (v_min > v_max) throw std::invalid_argument("census: empty window");
  std::vector<CensusRow> rows;
  for (Int v = (v_min + 3) / 4 * 4; v <= v_max; v += 4) {
    CensusRow row;
    row.v = v;
    row.sigma = sigma(v);
    ClassCounts cc = count_classes(v);
    row.alpha = cc.alpha;
    row.beta = cc.beta;
    row.ceil_sigma_3 = (row.sigma + 2) / 3;
    row.ceil_sigma_6 = (row.sigma + 5) / 6;
    rows.push_back(row);
  }
  return rows;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::string out = "v,sigma,alpha,beta,ceil_sigma_3,ceil_sigma_6\n";
  for (const CensusRow& r : rows) {
    out += std::to_string(r.v) + "," + std::to_string(r.sigma) + "," +
           std::to_string(r.alpha) + "," + std::to_string(r.beta) + "," +
           std::to_string(r.ceil_sigma_3) + "," +
           std::to_string(r.ceil_sigma_6) + "\n";
  }
  return out;
}

Rational::Rational(Int n, Int d) : num(n), den(d) {
  if (den == 0) throw internal_error("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::decimal(int places) const {
  if (num < 0) throw internal_error("rational: decimal() wants nonnegative");
  if (places < 0) throw internal_error("rational: negative precision");
  Int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Int scaled = (num * scale + den / 2) / den;  // round half up
  if (places == 0) return std::to_string(scaled);
  std::string digits = std::to_string(scaled % scale);
  digits.insert(digits.begin(), places - digits.size(), '0');
  return std::to_string(scaled / scale) + "." + digits;
}

bool rational_less(const Rational& a, const Rational& b) {
  return a.num * b.den < b.num * a.den;
}

ConjectureStats conjecture_stats(Int v_min, Int v_max) {
  if (v_min < 4) throw std::invalid_argument("stats: window starts below 4");
  if (v_min > v_max) throw std::invalid_argument("stats: empty window");
  ConjectureStats st;
  st.v_min = v_min;
  st.v_max = v_max;
  st.max_alpha_ratio = Rational(0, 1);
  st.max_beta_ratio = Rational(0, 1);
  for (Int v = (v_min + 3) / 4 * 4; v <= v_max; v += 4) {
    Int sig = sigma(v);
    ClassCounts cc = count_classes(v);
    ++st.count;

    Int alpha_gap = cc.alpha - (sig + 2) / 3;
    st.alpha_gap_max = std::max(st.alpha_gap_max, alpha_gap);
    if (alpha_gap > 1) ++st.alpha_gap_gt1_count;
    Rational ra(3 * cc.alpha, sig);
    if (rational_less(st.max_alpha_ratio, ra)) st.max_alpha_ratio = ra;

    Int beta_gap = cc.beta - (sig + 5) / 6;
    st.beta_gap_max = std::max(st.beta_gap_max, beta_gap);
    if (beta_gap > 1) ++st.beta_gap_gt1_count;
    Rational rb(6 * cc.beta, sig);
    if (rational_less(st.max_beta_ratio, rb)) st.max_beta_ratio = rb;
  }
  if (st.count == 0)
    throw std::invalid_argument("stats: window contains no multiple of 4");
  st.alpha_gap_gt1_fraction = Rational(st.alpha_gap_gt1_count, st.count);
  st.beta_gap_gt1_fraction = Rational(st.beta_gap_gt1_count, st.count);
  return st;
}

}  // namespace trihex
