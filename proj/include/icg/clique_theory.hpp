#pragma once

// Closed-form clique numbers for one- and two-divisor gcd-graphs, the
// general lower/upper bounds, and the prime-scaling reduction. f denotes
// the smallest prime factor throughout.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "icg/gcd_graph.hpp"
#include "icg/max_clique.hpp"
#include "icg/numtheory.hpp"

namespace icg {

// omega(X_n(d)) = chi(X_n(d)) = f(n/d): the graph is gcd(d) copies of a
// unitary graph on n/d vertices.
inline u64 omega_k1(u64 n, u64 d) {
  if (d == 0 || d >= n || n % d != 0) throw std::invalid_argument("omega_k1: d must be a proper divisor of n");
  return smallest_prime_factor(n / d);
}

enum class TwoDivisorCase { q_empty_or_large_q, small_q };

// Prime structure of X_n(1, d): Q holds the primes of n missing from d,
// R the primes shared by d and n/d. crt_modulus = prod(R u Q) is the
// modulus the witness constructions solve their congruence systems over.
struct TwoDivisorAnalysis {
  u64 n = 0;
  u64 d = 0;
  u64 p1 = 0;   // f(n)
  u64 p_i = 0;  // f(n/d), the first prime short of its full exponent in d
  std::vector<u64> q_primes;
  std::vector<u64> r_primes;
  std::optional<u64> q;  // min of Q when nonempty
  u64 crt_modulus = 1;
  TwoDivisorCase case_tag = TwoDivisorCase::q_empty_or_large_q;
};

inline TwoDivisorAnalysis analyze_two_divisor(u64 n, u64 d) {
  if (d < 2 || d >= n || n % d != 0)
    throw std::invalid_argument("analyze_two_divisor: need a proper divisor 1 < d < n");
  TwoDivisorAnalysis a;
  a.n = n;
  a.d = d;
  a.p1 = smallest_prime_factor(n);
  a.p_i = smallest_prime_factor(n / d);
  for (const auto& pp : factorize(n).factors) {
    if (d % pp.prime != 0)
      a.q_primes.push_back(pp.prime);
    else if ((n / d) % pp.prime == 0)
      a.r_primes.push_back(pp.prime);
  }
  for (u64 p : a.q_primes) a.crt_modulus *= p;
  for (u64 p : a.r_primes) a.crt_modulus *= p;
  if (!a.q_primes.empty()) a.q = a.q_primes.front();
  // q is prime and p1*p_i is composite, so they can never tie
  if (a.q && *a.q == a.p1 * a.p_i) throw std::logic_error("analyze_two_divisor: q == p1*p_i is impossible");
  a.case_tag = (!a.q || *a.q > a.p1 * a.p_i) ? TwoDivisorCase::q_empty_or_large_q : TwoDivisorCase::small_q;
  return a;
}

// omega(X_n(1, d)) = min(q, f(n) * f(n/d)), with the q term absent when
// every prime of n divides d.
inline u64 omega_k2_with_one(u64 n, u64 d) {
  const TwoDivisorAnalysis a = analyze_two_divisor(n, d);
  return a.case_tag == TwoDivisorCase::small_q ? *a.q : a.p1 * a.p_i;
}

// Two divisors d1 > d2 >= 1 (the descending convention used by the case
// split; DivisorSet storage is ascending and callers map at this boundary).
inline u64 omega_k2_general(u64 n, u64 d1, u64 d2) {
  if (d1 == d2) throw std::invalid_argument("omega_k2_general: divisors must differ");
  if (d1 < d2) throw std::invalid_argument("omega_k2_general: expected d1 > d2");
  if (d2 == 0 || d1 >= n || n % d1 != 0 || n % d2 != 0)
    throw std::invalid_argument("omega_k2_general: divisors must be proper divisors of n");
  if (d2 == 1) return omega_k2_with_one(n, d1);
  if (d1 % d2 == 0) return omega_k2_with_one(n / d2, d1 / d2);
  // no triangle mixes the two gcd classes here, so the best clique is
  // monochromatic and the single-divisor formula wins per class
  return std::max(smallest_prime_factor(n / d1), smallest_prime_factor(n / d2));
}

struct OmegaBounds {
  u64 lower = 1;
  u64 upper = 1;
};

// max f(n/d) <= omega <= prod f(n/d), the product capped by n and by the
// residue-class bound (both sound and sometimes tighter).
inline OmegaBounds omega_bounds(const DivisorSet& ds) {
  OmegaBounds b{1, ds.n};
  unsigned __int128 prod = 1;
  for (u64 d : ds.divisors) {
    const u64 f = smallest_prime_factor(ds.n / d);
    b.lower = std::max(b.lower, f);
    if (prod < ds.n) prod *= f;
  }
  if (prod < ds.n) b.upper = static_cast<u64>(prod);
  b.upper = std::min(b.upper, residue_class_bound(ds));
  return b;
}

// Strips primes p of n with p > n/p that divide no element of D; the
// clique number is unchanged because differences of vertices below n/p
// cannot pick up the factor p. Requires every divisor to stay proper in
// the reduced instance, which only the degenerate d = n/p case violates.
inline DivisorSet scaling_reduce(const DivisorSet& ds) {
  DivisorSet cur = ds;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& pp : factorize(cur.n).factors) {
      const u64 p = pp.prime;
      const u64 rest = cur.n / p;
      if (p <= rest) continue;
      bool applies = true;
      for (u64 d : cur.divisors)
        if (d % p == 0 || d >= rest) {
          applies = false;
          break;
        }
      if (!applies) continue;
      cur.n = rest;
      changed = true;
      break;
    }
  }
  return cur;
}

}  // namespace icg
