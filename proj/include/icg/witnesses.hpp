#pragma once

// Explicit clique and colouring witnesses: arithmetic progressions for one
// divisor, CRT-built vertex grids for the two-divisor cases. Every
// construction is verified before it is returned; these builders realize
// proved formulas, so a failed check is a logic error, never bad input.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "icg/clique_theory.hpp"
#include "icg/max_clique.hpp"
#include "icg/numtheory.hpp"

namespace icg {

namespace detail {

inline CliqueWitness checked_witness(CliqueWitness w, const DivisorSet& ds, u64 expected_size, const char* who) {
  std::sort(w.vertices.begin(), w.vertices.end());
  if (w.vertices.size() != expected_size || !verify_clique(ds, w))
    throw std::logic_error(std::string(who) + ": constructed witness failed verification");
  return w;
}

}  // namespace detail

// {0, d, 2d, ..., (f(n/d)-1)*d}: consecutive multiples of d, pairwise
// gcd exactly d.
inline CliqueWitness build_clique_k1(u64 n, u64 d) {
  const u64 p = omega_k1(n, d);
  CliqueWitness w;
  w.vertices.reserve(static_cast<std::size_t>(p));
  for (u64 j = 0; j < p; ++j) w.vertices.push_back(j * d);
  return detail::checked_witness(std::move(w), DivisorSet{n, {d}}, p, "build_clique_k1");
}

// Q empty or q > p1*p_i: the p1 x p_i grid x_{r,s} = a_s*d + r where a_s
// solves a_s == s (mod p) for p in R and a_s*d == s*p1 (mod p) for p in Q.
// Differences with r != r' have gcd 1, with r = r' gcd d.
inline CliqueWitness build_clique_case_large_q(const TwoDivisorAnalysis& a) {
  if (a.case_tag != TwoDivisorCase::q_empty_or_large_q)
    throw std::invalid_argument("build_clique_case_large_q: analysis falls in the small-q case");
  CliqueWitness w;
  w.vertices.reserve(static_cast<std::size_t>(a.p1 * a.p_i));
  for (u64 s = 0; s < a.p_i; ++s) {
    std::vector<Congruence> sys;
    for (u64 p : a.r_primes) sys.push_back({s % p, p});
    for (u64 p : a.q_primes) {
      const auto c = linear_congruence_solve(a.d % p, detail::mul_mod(s % p, a.p1 % p, p), p);
      if (!c) throw std::logic_error("build_clique_case_large_q: congruence for a_s has no solution");
      sys.push_back(*c);
    }
    const u64 a_s = sys.empty() ? s : crt_solve(sys).residue;
    for (u64 r = 0; r < a.p1; ++r) w.vertices.push_back((a_s * a.d + r) % a.n);
  }
  return detail::checked_witness(std::move(w), DivisorSet{a.n, {1, a.d}}, a.p1 * a.p_i,
                                 "build_clique_case_large_q");
}

// q < p1*p_i: q vertices x_k = a_k*d + (k mod p1) where a_k*d + b_k == k
// (mod p) for p in Q and a_k == floor(k/p1) (mod p) for p in R.
inline CliqueWitness build_clique_case_small_q(const TwoDivisorAnalysis& a) {
  if (a.case_tag != TwoDivisorCase::small_q)
    throw std::invalid_argument("build_clique_case_small_q: analysis falls in the large-q case");
  const u64 q = *a.q;
  CliqueWitness w;
  w.vertices.reserve(static_cast<std::size_t>(q));
  for (u64 k = 0; k < q; ++k) {
    const u64 b = k % a.p1;
    std::vector<Congruence> sys;
    for (u64 p : a.q_primes) {
      const u64 rhs = ((k % p) + p - (b % p)) % p;
      const auto c = linear_congruence_solve(a.d % p, rhs, p);
      if (!c) throw std::logic_error("build_clique_case_small_q: congruence for a_k has no solution");
      sys.push_back(*c);
    }
    for (u64 p : a.r_primes) sys.push_back({(k / a.p1) % p, p});
    const u64 a_k = sys.empty() ? 0 : crt_solve(sys).residue;
    w.vertices.push_back((a_k * a.d + b) % a.n);
  }
  return detail::checked_witness(std::move(w), DivisorSet{a.n, {1, a.d}}, q, "build_clique_case_small_q");
}

// Case dispatch for X_n(1, d); the witness size always equals
// omega_k2_with_one(n, d).
inline CliqueWitness build_clique_k2_with_one(const TwoDivisorAnalysis& a) {
  return a.case_tag == TwoDivisorCase::small_q ? build_clique_case_small_q(a) : build_clique_case_large_q(a);
}

struct ColoringWitness {
  u64 color_count = 0;
  std::vector<u64> colors;  // colors[v], v in 0..n-1
};

// colour(v) = floor(v/d) mod f(n/d); properness is machine-checked against
// the full edge set before returning.
inline ColoringWitness build_coloring_k1(u64 n, u64 d) {
  const u64 p = omega_k1(n, d);
  ColoringWitness cw;
  cw.color_count = p;
  cw.colors.resize(static_cast<std::size_t>(n));
  for (u64 v = 0; v < n; ++v) cw.colors[static_cast<std::size_t>(v)] = (v / d) % p;
  for (u64 a = 0; a < n; ++a)
    for (u64 b = a + 1; b < n; ++b)
      if (std::gcd(b - a, n) == d && cw.colors[static_cast<std::size_t>(a)] == cw.colors[static_cast<std::size_t>(b)])
        throw std::logic_error("build_coloring_k1: colouring is not proper");
  return cw;
}

struct ChiReport {
  u64 chi = 0;
  ColoringWitness coloring;
  CliqueWitness clique;  // equal-size clique certifying the colour count is optimal
};

// chi(X_n(d)) = omega(X_n(d)) = f(n/d), certified from both sides: a proper
// colouring with f(n/d) colours and a clique of the same size.
inline ChiReport chi_k1(u64 n, u64 d) {
  ChiReport r;
  r.chi = omega_k1(n, d);
  r.coloring = build_coloring_k1(n, d);
  r.clique = build_clique_k1(n, d);
  if (r.coloring.color_count != r.chi || r.clique.vertices.size() != r.chi)
    throw std::logic_error("chi_k1: certificate sizes disagree");
  return r;
}

}  // namespace icg
