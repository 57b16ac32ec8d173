#pragma once

// Exact unsigned 64-bit number theory behind the clique formulas and the
// CRT witness constructions. Plain trial division throughout: inputs stay
// at desk scale and determinism matters more than factoring speed.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace icg {

using u64 = std::uint64_t;

struct PrimePower {
  u64 prime = 0;
  u64 exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n as an ordered product of prime powers; empty factor list for n = 1.
struct Factorization {
  u64 n = 1;
  std::vector<PrimePower> factors;

  u64 reconstruct() const {
    u64 m = 1;
    for (const auto& pp : factors)
      for (u64 e = 0; e < pp.exponent; ++e) m *= pp.prime;
    return m;
  }
};

inline Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  out.n = n;
  u64 m = n;
  auto strip = [&](u64 p) {
    if (m % p != 0) return;
    u64 e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    out.factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (u64 p = 5; p * p <= m; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (m > 1) out.factors.push_back({m, 1});
  return out;
}

inline u64 smallest_prime_factor(u64 n) {
  if (n < 2) throw std::invalid_argument("smallest_prime_factor: n must be >= 2");
  if (n % 2 == 0) return 2;
  if (n % 3 == 0) return 3;
  for (u64 p = 5; p * p <= n; p += 6) {
    if (n % p == 0) return p;
    if (n % (p + 2) == 0) return p + 2;
  }
  return n;
}

inline bool is_prime(u64 n) { return n >= 2 && smallest_prime_factor(n) == n; }

inline u64 totient(u64 n) {
  if (n == 0) throw std::invalid_argument("totient: n must be >= 1");
  u64 phi = n;
  for (const auto& pp : factorize(n).factors) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

// All divisors of n except n itself, ascending. Every proper divisor is
// at most n/2, so this is exactly the candidate pool for divisor sets.
inline std::vector<u64> divisors_proper(u64 n) {
  if (n < 2) throw std::invalid_argument("divisors_proper: n must be >= 2");
  std::vector<u64> divs{1};
  for (const auto& pp : factorize(n).factors) {
    const std::size_t base = divs.size();
    u64 pk = 1;
    for (u64 e = 0; e < pp.exponent; ++e) {
      pk *= pp.prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  divs.pop_back();
  return divs;
}

// x == residue (mod modulus)
struct Congruence {
  u64 residue = 0;
  u64 modulus = 1;
  friend bool operator==(const Congruence&, const Congruence&) = default;
};

namespace detail {

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace detail

inline std::optional<u64> mod_inverse(u64 a, u64 m) {
  if (m == 0) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
  if (m == 1) return 0;
  std::int64_t r0 = static_cast<std::int64_t>(m);
  std::int64_t r1 = static_cast<std::int64_t>(a % m);
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    const std::int64_t r2 = r0 - q * r1;
    const std::int64_t s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (r0 != 1) return std::nullopt;
  std::int64_t inv = s0 % static_cast<std::int64_t>(m);
  if (inv < 0) inv += static_cast<std::int64_t>(m);
  return static_cast<u64>(inv);
}

// Combines pairwise-coprime congruences into the unique class modulo the
// product of the moduli. The result is substituted back into every input
// congruence before returning; a failure there is a bug, not bad input.
inline Congruence crt_solve(std::span<const Congruence> system) {
  Congruence acc{0, 1};
  for (const auto& c : system) {
    if (c.modulus == 0) throw std::invalid_argument("crt_solve: zero modulus");
    if (c.residue >= c.modulus) throw std::invalid_argument("crt_solve: residue not reduced");
    if (std::gcd(acc.modulus, c.modulus) != 1)
      throw std::invalid_argument("crt_solve: moduli not pairwise coprime");
    const u64 m = c.modulus;
    const u64 delta = (c.residue + m - acc.residue % m) % m;
    const u64 t = detail::mul_mod(delta, *mod_inverse(acc.modulus % m, m), m);
    acc.residue += acc.modulus * t;
    acc.modulus *= m;
  }
  for (const auto& c : system)
    if (acc.residue % c.modulus != c.residue)
      throw std::logic_error("crt_solve: solution failed substitution check");
  return acc;
}

inline Congruence crt_solve(const std::vector<Congruence>& system) {
  return crt_solve(std::span<const Congruence>(system));
}

// Solves a*x == b (mod m). Solvable iff gcd(a, m) | b; the solution is a
// single class modulo m / gcd(a, m).
inline std::optional<Congruence> linear_congruence_solve(u64 a, u64 b, u64 m) {
  if (m < 2) throw std::invalid_argument("linear_congruence_solve: modulus must be >= 2");
  a %= m;
  b %= m;
  const u64 g = std::gcd(a, m);
  if (b % g != 0) return std::nullopt;
  const u64 m2 = m / g;
  if (m2 == 1) return Congruence{0, 1};
  const u64 inv = *mod_inverse((a / g) % m2, m2);
  return Congruence{detail::mul_mod((b / g) % m2, inv, m2), m2};
}

}  // namespace icg
