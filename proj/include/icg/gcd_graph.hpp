#pragma once

// The gcd-graph X_n(D): vertices are Z_n, and a ~ b iff gcd(a - b, n) lies
// in the divisor set D. Adjacency is circulant, so row i is row 0 rotated
// by i, and everything about the graph is derivable from the symbol set
// without materializing rows.

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "icg/bitset.hpp"
#include "icg/numtheory.hpp"
#include "icg/union_find.hpp"

namespace icg {

// Validated set of proper divisors of n, stored ascending.
struct DivisorSet {
  u64 n = 0;
  std::vector<u64> divisors;

  u64 gcd() const {
    u64 g = 0;
    for (u64 d : divisors) g = std::gcd(g, d);
    return g;
  }
  bool contains(u64 d) const { return std::binary_search(divisors.begin(), divisors.end(), d); }
  friend bool operator==(const DivisorSet&, const DivisorSet&) = default;
};

inline DivisorSet validate_divisor_set(u64 n, std::vector<u64> candidates) {
  if (n < 2) throw std::invalid_argument("divisor set: n must be >= 2");
  if (candidates.empty()) throw std::invalid_argument("divisor set: at least one divisor required");
  std::sort(candidates.begin(), candidates.end());
  for (std::size_t i = 0; i + 1 < candidates.size(); ++i)
    if (candidates[i] == candidates[i + 1])
      throw std::invalid_argument("divisor set: duplicate divisor " + std::to_string(candidates[i]));
  for (u64 d : candidates) {
    if (d == 0) throw std::invalid_argument("divisor set: 0 is not a divisor");
    if (d >= n)
      throw std::invalid_argument("divisor set: " + std::to_string(d) + " is not a proper divisor of " +
                                  std::to_string(n));
    if (n % d != 0)
      throw std::invalid_argument("divisor set: " + std::to_string(d) + " does not divide " + std::to_string(n));
  }
  return DivisorSet{n, std::move(candidates)};
}

// S = { s in 1..n-1 : gcd(s, n) in D }, the difference set of X_n(D).
// Symmetric by construction since gcd(s, n) = gcd(n - s, n).
struct SymbolSet {
  u64 n = 0;
  Bitset members;

  bool contains(u64 s) const { return s > 0 && s < n && members.test(static_cast<std::size_t>(s)); }
};

inline SymbolSet symbol_set(const DivisorSet& ds) {
  SymbolSet s{ds.n, Bitset(static_cast<std::size_t>(ds.n))};
  for (u64 k = 1; k < ds.n; ++k)
    if (ds.contains(std::gcd(k, ds.n))) s.members.set(static_cast<std::size_t>(k));
  return s;
}

inline constexpr u64 kDefaultVertexCap = 16384;

struct GcdGraph {
  u64 n = 0;
  DivisorSet divisor_set;
  SymbolSet symbols;
  std::size_t words = 0;
  std::vector<std::uint64_t> adjacency;  // n rows of `words` words each
  u64 degree = 0;

  const std::uint64_t* row(std::size_t v) const { return adjacency.data() + v * words; }
  bool adjacent(u64 a, u64 b) const { return bits::test_bit(row(static_cast<std::size_t>(a)), static_cast<std::size_t>(b)); }
};

inline GcdGraph build_graph(const DivisorSet& ds, u64 vertex_cap = kDefaultVertexCap) {
  if (ds.n > vertex_cap)
    throw std::length_error("build_graph: n = " + std::to_string(ds.n) + " exceeds the vertex capacity " +
                            std::to_string(vertex_cap));
  GcdGraph g;
  g.n = ds.n;
  g.divisor_set = ds;
  g.symbols = symbol_set(ds);
  const std::size_t n = static_cast<std::size_t>(ds.n);
  g.words = bits::word_count(n);
  g.adjacency.assign(n * g.words, 0);

  std::vector<std::size_t> symbols;
  bits::for_each_bit(g.symbols.members.data(), g.words, [&](std::size_t s) { symbols.push_back(s); });
  for (std::size_t v = 0; v < n; ++v) {
    std::uint64_t* r = g.adjacency.data() + v * g.words;
    for (std::size_t s : symbols) {
      const std::size_t u = v + s < n ? v + s : v + s - n;
      bits::set_bit(r, u);
    }
  }

  // every vertex sees phi(n/d) neighbours per divisor class; anything else
  // means the symbol set is wrong
  u64 expected = 0;
  for (u64 d : ds.divisors) expected += totient(ds.n / d);
  g.degree = bits::popcount(g.row(0), g.words);
  if (g.degree != expected) throw std::logic_error("build_graph: vertex degree disagrees with totient sum");
  return g;
}

struct ComponentDecomposition {
  u64 component_count = 1;
  std::vector<std::vector<u64>> components;  // residue classes mod gcd(D)
  DivisorSet quotient;                       // X_{n/g}(D/g)
};

// gcd(D) isomorphic components, one per residue class mod gcd(D), each a
// copy of the quotient graph. The arithmetic claim is cross-checked against
// union-find over the actual edge set and a mismatch throws.
inline ComponentDecomposition decompose_components(const DivisorSet& ds) {
  const u64 g = ds.gcd();
  ComponentDecomposition out;
  out.component_count = g;
  out.components.assign(static_cast<std::size_t>(g), {});
  for (u64 v = 0; v < ds.n; ++v) out.components[static_cast<std::size_t>(v % g)].push_back(v);
  if (g == 1) {
    out.quotient = ds;
  } else {
    std::vector<u64> qd;
    qd.reserve(ds.divisors.size());
    for (u64 d : ds.divisors) qd.push_back(d / g);
    out.quotient = validate_divisor_set(ds.n / g, std::move(qd));
  }

  const SymbolSet s = symbol_set(ds);
  const std::size_t n = static_cast<std::size_t>(ds.n);
  UnionFind uf(n);
  bits::for_each_bit(s.members.data(), s.members.word_size(), [&](std::size_t sym) {
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t u = v + sym < n ? v + sym : v + sym - n;
      uf.unite(v, u);
    }
  });
  if (uf.components() != g) throw std::logic_error("decompose_components: union-find disagrees with gcd(D)");
  for (std::size_t v = 0; v < n; ++v)
    if (uf.find(v) != uf.find(v % static_cast<std::size_t>(g)))
      throw std::logic_error("decompose_components: component is not a residue class mod gcd(D)");
  return out;
}

enum class GraphFormat { edge_list, dot };

// Deterministic text export; each undirected edge appears once as "a b"
// with a < b, rows ascending.
inline std::string export_graph(const GcdGraph& g, GraphFormat format) {
  std::ostringstream os;
  const bool dot = format == GraphFormat::dot;
  if (dot) os << "graph icg {\n";
  const std::size_t n = static_cast<std::size_t>(g.n);
  for (std::size_t a = 0; a < n; ++a) {
    bits::for_each_bit(g.row(a), g.words, [&](std::size_t b) {
      if (b <= a) return;
      if (dot)
        os << "  " << a << " -- " << b << ";\n";
      else
        os << a << ' ' << b << '\n';
    });
  }
  if (dot) os << "}\n";
  return os.str();
}

}  // namespace icg
