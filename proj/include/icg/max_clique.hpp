#pragma once

// Exact maximum-clique search for gcd-graphs: branch and bound over
// bit-packed candidate sets with a greedy colouring bound per node, a
// residue-class cutoff derived from the divisor structure, and a fixed
// root vertex (every maximum clique has a translate through 0, so the
// root branch never loses the optimum).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "icg/bitset.hpp"
#include "icg/gcd_graph.hpp"

namespace icg {

// Strictly increasing vertex labels; a clique iff every pairwise
// difference has its gcd with n inside D.
struct CliqueWitness {
  std::vector<u64> vertices;
  friend bool operator==(const CliqueWitness&, const CliqueWitness&) = default;
};

// Pure gcd-based pair check, independent of any materialized adjacency;
// usable as an oracle on witnesses from any source. Out-of-range or
// unsorted vertex lists are simply not cliques of this graph.
inline bool verify_clique(const DivisorSet& ds, const CliqueWitness& w) {
  const auto& v = w.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= ds.n) return false;
    if (i > 0 && v[i] <= v[i - 1]) return false;
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (!ds.contains(std::gcd(v[j] - v[i], ds.n))) return false;
  return true;
}

inline bool verify_clique(const GcdGraph& g, const CliqueWitness& w) { return verify_clique(g.divisor_set, w); }

// Any prime p | n dividing no element of D caps the clique at p: among
// p + 1 vertices two share a residue mod p and their difference leaves D.
// Returns n when every prime of n divides some divisor.
inline u64 residue_class_bound(const DivisorSet& ds) {
  u64 bound = ds.n;
  for (const auto& pp : factorize(ds.n).factors) {
    bool divides_some = false;
    for (u64 d : ds.divisors)
      if (d % pp.prime == 0) {
        divides_some = true;
        break;
      }
    if (!divides_some) bound = std::min(bound, pp.prime);
  }
  return bound;
}

enum class BranchOrder { degree_desc, degree_asc };

struct SolveOptions {
  u64 node_budget = 0;     // 0 = unlimited; checked every 1024 nodes
  bool fix_first_vertex = true;
  BranchOrder order = BranchOrder::degree_desc;
  u64 clique_cutoff = 0;   // externally proven upper bound; search stops on reaching it
};

struct SolveReport {
  u64 omega = 0;           // exact when optimal, otherwise the best lower bound found
  CliqueWitness witness;
  u64 nodes_explored = 0;
  double wall_seconds = 0.0;
  bool optimal = true;
};

namespace detail {

// Works on raw bit rows so tests can feed it arbitrary (e.g. permuted)
// adjacencies; the gcd-graph entry point below adds the residue cutoff.
class CliqueSearch {
 public:
  CliqueSearch(std::size_t n, std::size_t words, const std::uint64_t* rows, SolveOptions opt)
      : n_(n), words_(words), rows_(rows), opt_(opt) {}

  SolveReport run() {
    const auto start = std::chrono::steady_clock::now();
    levels_.assign(n_ + 2, Level{});
    deg_.assign(n_, 0);
    current_.clear();
    best_.clear();
    nodes_ = 0;
    exhausted_ = false;
    stop_ = false;

    if (n_ > 0) {
      Level& root = levels_[0];
      root.cand.assign(words_, 0);
      if (opt_.fix_first_vertex) {
        current_.push_back(0);
        record_current();
        std::copy(rows_, rows_ + words_, root.cand.data());
      } else {
        for (std::size_t v = 0; v < n_; ++v) bits::set_bit(root.cand.data(), v);
      }
      if (!stop_) greedy_seed(root.cand.data());
      if (!stop_) expand(0);
      current_.clear();
    }

    SolveReport r;
    r.omega = best_.size();
    r.witness.vertices.assign(best_.begin(), best_.end());
    std::sort(r.witness.vertices.begin(), r.witness.vertices.end());
    r.nodes_explored = nodes_;
    r.optimal = !exhausted_;
    r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

 private:
  struct Level {
    std::vector<std::uint64_t> cand;
    std::vector<std::uint32_t> verts;
    std::vector<std::uint32_t> order;
    std::vector<std::uint32_t> color;
  };

  const std::uint64_t* row(std::size_t v) const { return rows_ + v * words_; }

  void record_current() {
    if (current_.size() > best_.size()) {
      best_ = current_;
      if (opt_.clique_cutoff != 0 && best_.size() >= opt_.clique_cutoff) stop_ = true;
    }
  }

  // Deterministic greedy dive: repeatedly take the candidate with the most
  // neighbours among the remaining candidates (ties to the smaller label).
  // Seeds the bound so the search proves optimality instead of hunting for
  // its first decent clique.
  void greedy_seed(const std::uint64_t* root_cand) {
    std::vector<std::uint64_t> p(root_cand, root_cand + words_);
    std::vector<std::uint32_t> clique = current_;
    for (;;) {
      std::uint32_t pick = 0;
      std::size_t pick_deg = 0;
      bool found = false;
      bits::for_each_bit(p.data(), words_, [&](std::size_t v) {
        const std::size_t d = bits::popcount_and(row(v), p.data(), words_);
        if (!found || d > pick_deg) {
          pick = static_cast<std::uint32_t>(v);
          pick_deg = d;
          found = true;
        }
      });
      if (!found) break;
      clique.push_back(pick);
      bits::and_into(p.data(), p.data(), row(pick), words_);
    }
    if (clique.size() > best_.size()) {
      best_ = std::move(clique);
      if (opt_.clique_cutoff != 0 && best_.size() >= opt_.clique_cutoff) stop_ = true;
    }
  }

  // Greedy sequential colouring of the candidate set in a deterministic
  // order (degree inside the set, then label), emitted class by class so
  // colours ascend along the branch list. A clique through order[i] using
  // only earlier entries has at most color[i] vertices, which is what the
  // branch loop prunes on.
  void color_sort(Level& lv) {
    for (std::uint32_t v : lv.verts)
      deg_[v] = static_cast<std::uint32_t>(bits::popcount_and(row(v), lv.cand.data(), words_));
    if (opt_.order == BranchOrder::degree_desc)
      std::sort(lv.verts.begin(), lv.verts.end(),
                [&](std::uint32_t a, std::uint32_t b) { return deg_[a] != deg_[b] ? deg_[a] > deg_[b] : a < b; });
    else
      std::sort(lv.verts.begin(), lv.verts.end(),
                [&](std::uint32_t a, std::uint32_t b) { return deg_[a] != deg_[b] ? deg_[a] < deg_[b] : a > b; });

    std::size_t used = 0;
    for (std::uint32_t v : lv.verts) {
      std::size_t c = 0;
      while (c < used && bits::intersects(classes_[c].data(), row(v), words_)) ++c;
      if (c == used) {
        if (classes_.size() == used) {
          classes_.emplace_back();
          class_members_.emplace_back();
        }
        classes_[c].assign(words_, 0);
        class_members_[c].clear();
        ++used;
      }
      bits::set_bit(classes_[c].data(), v);
      class_members_[c].push_back(v);
    }

    lv.order.clear();
    lv.color.clear();
    for (std::size_t c = 0; c < used; ++c)
      for (std::uint32_t v : class_members_[c]) {
        lv.order.push_back(v);
        lv.color.push_back(static_cast<std::uint32_t>(c + 1));
      }
  }

  void expand(std::size_t depth) {
    ++nodes_;
    if (opt_.node_budget != 0 && (nodes_ & 1023u) == 0 && nodes_ > opt_.node_budget) exhausted_ = true;
    if (exhausted_ || stop_) return;

    Level& cur = levels_[depth];
    Level& nxt = levels_[depth + 1];
    if (nxt.cand.size() != words_) nxt.cand.assign(words_, 0);

    std::uint64_t* live = cur.cand.data();
    const std::size_t live_count = bits::popcount(live, words_);
    if (live_count == 0) return;
    if (current_.size() + live_count <= best_.size()) return;

    cur.verts.clear();
    bits::for_each_bit(live, words_, [&](std::size_t v) { cur.verts.push_back(static_cast<std::uint32_t>(v)); });
    color_sort(cur);

    for (std::size_t idx = cur.order.size(); idx-- > 0;) {
      if (exhausted_ || stop_) return;
      const std::uint32_t v = cur.order[idx];
      if (current_.size() + cur.color[idx] <= best_.size()) return;
      bits::and_into(nxt.cand.data(), live, row(v), words_);
      current_.push_back(v);
      record_current();
      if (!stop_) expand(depth + 1);
      current_.pop_back();
      bits::clear_bit(live, v);
    }
  }

  std::size_t n_;
  std::size_t words_;
  const std::uint64_t* rows_;
  SolveOptions opt_;

  std::vector<Level> levels_;
  std::vector<std::vector<std::uint64_t>> classes_;
  std::vector<std::vector<std::uint32_t>> class_members_;
  std::vector<std::uint32_t> deg_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
  u64 nodes_ = 0;
  bool exhausted_ = false;
  bool stop_ = false;
};

}  // namespace detail

inline SolveReport max_clique_exact(const GcdGraph& g, SolveOptions opt = {}) {
  const u64 rb = residue_class_bound(g.divisor_set);
  opt.clique_cutoff = opt.clique_cutoff != 0 ? std::min(opt.clique_cutoff, rb) : rb;
  detail::CliqueSearch search(static_cast<std::size_t>(g.n), g.words, g.adjacency.data(), opt);
  SolveReport r = search.run();
  if (!verify_clique(g.divisor_set, r.witness)) throw std::logic_error("max_clique_exact: witness failed verification");
  return r;
}

}  // namespace icg
