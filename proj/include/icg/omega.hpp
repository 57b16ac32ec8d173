#pragma once

// Front door for clique numbers: reductions first (prime scaling, then the
// component quotient), the k <= 2 formulas with constructed witnesses next,
// the exact solver for k >= 3, and bounds-only as the honest last resort.
// An unproven value is never reported as omega.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "icg/clique_theory.hpp"
#include "icg/gcd_graph.hpp"
#include "icg/max_clique.hpp"
#include "icg/witnesses.hpp"

namespace icg {

enum class Policy { automatic, formula_only, exact_only };
enum class Method { formula_k1, formula_k2, exact, bounds_only };

inline const char* method_name(Method m) {
  switch (m) {
    case Method::formula_k1: return "formula-k1";
    case Method::formula_k2: return "formula-k2";
    case Method::exact: return "exact";
    case Method::bounds_only: return "bounds-only";
  }
  return "?";
}

inline constexpr u64 kDefaultNodeBudget = u64{1} << 26;
inline constexpr u64 kDefaultCrossCheckCap = 300;

struct OmegaOptions {
  Policy policy = Policy::automatic;
  u64 vertex_cap = kDefaultVertexCap;
  u64 node_budget = kDefaultNodeBudget;
  u64 cross_check_cap = 0;  // formula results for n <= cap are re-proved by the solver
  bool recheck_counterexamples = true;
};

struct CliqueOutcome {
  std::optional<u64> omega;  // absent iff method == bounds_only
  Method method = Method::bounds_only;
  u64 lower_bound = 1;
  u64 upper_bound = 0;
  std::optional<CliqueWitness> witness;
  std::optional<bool> divides_n;           // omega | n, set only when omega is exact
  std::optional<bool> formula_exact_agree; // set when the cross-check ran
  bool budget_exhausted = false;
};

namespace detail {

struct Resolution {
  std::optional<u64> omega;
  std::optional<CliqueWitness> witness;
  Method method = Method::bounds_only;
  bool budget_exhausted = false;
  u64 solver_lower = 1;  // best clique found by an exhausted solver run
};

// Applies the scaling and component reductions to a fixpoint; the clique
// number of the result equals that of the input.
inline DivisorSet fully_reduce(DivisorSet ds) {
  for (;;) {
    DivisorSet next = scaling_reduce(ds);
    if (const u64 g = next.gcd(); g > 1) {
      std::vector<u64> qd;
      qd.reserve(next.divisors.size());
      for (u64 d : next.divisors) qd.push_back(d / g);
      next = DivisorSet{next.n / g, std::move(qd)};
    }
    if (next == ds) return ds;
    ds = std::move(next);
  }
}

inline Resolution resolve_exact(const DivisorSet& ds, const OmegaOptions& opt) {
  Resolution res;
  if (ds.n > opt.vertex_cap) return res;
  const GcdGraph g = build_graph(ds, opt.vertex_cap);
  SolveOptions sopt;
  sopt.node_budget = opt.node_budget;
  const SolveReport rep = max_clique_exact(g, sopt);
  if (!rep.optimal) {
    res.budget_exhausted = true;
    res.solver_lower = rep.omega;
    return res;
  }
  res.omega = rep.omega;
  res.witness = rep.witness;
  res.method = Method::exact;
  return res;
}

inline Resolution resolve(const DivisorSet& ds, const OmegaOptions& opt) {
  // prime-scaling reduction: witness labels stay valid as-is
  const DivisorSet reduced = scaling_reduce(ds);
  if (reduced.n != ds.n) return resolve(reduced, opt);

  // component quotient: a witness of X_{n/g}(D/g) lifts by v -> g*v
  if (const u64 g = ds.gcd(); g > 1) {
    std::vector<u64> qd;
    qd.reserve(ds.divisors.size());
    for (u64 d : ds.divisors) qd.push_back(d / g);
    Resolution inner = resolve(DivisorSet{ds.n / g, std::move(qd)}, opt);
    if (inner.witness)
      for (u64& v : inner.witness->vertices) v *= g;
    return inner;
  }

  const std::size_t k = ds.divisors.size();
  if (k == 1) {
    const u64 d = ds.divisors[0];
    Resolution res;
    res.omega = omega_k1(ds.n, d);
    res.witness = build_clique_k1(ds.n, d);
    res.method = Method::formula_k1;
    return res;
  }
  if (k == 2) {
    const u64 lo = ds.divisors[0];
    const u64 hi = ds.divisors[1];
    Resolution res;
    res.method = Method::formula_k2;
    if (lo == 1) {
      const TwoDivisorAnalysis a = analyze_two_divisor(ds.n, hi);
      res.omega = omega_k2_with_one(ds.n, hi);
      res.witness = build_clique_k2_with_one(a);
    } else {
      // gcd(D) = 1 here, so neither divisor divides the other; the best
      // clique is monochromatic in the class with the larger f value
      res.omega = omega_k2_general(ds.n, hi, lo);
      const u64 pick = smallest_prime_factor(ds.n / lo) >= smallest_prime_factor(ds.n / hi) ? lo : hi;
      res.witness = build_clique_k1(ds.n, pick);
    }
    return res;
  }
  if (opt.policy == Policy::formula_only) return {};
  return resolve_exact(ds, opt);
}

}  // namespace detail

inline CliqueOutcome omega(const DivisorSet& ds, const OmegaOptions& opt = {}) {
  const OmegaBounds b = omega_bounds(ds);
  CliqueOutcome out;
  out.lower_bound = b.lower;
  out.upper_bound = b.upper;

  detail::Resolution res =
      opt.policy == Policy::exact_only ? detail::resolve_exact(ds, opt) : detail::resolve(ds, opt);

  out.budget_exhausted = res.budget_exhausted;
  if (!res.omega) {
    out.method = Method::bounds_only;
    out.lower_bound = std::max(out.lower_bound, res.solver_lower);
    return out;
  }

  out.omega = res.omega;
  out.method = res.method;
  if (*out.omega < out.lower_bound || *out.omega > out.upper_bound)
    throw std::logic_error("omega: result escaped its proven bounds");
  if (res.witness) {
    if (res.witness->vertices.size() != *out.omega || !verify_clique(ds, *res.witness))
      throw std::logic_error("omega: witness failed final verification");
    out.witness = std::move(res.witness);
  }
  out.divides_n = (ds.n % *out.omega == 0);

  // optional belt-and-suspenders: re-prove small formula results exactly
  if (out.method != Method::exact && out.method != Method::bounds_only && opt.cross_check_cap >= ds.n &&
      ds.n <= opt.vertex_cap) {
    OmegaOptions eopt = opt;
    eopt.policy = Policy::exact_only;
    eopt.cross_check_cap = 0;
    const detail::Resolution er = detail::resolve_exact(ds, eopt);
    if (er.omega) out.formula_exact_agree = (*er.omega == *out.omega);
  }

  // a refutation of the divisibility conjecture gets re-solved with a
  // different branch order before we report it; the re-solve honours the
  // same node budget, and an inconclusive rerun may not contradict the
  // primary result
  if (opt.recheck_counterexamples && out.method == Method::exact && !*out.divides_n) {
    const DivisorSet rds = detail::fully_reduce(ds);
    if (rds.n <= opt.vertex_cap) {
      SolveOptions sopt;
      sopt.node_budget = opt.node_budget;
      sopt.order = BranchOrder::degree_asc;
      const SolveReport rr = max_clique_exact(build_graph(rds, opt.vertex_cap), sopt);
      if (rr.optimal ? rr.omega != *out.omega : rr.omega > *out.omega)
        throw std::logic_error("omega: counterexample failed the cross-order re-solve");
    }
  }
  return out;
}

}  // namespace icg
