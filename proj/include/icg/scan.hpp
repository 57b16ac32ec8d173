#pragma once

// Conjecture-scanning harness: enumerate (n, D) instances in a fixed order,
// compute omega for each, test the divisibility verdict, and stream
// machine-readable records. Instances are independent work items; a single
// ordered writer keeps the output byte-stable no matter how many workers run.

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "icg/omega.hpp"

namespace icg {

enum class ReportFormat { jsonl, csv };

struct ScanRecord {
  u64 n = 0;
  std::vector<u64> divisors;
  std::optional<u64> omega;  // absent for bounds-only records
  std::string method;
  u64 lower = 1;
  u64 upper = 0;
  std::optional<bool> divides_n;
  std::optional<bool> agree;
  std::optional<std::vector<u64>> witness;
  std::optional<double> elapsed_ms;
  bool budget_exhausted = false;

  bool is_counterexample() const { return omega.has_value() && divides_n.has_value() && !*divides_n; }
};

struct RecordOptions {
  bool include_witness = false;  // counterexample records always carry one
  bool include_timing = false;   // timing breaks byte-identical reruns, so it is opt-in
};

inline ScanRecord check_instance(u64 n, const std::vector<u64>& divisors, const OmegaOptions& oopt = {},
                                 const RecordOptions& ropt = {}) {
  const DivisorSet ds = validate_divisor_set(n, divisors);
  const auto t0 = std::chrono::steady_clock::now();
  const CliqueOutcome oc = omega(ds, oopt);
  const auto t1 = std::chrono::steady_clock::now();

  ScanRecord rec;
  rec.n = ds.n;
  rec.divisors = ds.divisors;
  rec.omega = oc.omega;
  rec.method = method_name(oc.method);
  rec.lower = oc.lower_bound;
  rec.upper = oc.upper_bound;
  rec.divides_n = oc.divides_n;
  rec.agree = oc.formula_exact_agree;
  rec.budget_exhausted = oc.budget_exhausted;
  if (oc.witness && (ropt.include_witness || rec.is_counterexample())) rec.witness = oc.witness->vertices;
  if (ropt.include_timing) rec.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rec;
}

// One line per record; optional keys are omitted, never null.
inline std::string to_jsonl(const ScanRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["divisors"] = r.divisors;
  if (r.omega) j["omega"] = *r.omega;
  j["method"] = r.method;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  if (r.divides_n) j["divides_n"] = *r.divides_n;
  if (r.agree) j["agree"] = *r.agree;
  if (r.witness) j["witness"] = *r.witness;
  if (r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
  return j.dump();
}

inline std::string csv_header() { return "n,divisors,omega,method,lower,upper,divides_n,agree,witness,elapsed_ms"; }

inline std::string to_csv(const ScanRecord& r) {
  auto join = [](const std::vector<u64>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ';';
      s += std::to_string(xs[i]);
    }
    return s;
  };
  std::string line = std::to_string(r.n) + ',' + join(r.divisors) + ',';
  if (r.omega) line += std::to_string(*r.omega);
  line += ',' + r.method + ',' + std::to_string(r.lower) + ',' + std::to_string(r.upper) + ',';
  if (r.divides_n) line += *r.divides_n ? "true" : "false";
  line += ',';
  if (r.agree) line += *r.agree ? "true" : "false";
  line += ',';
  if (r.witness) line += join(*r.witness);
  line += ',';
  if (r.elapsed_ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *r.elapsed_ms);
    line += buf;
  }
  return line;
}

struct ScanConfig {
  u64 n_min = 2;
  u64 n_max = 100;
  u64 k_max = 4;
  bool connected_only = false;  // restrict to gcd(D) = 1
  ReportFormat format = ReportFormat::jsonl;
  u64 jobs = 1;
  bool summarize_counterexamples = false;  // one stderr line per refutation
  RecordOptions record;
  OmegaOptions omega_opts;
};

struct ScanSummary {
  u64 instances = 0;
  u64 counterexamples = 0;
  bool budget_exhausted = false;
};

struct ScanInstance {
  u64 n = 0;
  std::vector<u64> divisors;
};

// n ascending, divisor subsets in lexicographic order up to size k_max.
inline std::vector<ScanInstance> enumerate_instances(const ScanConfig& cfg) {
  std::vector<ScanInstance> out;
  if (cfg.k_max == 0) return out;
  for (u64 n = std::max<u64>(2, cfg.n_min); n <= cfg.n_max; ++n) {
    const std::vector<u64> divs = divisors_proper(n);
    std::vector<u64> cur;
    auto extend = [&](auto&& self, std::size_t start) -> void {
      for (std::size_t i = start; i < divs.size(); ++i) {
        cur.push_back(divs[i]);
        bool keep = true;
        if (cfg.connected_only) {
          u64 g = 0;
          for (u64 d : cur) g = std::gcd(g, d);
          keep = (g == 1);
        }
        if (keep) out.push_back({n, cur});
        if (cur.size() < cfg.k_max) self(self, i + 1);
        cur.pop_back();
      }
    };
    extend(extend, 0);
  }
  return out;
}

inline ScanSummary scan(const ScanConfig& cfg, std::ostream& out, std::ostream* err = nullptr) {
  const std::vector<ScanInstance> instances = enumerate_instances(cfg);
  ScanSummary sum;
  sum.instances = instances.size();
  if (cfg.format == ReportFormat::csv) out << csv_header() << '\n';

  auto emit = [&](const ScanRecord& rec) {
    out << (cfg.format == ReportFormat::jsonl ? to_jsonl(rec) : to_csv(rec)) << '\n';
    if (rec.budget_exhausted) sum.budget_exhausted = true;
    if (rec.is_counterexample()) {
      ++sum.counterexamples;
      if (cfg.summarize_counterexamples && err) {
        *err << "counterexample: omega(X_" << rec.n << "(";
        for (std::size_t i = 0; i < rec.divisors.size(); ++i) *err << (i ? "," : "") << rec.divisors[i];
        *err << ")) = " << *rec.omega << " does not divide " << rec.n << '\n';
      }
    }
  };

  const u64 jobs = std::max<u64>(1, cfg.jobs);
  if (jobs == 1 || instances.size() <= 1) {
    for (const auto& ins : instances) emit(check_instance(ins.n, ins.divisors, cfg.omega_opts, cfg.record));
    return sum;
  }

  std::vector<std::optional<ScanRecord>> results(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const std::size_t workers = static_cast<std::size_t>(std::min<u64>(jobs, instances.size()));
  for (std::size_t t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= instances.size()) return;
        ScanRecord rec;
        std::exception_ptr ep;
        try {
          rec = check_instance(instances[i].n, instances[i].divisors, cfg.omega_opts, cfg.record);
        } catch (...) {
          ep = std::current_exception();
        }
        {
          std::lock_guard lock(mu);
          errors[i] = ep;
          results[i] = std::move(rec);
        }
        cv.notify_all();
      }
    });

  std::exception_ptr first_error;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return results[i].has_value(); });
    if (!first_error && errors[i]) first_error = errors[i];
    ScanRecord rec = std::move(*results[i]);
    results[i].reset();
    lock.unlock();
    if (!first_error) emit(rec);
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return sum;
}

// The X_{20p}(1, 4, 10) family: for any prime p > 20 the instance reduces
// to X_20(1, 4, 10), so omega = 6 while 6 never divides 20p.
inline std::vector<ScanRecord> counterexample_family(const std::vector<u64>& primes, const OmegaOptions& oopt = {},
                                                     const RecordOptions& ropt = {}) {
  std::vector<ScanRecord> out;
  out.reserve(primes.size());
  for (u64 p : primes) {
    if (p <= 20) throw std::invalid_argument("counterexample_family: prime must be greater than 20");
    if (!is_prime(p)) throw std::invalid_argument("counterexample_family: " + std::to_string(p) + " is not prime");
    out.push_back(check_instance(20 * p, {1, 4, 10}, oopt, ropt));
    if (!out.back().is_counterexample())
      throw std::logic_error("counterexample_family: instance unexpectedly satisfies the conjecture");
  }
  return out;
}

inline u64 vertex_cap_from_env(u64 fallback = kDefaultVertexCap) {
  if (const char* s = std::getenv("ICG_VERTEX_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && *end == '\0' && v >= 2) return static_cast<u64>(v);
  }
  return fallback;
}

}  // namespace icg
