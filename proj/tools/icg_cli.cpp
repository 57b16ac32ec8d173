// icg - clique numbers of integral circulant graphs (gcd-graphs) X_n(D).
//
// Subcommands:
//   clique   compute omega for a single instance
//   scan     sweep (n, D) instances and stream JSONL/CSV records
//   family   the X_{20p}(1,4,10) counterexample family
//   export   write a graph as an edge list or DOT
//
// Exit codes: 0 ok, 2 validation error, 3 a node budget was exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "icg/icg.hpp"

namespace {

struct CliqueArgs {
  icg::u64 n = 0;
  std::vector<icg::u64> divisors;
  std::string method = "auto";
  bool witness = false;
  bool cross_check = false;
  icg::u64 cross_check_cap = icg::kDefaultCrossCheckCap;
  bool timing = false;
  icg::u64 budget = icg::kDefaultNodeBudget;
};

struct ScanArgs {
  icg::u64 n_min = 2;
  icg::u64 n_max = 100;
  icg::u64 k_max = 4;
  bool connected_only = false;
  icg::u64 jobs = 1;
  std::string format = "jsonl";
  bool check_divides = false;
  std::string method = "auto";
  bool witness = false;
  bool cross_check = false;
  icg::u64 cross_check_cap = icg::kDefaultCrossCheckCap;
  bool timing = false;
  icg::u64 budget = icg::kDefaultNodeBudget;
  std::string output;
};

struct FamilyArgs {
  std::vector<icg::u64> primes;
  bool timing = false;
};

struct ExportArgs {
  icg::u64 n = 0;
  std::vector<icg::u64> divisors;
  std::string format = "edgelist";
  std::string output;
};

icg::Policy parse_policy(const std::string& s) {
  if (s == "formula") return icg::Policy::formula_only;
  if (s == "exact") return icg::Policy::exact_only;
  return icg::Policy::automatic;
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file: " + path);
  return file;
}

void print_counterexample(std::ostream& err, const icg::ScanRecord& rec) {
  err << "counterexample: omega(X_" << rec.n << "(";
  for (std::size_t i = 0; i < rec.divisors.size(); ++i) err << (i ? "," : "") << rec.divisors[i];
  err << ")) = " << *rec.omega << " does not divide " << rec.n << '\n';
}

int run_clique(const CliqueArgs& a) {
  icg::OmegaOptions opts;
  opts.policy = parse_policy(a.method);
  opts.vertex_cap = icg::vertex_cap_from_env();
  opts.node_budget = a.budget;
  if (a.cross_check) opts.cross_check_cap = a.cross_check_cap;
  icg::RecordOptions ropt{a.witness, a.timing};
  const icg::ScanRecord rec = icg::check_instance(a.n, a.divisors, opts, ropt);
  std::cout << icg::to_jsonl(rec) << '\n';
  if (rec.is_counterexample()) print_counterexample(std::cerr, rec);
  return rec.budget_exhausted ? 3 : 0;
}

int run_scan(const ScanArgs& a) {
  icg::ScanConfig cfg;
  cfg.n_min = a.n_min;
  cfg.n_max = a.n_max;
  cfg.k_max = a.k_max;
  cfg.connected_only = a.connected_only;
  cfg.format = a.format == "csv" ? icg::ReportFormat::csv : icg::ReportFormat::jsonl;
  cfg.jobs = a.jobs;
  cfg.summarize_counterexamples = a.check_divides;
  cfg.record = {a.witness, a.timing};
  cfg.omega_opts.policy = parse_policy(a.method);
  cfg.omega_opts.vertex_cap = icg::vertex_cap_from_env();
  cfg.omega_opts.node_budget = a.budget;
  if (a.cross_check) cfg.omega_opts.cross_check_cap = a.cross_check_cap;

  std::ofstream file;
  std::ostream& out = open_sink(a.output, file);
  const icg::ScanSummary sum = icg::scan(cfg, out, &std::cerr);
  if (a.check_divides)
    std::cerr << "scan: " << sum.instances << " instances, " << sum.counterexamples << " counterexamples\n";
  return sum.budget_exhausted ? 3 : 0;
}

int run_family(const FamilyArgs& a) {
  icg::OmegaOptions opts;
  opts.vertex_cap = icg::vertex_cap_from_env();
  icg::RecordOptions ropt{true, a.timing};
  const auto records = icg::counterexample_family(a.primes, opts, ropt);
  for (const auto& rec : records) {
    std::cout << icg::to_jsonl(rec) << '\n';
    print_counterexample(std::cerr, rec);
  }
  return 0;
}

int run_export(const ExportArgs& a) {
  const icg::DivisorSet ds = icg::validate_divisor_set(a.n, a.divisors);
  const icg::GcdGraph g = icg::build_graph(ds, icg::vertex_cap_from_env());
  const auto format = (a.format == "dot") ? icg::GraphFormat::dot : icg::GraphFormat::edge_list;
  std::ofstream file;
  std::ostream& out = open_sink(a.output, file);
  out << icg::export_graph(g, format);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clique numbers of integral circulant graphs (gcd-graphs) X_n(D)"};
  app.require_subcommand(1);

  CliqueArgs ca;
  auto* clique = app.add_subcommand("clique", "compute the clique number of one instance");
  clique->add_option("n", ca.n, "number of vertices")->required();
  clique->add_option("-D,--divisors", ca.divisors, "proper divisors of n")->required()->delimiter(',');
  clique->add_option("--method", ca.method, "auto | formula | exact")
      ->check(CLI::IsMember({"auto", "formula", "exact"}));
  clique->add_flag("--witness", ca.witness, "include the clique witness in the record");
  clique->add_flag("--cross-check", ca.cross_check, "re-prove formula results with the exact solver");
  clique->add_option("--cross-check-cap", ca.cross_check_cap, "largest n the cross-check solves");
  clique->add_flag("--timing", ca.timing, "include elapsed_ms (breaks byte-identical reruns)");
  clique->add_option("--budget", ca.budget, "solver node budget per instance");

  ScanArgs sa;
  auto* scan = app.add_subcommand("scan", "sweep (n, D) instances and emit one record per line");
  scan->add_option("--n-min", sa.n_min, "smallest n");
  scan->add_option("--n-max", sa.n_max, "largest n");
  scan->add_option("--k-max", sa.k_max, "largest divisor-set size");
  scan->add_flag("--connected-only", sa.connected_only, "only gcd(D) = 1 instances");
  scan->add_option("--jobs,-j", sa.jobs, "worker threads (output order is fixed regardless)");
  scan->add_option("--format", sa.format, "jsonl | csv")->check(CLI::IsMember({"jsonl", "csv"}));
  scan->add_flag("--check-divides", sa.check_divides, "summarize divisibility counterexamples on stderr");
  scan->add_option("--method", sa.method, "auto | formula | exact")
      ->check(CLI::IsMember({"auto", "formula", "exact"}));
  scan->add_flag("--witness", sa.witness, "include witnesses in every record");
  scan->add_flag("--cross-check", sa.cross_check, "re-prove formula results with the exact solver");
  scan->add_option("--cross-check-cap", sa.cross_check_cap, "largest n the cross-check solves");
  scan->add_flag("--timing", sa.timing, "include elapsed_ms (breaks byte-identical reruns)");
  scan->add_option("--budget", sa.budget, "solver node budget per instance");
  scan->add_option("-o,--output", sa.output, "write records to a file instead of stdout");

  FamilyArgs fa;
  auto* family = app.add_subcommand("family", "counterexamples X_{20p}(1,4,10) for primes p > 20");
  family->add_option("--primes", fa.primes, "primes greater than 20")->required()->delimiter(',');
  family->add_flag("--timing", fa.timing, "include elapsed_ms");

  ExportArgs ea;
  auto* exporter = app.add_subcommand("export", "write the graph as an edge list or DOT");
  exporter->add_option("n", ea.n, "number of vertices")->required();
  exporter->add_option("-D,--divisors", ea.divisors, "proper divisors of n")->required()->delimiter(',');
  exporter->add_option("--format", ea.format, "edgelist | dot")
      ->check(CLI::IsMember({"edgelist", "edge-list", "dot"}));
  exporter->add_option("-o,--output", ea.output, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (clique->parsed()) return run_clique(ca);
    if (scan->parsed()) return run_scan(sa);
    if (family->parsed()) return run_family(fa);
    if (exporter->parsed()) return run_export(ea);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
