// Batch Smith-Waterman scoring with striped lazy-F and scan kernels.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "swscan/harness.hpp"

int main(int argc, char** argv) {
  using namespace swscan;

  CLI::App app{"Striped Smith-Waterman local alignment scores with operation counters"};
  RunConfig cfg;

  std::string kernel = "scan";
  std::string pairs = "all-vs-all";
  std::string backend = "reference";
  std::size_t random_count = 0;
  GeneratorParams gen;

  app.add_option("--kernel", kernel, "scalar | lazyf | lazyf-noexit | scan")
      ->check(CLI::IsMember({"scalar", "lazyf", "lazyf-noexit", "scan"}))
      ->capture_default_str();
  app.add_option("--lanes", cfg.lanes, "vector lanes p (power of two, 2..64)")->capture_default_str();
  app.add_option("--backend", backend, "reference | sse2 (sse2 needs --lanes 8)")
      ->check(CLI::IsMember({"reference", "sse2"}))
      ->capture_default_str();
  app.add_option("--match", cfg.match, "match score")->capture_default_str();
  app.add_option("--mismatch", cfg.mismatch, "mismatch score")->capture_default_str();
  auto* matrix = app.add_option("--matrix", "substitution matrix file")->check(CLI::ExistingFile);
  app.add_option("--gap-open", cfg.gap_open, "cost of a gap's first position")->capture_default_str();
  app.add_option("--gap-extend", cfg.gap_extend, "cost of each further gap position")
      ->capture_default_str();
  auto* query = app.add_option("--query", "query FASTA");
  auto* target = app.add_option("--target", "target FASTA");
  app.add_option("--pairs", pairs, "all-vs-all | zip")
      ->check(CLI::IsMember({"all-vs-all", "zip"}))
      ->capture_default_str();
  auto* random = app.add_option("--random", random_count, "align N generated pairs instead of files");
  app.add_option("--len-min", gen.len_min, "shortest generated sequence")->capture_default_str();
  app.add_option("--len-max", gen.len_max, "longest generated sequence")->capture_default_str();
  app.add_option("--seed", gen.seed, "generator seed")->capture_default_str();
  auto* out = app.add_option("--out", "write TSV here instead of stdout");
  app.add_option("--bench", cfg.bench_repeats, "repeat each pair R times, report the minimum time")
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "worker threads")->capture_default_str();

  random->excludes(query)->excludes(target);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  cfg.kernel = *parse_kernel(kernel);
  cfg.pairs = pairs == "zip" ? PairMode::kZip : PairMode::kAllVsAll;
  cfg.backend = backend == "sse2" ? BackendKind::kSse2 : BackendKind::kReference;
  if (*matrix) cfg.matrix_path = matrix->as<std::string>();
  if (*query) cfg.query_path = query->as<std::string>();
  if (*target) cfg.target_path = target->as<std::string>();
  if (*out) cfg.out_path = out->as<std::string>();
  if (*random) {
    gen.count = random_count;
    cfg.random = gen;
  }
  return run(cfg, std::cout, std::cerr);
}
