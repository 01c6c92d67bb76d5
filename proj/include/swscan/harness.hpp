#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "swscan/alphabet.hpp"
#include "swscan/kernels.hpp"

namespace swscan {

struct FastaRecord {
  std::string id;
  std::string description;
  std::string sequence;
};

/// Records in file order. Blank lines are skipped, CRLF and LF both accepted,
/// residues are upper-cased. Throws kMalformedFasta on data before the first
/// header, an empty sequence, or a residue outside `alphabet`.
std::vector<FastaRecord> parse_fasta(std::istream& in, const Alphabet& alphabet);
std::vector<FastaRecord> read_fasta(const std::string& path, const Alphabet& alphabet);

struct SequencePair {
  FastaRecord query;
  FastaRecord target;
};

struct GeneratorParams {
  std::size_t count = 0;
  std::size_t len_min = 1;
  std::size_t len_max = 256;
  std::uint64_t seed = 1;
};

/// Deterministic random pairs: mt19937_64 seeded with `seed`, bounded draws
/// by rejection sampling on the raw 64-bit output. Residues come from the
/// alphabet's regular symbols. Ids are q<n> and t<n>.
std::vector<SequencePair> generate_pairs(const GeneratorParams& params,
                                         const Alphabet& alphabet);

/// Uniform draw in [lo, hi] from the raw engine output.
std::uint64_t bounded_draw(std::mt19937_64& engine, std::uint64_t lo, std::uint64_t hi);

enum class KernelKind { kScalar, kLazyF, kLazyFNoExit, kScan };

const char* to_string(KernelKind kind);
std::optional<KernelKind> parse_kernel(const std::string& name);

enum class PairMode { kAllVsAll, kZip };

struct RunConfig {
  KernelKind kernel = KernelKind::kScan;
  std::size_t lanes = 8;
  BackendKind backend = BackendKind::kReference;
  int match = 2;
  int mismatch = -3;
  std::optional<std::string> matrix_path;
  int gap_open = 5;
  int gap_extend = 2;
  std::optional<std::string> query_path;
  std::optional<std::string> target_path;
  PairMode pairs = PairMode::kAllVsAll;
  std::optional<GeneratorParams> random;
  std::optional<std::string> out_path;
  std::size_t bench_repeats = 1;
  std::size_t threads = 1;
};

/// One output row before formatting.
struct PairReport {
  std::string query_id;
  std::string target_id;
  std::uint64_t score = 0;
  bool overflow = false;
  std::uint64_t time_ns = 0;
  std::uint64_t vec_ops_total = 0;
  std::uint64_t correction_passes = 0;
};

inline constexpr const char* kTsvHeader =
    "query_id\ttarget_id\tkernel\tlanes\tscore\toverflow\ttime_ns\tvec_ops_total\t"
    "correction_passes";

/// Checks the config against scoring and lane constraints; throws
/// kInvalidConfig, kInvalidScoring or kInvalidLanes.
void validate(const RunConfig& config);

/// Aligns every pair the config describes and returns rows in input order.
std::vector<PairReport> align_pairs(const RunConfig& config,
                                    const std::vector<SequencePair>& pairs,
                                    const Alphabet& alphabet, const ScoringScheme& scheme);

/// Loads inputs, aligns, writes the TSV. Returns the process exit status;
/// errors are reported as one line on `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace swscan
