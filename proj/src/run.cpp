#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <thread>

#include "swscan/error.hpp"
#include "swscan/harness.hpp"
#include "swscan/oracle.hpp"

namespace swscan {

const char* to_string(KernelKind kind) {
  switch (kind) {
    case KernelKind::kScalar: return "scalar";
    case KernelKind::kLazyF: return "lazyf";
    case KernelKind::kLazyFNoExit: return "lazyf-noexit";
    case KernelKind::kScan: return "scan";
  }
  return "?";
}

std::optional<KernelKind> parse_kernel(const std::string& name) {
  for (auto k : {KernelKind::kScalar, KernelKind::kLazyF, KernelKind::kLazyFNoExit, KernelKind::kScan})
    if (name == to_string(k)) return k;
  return std::nullopt;
}

void validate(const RunConfig& config) {
  const VectorSpec spec(config.lanes);
  if (config.kernel != KernelKind::kScalar && !backend_available(config.backend, spec))
    throw Error(ErrorCode::kInvalidConfig, "backend not available for " +
                                               std::to_string(config.lanes) + " lanes");
  if (config.gap_extend < 1 || config.gap_open < config.gap_extend)
    throw Error(ErrorCode::kInvalidScoring, "need gap_open >= gap_extend >= 1");
  if (!config.matrix_path) {
    if (config.match < -127 || config.match > 127 || config.mismatch < -127 || config.mismatch > 127)
      throw Error(ErrorCode::kInvalidScoring, "match/mismatch outside [-127, 127]");
  }
  if (config.bench_repeats < 1) throw Error(ErrorCode::kInvalidConfig, "--bench must be at least 1");
  if (config.threads < 1) throw Error(ErrorCode::kInvalidConfig, "--threads must be at least 1");
  if (config.random) {
    if (config.query_path || config.target_path)
      throw Error(ErrorCode::kInvalidConfig, "--random excludes --query/--target");
    if (config.random->len_min < 1 || config.random->len_min > config.random->len_max)
      throw Error(ErrorCode::kInvalidConfig, "need 1 <= --len-min <= --len-max");
  } else if (!config.query_path || !config.target_path) {
    throw Error(ErrorCode::kInvalidConfig, "need --query and --target, or --random");
  }
}

namespace {

struct Timed {
  AlignmentResult result;
  std::uint64_t ns = 0;
};

template <class Fn>
Timed timed_min(std::size_t repeats, Fn&& fn) {
  Timed best;
  for (std::size_t r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    AlignmentResult res = fn();
    const auto t1 = std::chrono::steady_clock::now();
    const auto ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    if (r == 0 || ns < best.ns) best.ns = ns;
    best.result = std::move(res);
  }
  return best;
}

PairReport align_one(const RunConfig& config, const SequencePair& pair,
                     const EncodedSequence& query, const EncodedSequence& target,
                     const QueryProfile* profile, const ScoringScheme& scheme) {
  PairReport row;
  row.query_id = pair.query.id;
  row.target_id = pair.target.id;

  if (config.kernel == KernelKind::kScalar) {
    std::int64_t score = 0;
    const Timed t = timed_min(config.bench_repeats, [&] {
      score = sw_scalar_score(query, target, scheme);
      return AlignmentResult{};
    });
    row.score = static_cast<std::uint64_t>(score);
    row.overflow = score > kScoreMax;
    row.time_ns = t.ns;
    return row;
  }

  const Timed t = timed_min(config.bench_repeats, [&] {
    switch (config.kernel) {
      case KernelKind::kLazyF: return align_lazyf(*profile, target, scheme, true, config.backend);
      case KernelKind::kLazyFNoExit:
        return align_lazyf(*profile, target, scheme, false, config.backend);
      default: return align_scan(*profile, target, scheme, config.backend);
    }
  });
  row.score = t.result.score;
  row.overflow = t.result.overflow;
  row.time_ns = t.ns;
  row.vec_ops_total = t.result.counters.total();
  row.correction_passes = t.result.correction_passes;
  return row;
}

ScoringScheme make_scheme(const RunConfig& config, Alphabet& alphabet) {
  if (config.matrix_path) {
    MatrixFile m = load_matrix(*config.matrix_path);
    alphabet = m.alphabet;
    return ScoringScheme(alphabet.size(), std::move(m.scores), config.gap_open, config.gap_extend);
  }
  alphabet = Alphabet::dna();
  return ScoringScheme::match_mismatch(alphabet, config.match, config.mismatch, config.gap_open,
                                       config.gap_extend);
}

std::vector<SequencePair> load_pairs(const RunConfig& config, const Alphabet& alphabet) {
  if (config.random) return generate_pairs(*config.random, alphabet);
  const auto queries = read_fasta(*config.query_path, alphabet);
  const auto targets = read_fasta(*config.target_path, alphabet);
  std::vector<SequencePair> pairs;
  if (config.pairs == PairMode::kZip) {
    if (queries.size() != targets.size())
      throw Error(ErrorCode::kInvalidConfig, "--pairs zip needs equal record counts (" +
                                                 std::to_string(queries.size()) + " vs " +
                                                 std::to_string(targets.size()) + ")");
    for (std::size_t i = 0; i < queries.size(); ++i) pairs.push_back({queries[i], targets[i]});
  } else {
    for (const auto& q : queries)
      for (const auto& t : targets) pairs.push_back({q, t});
  }
  return pairs;
}

}  // namespace

std::vector<PairReport> align_pairs(const RunConfig& config, const std::vector<SequencePair>& pairs,
                                    const Alphabet& alphabet, const ScoringScheme& scheme) {
  const VectorSpec spec(config.lanes);

  // Encode and build profiles up front; workers only read them.
  std::vector<EncodedSequence> queries, targets;
  std::vector<const QueryProfile*> profile_of(pairs.size(), nullptr);
  std::map<std::string, std::unique_ptr<QueryProfile>> profiles;
  queries.reserve(pairs.size());
  targets.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    queries.push_back(alphabet.encode(pairs[i].query.sequence));
    targets.push_back(alphabet.encode(pairs[i].target.sequence));
    if (config.kernel == KernelKind::kScalar) continue;
    auto& slot = profiles[pairs[i].query.sequence];
    if (!slot) slot = std::make_unique<QueryProfile>(queries.back(), scheme, spec);
    profile_of[i] = slot.get();
  }

  std::vector<PairReport> rows(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++)
      rows[i] = align_one(config, pairs[i], queries[i], targets[i], profile_of[i], scheme);
  };
  const std::size_t workers = std::min(config.threads, std::max<std::size_t>(pairs.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return rows;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    Alphabet alphabet = Alphabet::dna();
    const ScoringScheme scheme = make_scheme(config, alphabet);
    const auto pairs = load_pairs(config, alphabet);
    const auto rows = align_pairs(config, pairs, alphabet, scheme);

    std::ofstream file;
    std::ostream* os = &out;
    if (config.out_path) {
      file.open(*config.out_path, std::ios::binary);
      if (!file) throw Error(ErrorCode::kIo, "cannot write " + *config.out_path);
      os = &file;
    }
    *os << kTsvHeader << '\n';
    for (const auto& r : rows) {
      *os << r.query_id << '\t' << r.target_id << '\t' << to_string(config.kernel) << '\t'
          << config.lanes << '\t' << r.score << '\t' << (r.overflow ? 1 : 0) << '\t' << r.time_ns
          << '\t' << r.vec_ops_total << '\t' << r.correction_passes << '\n';
    }
    if (config.random) *os << "# seed=" << config.random->seed << '\n';
    os->flush();
    if (!*os) throw Error(ErrorCode::kIo, "write failed");
    return 0;
  } catch (const Error& e) {
    err << "swscan: " << to_string(e.code()) << ": " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "swscan: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace swscan
