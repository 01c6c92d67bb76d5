#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "swscan/alphabet.hpp"
#include "swscan/scoring.hpp"
#include "swscan/vector.hpp"

namespace swscan {

/// Full affine-gap DP tables, (ref_len + 1) x (query_len + 1), row i for
/// reference position i and column q for query position q.
///
/// E carries gaps along the reference (horizontal, across reference
/// positions); F carries gaps along the query within one reference
/// position, which is the direction the striped kernels propagate F.
struct DpMatrices {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> H, E, F;

  std::int64_t h(std::size_t i, std::size_t q) const { return H[i * cols + q]; }
  std::int64_t e(std::size_t i, std::size_t q) const { return E[i * cols + q]; }
  std::int64_t f(std::size_t i, std::size_t q) const { return F[i * cols + q]; }
};

struct ScalarResult {
  std::int64_t score = 0;
  /// score does not fit in an unsigned 16-bit lane.
  bool overflow = false;
  DpMatrices matrices;
};

/// Gotoh local alignment with exact integers, keeping all three tables.
ScalarResult sw_scalar(const EncodedSequence& query, const EncodedSequence& ref,
                       const ScoringScheme& scheme);

/// Same recurrences in linear memory; score only.
std::int64_t sw_scalar_score(const EncodedSequence& query,
                             const EncodedSequence& ref,
                             const ScoringScheme& scheme);

/// Full p-pass lazy-F propagation with no early exit:
///   for k in 1..p { F <<= 1; for j { HStore[j] = max(HStore[j], F); F -= ext } }
/// Written lane by lane in plain integers, independent of any backend.
void correct_lazyf_full(ScoreVector f, std::span<ScoreVector> hstore,
                        Score gap_extend, VectorSpec spec);

/// Sequential weighted max-scan:
///   Fj = 0; for k in 1..p { F <<= 1; Fj = max(Fj, F); F -= d }
ScoreVector scan_sequential(ScoreVector f, std::uint64_t decay, VectorSpec spec);

}  // namespace swscan
