#include "swscan/oracle.hpp"

#include <algorithm>
#include <vector>

#include "swscan/error.hpp"

namespace swscan {

namespace {

void check_symbols(const EncodedSequence& seq, const ScoringScheme& scheme) {
  for (Symbol s : seq)
    if (s >= scheme.alphabet_size())
      throw Error(ErrorCode::kSymbolOutOfAlphabet, "symbol outside the alphabet");
}

}  // namespace

ScalarResult sw_scalar(const EncodedSequence& query, const EncodedSequence& ref,
                       const ScoringScheme& scheme) {
  check_symbols(query, scheme);
  check_symbols(ref, scheme);
  const std::int64_t open = scheme.gap_open();
  const std::int64_t ext = scheme.gap_extend();

  ScalarResult r;
  DpMatrices& m = r.matrices;
  m.rows = ref.size() + 1;
  m.cols = query.size() + 1;
  m.H.assign(m.rows * m.cols, 0);
  m.E.assign(m.rows * m.cols, 0);
  m.F.assign(m.rows * m.cols, 0);

  for (std::size_t i = 1; i < m.rows; ++i) {
    for (std::size_t q = 1; q < m.cols; ++q) {
      const std::size_t at = i * m.cols + q;
      const std::size_t up = (i - 1) * m.cols + q;     // previous reference position
      const std::size_t left = i * m.cols + q - 1;     // previous query position
      const std::size_t diag = (i - 1) * m.cols + q - 1;
      m.E[at] = std::max<std::int64_t>({0, m.E[up] - ext, m.H[up] - open});
      m.F[at] = std::max<std::int64_t>({0, m.F[left] - ext, m.H[left] - open});
      m.H[at] = std::max<std::int64_t>(
          {0, m.H[diag] + scheme.substitution(ref[i - 1], query[q - 1]), m.E[at], m.F[at]});
      r.score = std::max(r.score, m.H[at]);
    }
  }
  r.overflow = r.score > kScoreMax;
  return r;
}

std::int64_t sw_scalar_score(const EncodedSequence& query, const EncodedSequence& ref,
                             const ScoringScheme& scheme) {
  check_symbols(query, scheme);
  check_symbols(ref, scheme);
  const std::int64_t open = scheme.gap_open();
  const std::int64_t ext = scheme.gap_extend();
  const std::size_t cols = query.size() + 1;

  std::vector<std::int64_t> h_prev(cols, 0), h_cur(cols, 0), e(cols, 0);
  std::int64_t best = 0;
  for (Symbol r : ref) {
    std::int64_t f = 0;
    h_cur[0] = 0;
    for (std::size_t q = 1; q < cols; ++q) {
      e[q] = std::max<std::int64_t>({0, e[q] - ext, h_prev[q] - open});
      f = std::max<std::int64_t>({0, f - ext, h_cur[q - 1] - open});
      h_cur[q] = std::max<std::int64_t>(
          {0, h_prev[q - 1] + scheme.substitution(r, query[q - 1]), e[q], f});
      best = std::max(best, h_cur[q]);
    }
    std::swap(h_prev, h_cur);
  }
  return best;
}

void correct_lazyf_full(ScoreVector f, std::span<ScoreVector> hstore, Score gap_extend,
                        VectorSpec spec) {
  const std::size_t p = spec.lanes();
  if (f.lanes() != p) throw Error(ErrorCode::kInvalidLanes, "F lane count mismatch");
  for (const ScoreVector& h : hstore)
    if (h.lanes() != p) throw Error(ErrorCode::kInvalidLanes, "HStore lane count mismatch");
  for (std::size_t k = 1; k <= p; ++k) {
    for (std::size_t l = p; l-- > 1;) f[l] = f[l - 1];
    f[0] = 0;
    for (ScoreVector& h : hstore) {
      for (std::size_t l = 0; l < p; ++l) {
        h[l] = std::max(h[l], f[l]);
        f[l] = f[l] > gap_extend ? static_cast<Score>(f[l] - gap_extend) : Score{0};
      }
    }
  }
}

ScoreVector scan_sequential(ScoreVector f, std::uint64_t decay, VectorSpec spec) {
  const std::size_t p = spec.lanes();
  if (f.lanes() != p) throw Error(ErrorCode::kInvalidLanes, "F lane count mismatch");
  ScoreVector fj(p);
  for (std::size_t k = 1; k <= p; ++k) {
    for (std::size_t l = p; l-- > 1;) f[l] = f[l - 1];
    f[0] = 0;
    for (std::size_t l = 0; l < p; ++l) {
      fj[l] = std::max(fj[l], f[l]);
      f[l] = f[l] > decay ? static_cast<Score>(f[l] - decay) : Score{0};
    }
  }
  return fj;
}

}  // namespace swscan
