#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "swscan/alphabet.hpp"
#include "swscan/error.hpp"
#include "swscan/profile.hpp"
#include "swscan/scoring.hpp"
#include "swscan/vector.hpp"

namespace swscan {

struct AlignmentResult {
  Score score = 0;
  /// A lane saturated at kScoreMax; score is then not trustworthy.
  bool overflow = false;
  OpCounters counters;
  /// Operations spent in the cross-lane correction phase only (the lazy-F
  /// loop, or the log-step scan).
  OpCounters correction;
  /// Lazy-F passes started, or scan steps taken, summed over columns.
  std::uint64_t correction_passes = 0;
  /// The same quantity per reference column.
  std::vector<std::uint32_t> column_passes;
};

/// kReference runs the reference arithmetic at a compile-time lane count;
/// kDynamicReference runs ReferenceBackend itself, with the lane count
/// chosen at run time. Both give identical results and counters.
enum class BackendKind { kReference, kDynamicReference, kSse2 };

bool backend_available(BackendKind kind, VectorSpec spec);

// ---------------------------------------------------------------------------
// Correction routines. All share one contract: given the vertical-gap vector
// F left by the segment loop and the column's HStore, leave HStore exactly as
// the full p-pass lazy-F loop would.
// ---------------------------------------------------------------------------

/// Stores the propagated F per segment, then applies it in one pass over H.
template <VectorBackend B>
void correct_separated(B& be, typename B::Vector f,
                       std::span<typename B::Vector> hstore, Score gap_extend) {
  const std::size_t p = be.spec().lanes();
  std::vector<typename B::Vector> fstore(hstore.size(), be.splat(0));
  for (std::size_t k = 1; k <= p; ++k) {
    f = be.shift_lanes_up(f, 1);
    for (auto& slot : fstore) {
      be.store(slot, be.vmax(be.load(slot), f));
      f = be.sat_sub(f, gap_extend);
    }
  }
  for (std::size_t j = 0; j < hstore.size(); ++j)
    be.store(hstore[j], be.vmax(be.load(hstore[j]), be.load(fstore[j])));
}

/// Loop-inverted form: each segment runs its own p-step shift chain with a
/// per-step decay of seg_len * gap_extend.
template <VectorBackend B>
void correct_inverted(B& be, typename B::Vector f,
                      std::span<typename B::Vector> hstore, Score gap_extend) {
  const std::size_t p = be.spec().lanes();
  const Score step = clamp_score(std::uint64_t{hstore.size()} * gap_extend);
  std::vector<typename B::Vector> fstore(hstore.size(), be.splat(0));
  for (auto& slot : fstore) {
    auto fj = f;
    for (std::size_t k = 1; k <= p; ++k) {
      fj = be.shift_lanes_up(fj, 1);
      be.store(slot, be.vmax(be.load(slot), fj));
      fj = be.sat_sub(fj, step);
    }
    f = be.sat_sub(f, gap_extend);
  }
  for (std::size_t j = 0; j < hstore.size(); ++j)
    be.store(hstore[j], be.vmax(be.load(hstore[j]), be.load(fstore[j])));
}

/// One p-step chain computes the lane carry; segment j then receives the
/// carry minus j * gap_extend.
template <VectorBackend B>
void correct_scan(B& be, typename B::Vector f, std::span<typename B::Vector> hstore,
                  Score gap_extend) {
  const std::size_t p = be.spec().lanes();
  const Score step = clamp_score(std::uint64_t{hstore.size()} * gap_extend);
  auto fj = be.splat(0);
  for (std::size_t k = 1; k <= p; ++k) {
    f = be.shift_lanes_up(f, 1);
    fj = be.vmax(fj, f);
    f = be.sat_sub(f, step);
  }
  for (auto& slot : hstore) {
    be.store(slot, be.vmax(be.load(slot), fj));
    fj = be.sat_sub(fj, gap_extend);
  }
}

/// Log-step (Kogge-Stone) weighted prefix max over lanes:
///   A = F << 1; for s = 1, 2, 4, ... < p: A = max(A, (A << s) - s*d)
/// Lane l of the result is max over k in 1..l of F[l-k] - (k-1)*d, floored
/// at zero, which is what the sequential p-step loop produces.
template <VectorBackend B>
typename B::Vector weighted_max_scan(B& be, const typename B::Vector& f,
                                     std::uint64_t decay) {
  const std::size_t p = be.spec().lanes();
  auto acc = be.shift_lanes_up(f, 1);
  for (std::size_t s = 1; s < p; s *= 2)
    acc = be.vmax(acc, be.sat_sub(be.shift_lanes_up(acc, s), clamp_score(s * decay)));
  return acc;
}

namespace detail {

inline void check_profile(const QueryProfile& profile, const ScoringScheme& scheme,
                          VectorSpec spec) {
  if (!(profile.scheme() == scheme))
    throw Error(ErrorCode::kProfileMismatch, "profile was built for a different scoring scheme");
  if (!(profile.spec() == spec))
    throw Error(ErrorCode::kProfileMismatch, "profile lane count does not match the backend");
}

/// E, double-buffered H and the running max, all zero before the first
/// reference position.
template <VectorBackend B>
struct KernelState {
  using Vector = typename B::Vector;

  KernelState(B& be, std::size_t seg_len)
      : e(seg_len, be.splat(0)),
        h_load(seg_len, be.splat(0)),
        h_store(seg_len, be.splat(0)),
        max(be.splat(0)) {}

  std::vector<Vector> e;
  std::vector<Vector> h_load;
  std::vector<Vector> h_store;
  Vector max;
};

inline void check_ref(const QueryProfile& profile, const EncodedSequence& ref) {
  for (Symbol s : ref)
    if (s >= profile.scheme().alphabet_size())
      throw Error(ErrorCode::kSymbolOutOfAlphabet, "reference symbol outside the alphabet");
}

}  // namespace detail

/// Striped kernel with the lazy-F correction loop.
///
/// With early_exit the loop stops as soon as, in every lane, the decayed F
/// is no larger than the cell's pre-correction H minus gap_open: from there
/// on the segment loop's own F chain already dominates it. Without
/// early_exit all p passes run.
template <VectorBackend B>
AlignmentResult align_lazyf(B& be, const QueryProfile& profile,
                            const EncodedSequence& ref, bool early_exit) {
  using Vector = typename B::Vector;
  detail::check_profile(profile, profile.scheme(), be.spec());
  detail::check_ref(profile, ref);

  const ScoringScheme& scheme = profile.scheme();
  const std::size_t seg_len = profile.seg_len();
  const std::size_t p = be.spec().lanes();
  const Score bias = static_cast<Score>(scheme.bias());
  const Score gap_open = static_cast<Score>(scheme.gap_open());
  const Score gap_extend = static_cast<Score>(scheme.gap_extend());

  AlignmentResult result;
  result.column_passes.reserve(ref.size());
  detail::KernelState<B> st(be, seg_len);

  for (Symbol c : ref) {
    const auto prof = profile.vectors(c);
    Vector f = be.splat(0);
    Vector h = be.shift_lanes_up(be.load(st.h_store[seg_len - 1]), 1);
    std::swap(st.h_load, st.h_store);

    for (std::size_t j = 0; j < seg_len; ++j) {
      h = be.sat_sub(be.sat_add(h, be.load_profile(prof[j])), bias);
      st.max = be.vmax(st.max, h);
      Vector e = be.load(st.e[j]);
      h = be.vmax(h, e);
      h = be.vmax(h, f);
      be.store(st.h_store[j], h);

      h = be.sat_sub(h, gap_open);
      e = be.vmax(be.sat_sub(e, gap_extend), h);
      be.store(st.e[j], e);
      f = be.vmax(be.sat_sub(f, gap_extend), h);

      h = be.load(st.h_load[j]);
    }

    const OpCounters before = be.counters();
    std::uint32_t passes = 0;
    bool done = false;
    for (std::size_t k = 1; k <= p && !done; ++k) {
      ++passes;
      f = be.shift_lanes_up(f, 1);
      for (std::size_t j = 0; j < seg_len; ++j) {
        const Vector stored = be.load(st.h_store[j]);
        be.store(st.h_store[j], be.vmax(stored, f));
        f = be.sat_sub(f, gap_extend);
        if (early_exit && be.all_zero(be.sat_sub(f, be.sat_sub(stored, gap_open)))) {
          done = true;
          break;
        }
      }
    }
    be.counters().correction_passes += passes;
    result.correction += be.counters() - before;
    result.correction_passes += passes;
    result.column_passes.push_back(passes);
  }

  result.score = be.lane_max(st.max);
  result.overflow = be.saturated();
  result.counters = be.counters();
  return result;
}

/// Striped kernel with the lazy-F loop replaced by a log-step scan.
///
/// Each column's scan result is carried into the next column, where it is
/// applied lazily: to the last segment before the shift that seeds the
/// diagonal, and to every HLoad[j] as it is read back. Max needs no
/// correction since a corrected cell ends in a gap and is strictly below
/// its gap-free prefix.
template <VectorBackend B>
AlignmentResult align_scan(B& be, const QueryProfile& profile,
                           const EncodedSequence& ref) {
  using Vector = typename B::Vector;
  detail::check_profile(profile, profile.scheme(), be.spec());
  detail::check_ref(profile, ref);

  const ScoringScheme& scheme = profile.scheme();
  const std::size_t seg_len = profile.seg_len();
  const Score bias = static_cast<Score>(scheme.bias());
  const Score gap_open = static_cast<Score>(scheme.gap_open());
  const Score gap_extend = static_cast<Score>(scheme.gap_extend());
  const std::uint64_t lane_decay = std::uint64_t{seg_len} * scheme.gap_extend();
  const Score last_seg_decay = clamp_score(std::uint64_t{seg_len - 1} * scheme.gap_extend());
  const auto steps = static_cast<std::uint32_t>(be.spec().log2_lanes());

  AlignmentResult result;
  result.column_passes.reserve(ref.size());
  detail::KernelState<B> st(be, seg_len);
  Vector carry = be.splat(0);

  for (Symbol c : ref) {
    const auto prof = profile.vectors(c);
    Vector f = be.splat(0);
    Vector h = be.load(st.h_store[seg_len - 1]);
    h = be.vmax(h, be.sat_sub(carry, last_seg_decay));
    h = be.shift_lanes_up(h, 1);
    std::swap(st.h_load, st.h_store);

    Vector fj = carry;
    for (std::size_t j = 0; j < seg_len; ++j) {
      h = be.sat_sub(be.sat_add(h, be.load_profile(prof[j])), bias);
      st.max = be.vmax(st.max, h);
      Vector e = be.load(st.e[j]);
      h = be.vmax(h, e);
      h = be.vmax(h, f);
      be.store(st.h_store[j], h);

      h = be.sat_sub(h, gap_open);
      e = be.vmax(be.sat_sub(e, gap_extend), h);
      be.store(st.e[j], e);
      f = be.vmax(be.sat_sub(f, gap_extend), h);

      h = be.vmax(be.load(st.h_load[j]), fj);
      fj = be.sat_sub(fj, gap_extend);
    }

    const OpCounters before = be.counters();
    carry = weighted_max_scan(be, f, lane_decay);
    be.counters().correction_passes += steps;
    result.correction += be.counters() - before;
    result.correction_passes += steps;
    result.column_passes.push_back(steps);
  }

  result.score = be.lane_max(st.max);
  result.overflow = be.saturated();
  result.counters = be.counters();
  return result;
}

// ---------------------------------------------------------------------------
// Convenience entry points on plain ScoreVectors, reference backend.
// ---------------------------------------------------------------------------

std::vector<ScoreVector> correct_separated(const ScoreVector& f,
                                           std::vector<ScoreVector> hstore,
                                           Score gap_extend, VectorSpec spec);
std::vector<ScoreVector> correct_inverted(const ScoreVector& f,
                                          std::vector<ScoreVector> hstore,
                                          Score gap_extend, VectorSpec spec);
std::vector<ScoreVector> correct_scan(const ScoreVector& f,
                                      std::vector<ScoreVector> hstore,
                                      Score gap_extend, VectorSpec spec);
ScoreVector weighted_max_scan(const ScoreVector& f, std::uint64_t decay, VectorSpec spec);

/// Runs a kernel on a fresh backend of the requested kind. The scheme must
/// be the one the profile was built with.
AlignmentResult align_lazyf(const QueryProfile& profile, const EncodedSequence& ref,
                            const ScoringScheme& scheme, bool early_exit,
                            BackendKind backend = BackendKind::kReference);
AlignmentResult align_scan(const QueryProfile& profile, const EncodedSequence& ref,
                           const ScoringScheme& scheme,
                           BackendKind backend = BackendKind::kReference);

}  // namespace swscan
