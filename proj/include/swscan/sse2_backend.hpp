#pragma once

#include "swscan/vector.hpp"

#if defined(__SSE2__)
#define SWSCAN_HAVE_SSE2 1
#include <emmintrin.h>

namespace swscan {

/// Eight 16-bit lanes in one SSE2 register. Counts operations exactly like
/// ReferenceBackend so counter-based comparisons hold across backends.
class Sse2Backend {
 public:
  static constexpr std::size_t kLanes = 8;

  struct Vector {
    __m128i v;
  };

  Sse2Backend() = default;

  VectorSpec spec() const { return VectorSpec(kLanes); }

  Vector splat(Score c) const {
    return {_mm_set1_epi16(static_cast<short>(c))};
  }

  Vector vmax(const Vector& a, const Vector& b) {
    ++counters_.maxes;
    // No unsigned 16-bit max before SSE4.1: max(a,b) = (a -sat b) +sat b.
    return {_mm_adds_epu16(_mm_subs_epu16(a.v, b.v), b.v)};
  }

  Vector sat_add(const Vector& a, const Vector& b) {
    ++counters_.sat_adds;
    const __m128i r = _mm_adds_epu16(a.v, b.v);
    // A lane clamped iff (r - a) lost part of b.
    const __m128i back = _mm_subs_epu16(r, a.v);
    saturated_ |= _mm_movemask_epi8(_mm_cmpeq_epi16(back, b.v)) != 0xFFFF;
    return {r};
  }

  Vector sat_sub(const Vector& a, Score c) {
    ++counters_.sat_subs;
    return {_mm_subs_epu16(a.v, _mm_set1_epi16(static_cast<short>(c)))};
  }

  Vector sat_sub(const Vector& a, const Vector& b) {
    ++counters_.sat_subs;
    return {_mm_subs_epu16(a.v, b.v)};
  }

  Vector shift_lanes_up(const Vector& a, std::size_t k) {
    ++counters_.shifts;
    // Byte shift immediates must be constants.
    switch (k) {
      case 0: return a;
      case 1: return {_mm_slli_si128(a.v, 2)};
      case 2: return {_mm_slli_si128(a.v, 4)};
      case 3: return {_mm_slli_si128(a.v, 6)};
      case 4: return {_mm_slli_si128(a.v, 8)};
      case 5: return {_mm_slli_si128(a.v, 10)};
      case 6: return {_mm_slli_si128(a.v, 12)};
      case 7: return {_mm_slli_si128(a.v, 14)};
      default: return {_mm_setzero_si128()};
    }
  }

  Score lane_max(const Vector& a) const {
    alignas(16) Score lanes[kLanes];
    _mm_store_si128(reinterpret_cast<__m128i*>(lanes), a.v);
    Score m = 0;
    for (Score s : lanes) m = s > m ? s : m;
    return m;
  }

  bool all_zero(const Vector& a) const {
    return _mm_movemask_epi8(_mm_cmpeq_epi16(a.v, _mm_setzero_si128())) == 0xFFFF;
  }

  Vector load(const Vector& slot) {
    ++counters_.loads;
    return slot;
  }

  void store(Vector& slot, const Vector& v) {
    ++counters_.stores;
    slot = v;
  }

  Vector load_profile(const ScoreVector& v) {
    ++counters_.loads;
    return {_mm_load_si128(reinterpret_cast<const __m128i*>(v.data()))};
  }

  Vector from_score_vector(const ScoreVector& v) const {
    return {_mm_load_si128(reinterpret_cast<const __m128i*>(v.data()))};
  }

  ScoreVector to_score_vector(const Vector& a) const {
    ScoreVector r(kLanes);
    _mm_store_si128(reinterpret_cast<__m128i*>(r.data()), a.v);
    return r;
  }

  OpCounters& counters() { return counters_; }
  const OpCounters& counters() const { return counters_; }
  bool saturated() const { return saturated_; }

  void reset() {
    counters_.reset();
    saturated_ = false;
  }

 private:
  OpCounters counters_;
  bool saturated_ = false;
};

static_assert(VectorBackend<Sse2Backend>);

}  // namespace swscan

#else
#define SWSCAN_HAVE_SSE2 0
#endif
