#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace swscan {

using Score = std::uint16_t;

inline constexpr int kScoreBits = 16;
inline constexpr Score kScoreMax = 0xFFFF;
inline constexpr std::size_t kMaxLanes = 64;

/// Clamps a wide non-negative product (decay * steps and the like) to a
/// usable saturating-subtraction constant.
constexpr Score clamp_score(std::uint64_t value) {
  return value > kScoreMax ? kScoreMax : static_cast<Score>(value);
}

/// Lane count of a vector. Powers of two from 2 to 64.
class VectorSpec {
 public:
  explicit VectorSpec(std::size_t lanes);

  std::size_t lanes() const { return lanes_; }
  /// Number of doubling steps needed to cover all lanes, ceil(log2 p).
  std::size_t log2_lanes() const;

  static bool valid_lanes(std::size_t lanes);

  friend bool operator==(VectorSpec, VectorSpec) = default;

 private:
  std::size_t lanes_;
};

/// p unsigned 16-bit lanes. Lanes past lanes() are kept at zero.
class ScoreVector {
 public:
  ScoreVector() = default;
  explicit ScoreVector(std::size_t lanes) : count_(static_cast<std::uint8_t>(lanes)) {}
  ScoreVector(std::initializer_list<Score> values);

  std::size_t lanes() const { return count_; }
  Score operator[](std::size_t l) const { return lane_[l]; }
  Score& operator[](std::size_t l) { return lane_[l]; }

  std::span<const Score> values() const { return {lane_.data(), count_}; }
  std::span<Score> values() { return {lane_.data(), count_}; }
  const Score* data() const { return lane_.data(); }
  Score* data() { return lane_.data(); }

  std::string to_string() const;

  friend bool operator==(const ScoreVector& a, const ScoreVector& b) {
    return a.count_ == b.count_ && std::equal(a.lane_.begin(), a.lane_.begin() + a.count_,
                                              b.lane_.begin());
  }

 private:
  alignas(16) std::array<Score, kMaxLanes> lane_{};
  std::uint8_t count_ = 0;
};

/// Vector-operation tallies kept by a backend.
struct OpCounters {
  std::uint64_t shifts = 0;
  std::uint64_t sat_adds = 0;
  std::uint64_t sat_subs = 0;
  std::uint64_t maxes = 0;
  std::uint64_t loads = 0;
  std::uint64_t stores = 0;
  std::uint64_t correction_passes = 0;

  /// Arithmetic plus memory vector operations; correction_passes is a
  /// loop count, not an operation, and is excluded.
  std::uint64_t total() const {
    return shifts + sat_adds + sat_subs + maxes + loads + stores;
  }

  void reset() { *this = OpCounters{}; }

  OpCounters& operator+=(const OpCounters& o);
  friend OpCounters operator-(OpCounters a, const OpCounters& b);
  friend bool operator==(const OpCounters&, const OpCounters&) = default;
};

/// What a kernel needs from a vector backend.
template <class B>
concept VectorBackend = requires(B& be, const B& cbe, typename B::Vector v,
                                 const typename B::Vector& cv, Score c,
                                 std::size_t k, const ScoreVector& sv) {
  typename B::Vector;
  { cbe.spec() } -> std::same_as<VectorSpec>;
  { be.splat(c) } -> std::same_as<typename B::Vector>;
  { be.vmax(cv, cv) } -> std::same_as<typename B::Vector>;
  { be.sat_add(cv, cv) } -> std::same_as<typename B::Vector>;
  { be.sat_sub(cv, c) } -> std::same_as<typename B::Vector>;
  { be.sat_sub(cv, cv) } -> std::same_as<typename B::Vector>;
  { be.shift_lanes_up(cv, k) } -> std::same_as<typename B::Vector>;
  { be.lane_max(cv) } -> std::same_as<Score>;
  { be.all_zero(cv) } -> std::same_as<bool>;
  { be.load(cv) } -> std::same_as<typename B::Vector>;
  { be.store(v, cv) };
  { be.load_profile(sv) } -> std::same_as<typename B::Vector>;
  { be.to_score_vector(cv) } -> std::same_as<ScoreVector>;
  { be.counters() } -> std::same_as<OpCounters&>;
  { cbe.saturated() } -> std::same_as<bool>;
};

/// Plain-integer backend for any supported lane count. This is the
/// semantics definition every other backend must match bit for bit.
class ReferenceBackend {
 public:
  using Vector = ScoreVector;

  explicit ReferenceBackend(VectorSpec spec) : spec_(spec) {}

  VectorSpec spec() const { return spec_; }

  Vector splat(Score c) const {
    Vector r(spec_.lanes());
    std::fill_n(r.data(), spec_.lanes(), c);
    return r;
  }

  Vector vmax(const Vector& a, const Vector& b) {
    ++counters_.maxes;
    return lanewise(a, b, [](Score x, Score y) { return std::max(x, y); });
  }

  /// Clamps at kScoreMax and raises the sticky saturation flag if any lane
  /// clamped.
  Vector sat_add(const Vector& a, const Vector& b) {
    ++counters_.sat_adds;
    Vector r(spec_.lanes());
    for (std::size_t l = 0; l < spec_.lanes(); ++l) {
      const unsigned sum = unsigned{a[l]} + b[l];
      saturated_ |= sum > kScoreMax;
      r[l] = static_cast<Score>(std::min<unsigned>(sum, kScoreMax));
    }
    return r;
  }

  Vector sat_sub(const Vector& a, Score c) {
    ++counters_.sat_subs;
    return lanewise(a, a, [c](Score x, Score) {
      return x > c ? static_cast<Score>(x - c) : Score{0};
    });
  }

  Vector sat_sub(const Vector& a, const Vector& b) {
    ++counters_.sat_subs;
    return lanewise(a, b, [](Score x, Score y) {
      return x > y ? static_cast<Score>(x - y) : Score{0};
    });
  }

  /// Lane l of the result is lane l-k of `a`; the k lowest lanes become 0.
  Vector shift_lanes_up(const Vector& a, std::size_t k) {
    ++counters_.shifts;
    Vector r(spec_.lanes());
    for (std::size_t l = k; l < spec_.lanes(); ++l) r[l] = a[l - k];
    return r;
  }

  Score lane_max(const Vector& a) const {
    const auto v = a.values();
    return v.empty() ? Score{0} : *std::max_element(v.begin(), v.end());
  }

  bool all_zero(const Vector& a) const {
    const auto v = a.values();
    return std::all_of(v.begin(), v.end(), [](Score s) { return s == 0; });
  }

  Vector load(const Vector& slot) {
    ++counters_.loads;
    return slot;
  }

  void store(Vector& slot, const Vector& v) {
    ++counters_.stores;
    slot = v;
  }

  Vector load_profile(const ScoreVector& v) { return load(v); }
  ScoreVector to_score_vector(const Vector& v) const { return v; }

  OpCounters& counters() { return counters_; }
  const OpCounters& counters() const { return counters_; }
  bool saturated() const { return saturated_; }

  void reset() {
    counters_.reset();
    saturated_ = false;
  }

 private:
  // Calls fn.template operator()<P>() with the lane count as a constant so
  // each width gets fixed-trip-count loops.
  template <class Fn>
  void with_width(Fn&& fn) const {
    switch (spec_.lanes()) {
      case 2: fn.template operator()<2>(); break;
      case 4: fn.template operator()<4>(); break;
      case 8: fn.template operator()<8>(); break;
      case 16: fn.template operator()<16>(); break;
      case 32: fn.template operator()<32>(); break;
      default: fn.template operator()<64>(); break;
    }
  }

  template <class Op>
  Vector lanewise(const Vector& a, const Vector& b, Op op) const {
    Vector r(spec_.lanes());
    with_width([&]<std::size_t P>() {
      for (std::size_t l = 0; l < P; ++l) r[l] = op(a[l], b[l]);
    });
    return r;
  }

  VectorSpec spec_;
  OpCounters counters_;
  bool saturated_ = false;
};

static_assert(VectorBackend<ReferenceBackend>);

namespace detail {
[[noreturn]] void throw_bad_shift();
[[noreturn]] void throw_lane_mismatch();
}  // namespace detail

/// ReferenceBackend with the lane count fixed at compile time. Same
/// arithmetic and the same counts, on a vector no wider than its lanes.
template <std::size_t P>
  requires(P >= 2 && P <= kMaxLanes && (P & (P - 1)) == 0)
class FixedReferenceBackend {
 public:
  using Vector = std::array<Score, P>;

  VectorSpec spec() const { return VectorSpec(P); }

  Vector splat(Score c) const {
    Vector r;
    r.fill(c);
    return r;
  }

  Vector vmax(const Vector& a, const Vector& b) {
    ++counters_.maxes;
    Vector r;
    for (std::size_t l = 0; l < P; ++l) r[l] = std::max(a[l], b[l]);
    return r;
  }

  Vector sat_add(const Vector& a, const Vector& b) {
    ++counters_.sat_adds;
    Vector r;
    bool clamped = false;
    for (std::size_t l = 0; l < P; ++l) {
      const unsigned sum = unsigned{a[l]} + b[l];
      clamped |= sum > kScoreMax;
      r[l] = static_cast<Score>(std::min<unsigned>(sum, kScoreMax));
    }
    saturated_ |= clamped;
    return r;
  }

  Vector sat_sub(const Vector& a, Score c) {
    ++counters_.sat_subs;
    Vector r;
    for (std::size_t l = 0; l < P; ++l) r[l] = a[l] > c ? static_cast<Score>(a[l] - c) : Score{0};
    return r;
  }

  Vector sat_sub(const Vector& a, const Vector& b) {
    ++counters_.sat_subs;
    Vector r;
    for (std::size_t l = 0; l < P; ++l)
      r[l] = a[l] > b[l] ? static_cast<Score>(a[l] - b[l]) : Score{0};
    return r;
  }

  Vector shift_lanes_up(const Vector& a, std::size_t k) {
    ++counters_.shifts;
    if (k > P) detail::throw_bad_shift();
    Vector r{};
    std::copy_n(a.begin(), P - k, r.begin() + k);
    return r;
  }

  Score lane_max(const Vector& a) const { return *std::max_element(a.begin(), a.end()); }

  bool all_zero(const Vector& a) const {
    Score any = 0;
    for (Score s : a) any |= s;
    return any == 0;
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
    return from_score_vector(v);
  }

  Vector from_score_vector(const ScoreVector& v) const {
    if (v.lanes() != P) detail::throw_lane_mismatch();
    Vector r;
    std::copy_n(v.data(), P, r.begin());
    return r;
  }

  ScoreVector to_score_vector(const Vector& a) const {
    ScoreVector r(P);
    std::copy_n(a.begin(), P, r.data());
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

ScoreVector splat(Score c, VectorSpec spec);
ScoreVector vmax(const ScoreVector& a, const ScoreVector& b);
ScoreVector sat_add(const ScoreVector& a, const ScoreVector& b, bool* saturated = nullptr);
ScoreVector sat_sub(const ScoreVector& a, Score c);
ScoreVector shift_lanes_up(const ScoreVector& a, std::size_t k);
Score lane_max(const ScoreVector& a);

}  // namespace swscan
