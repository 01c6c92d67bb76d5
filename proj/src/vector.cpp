#include "swscan/vector.hpp"

#include <bit>
#include <sstream>

#include "swscan/error.hpp"

namespace swscan {

VectorSpec::VectorSpec(std::size_t lanes) : lanes_(lanes) {
  if (!valid_lanes(lanes))
    throw Error(ErrorCode::kInvalidLanes,
                "lane count " + std::to_string(lanes) + " is not a power of two in [2, 64]");
}

bool VectorSpec::valid_lanes(std::size_t lanes) {
  return lanes >= 2 && lanes <= kMaxLanes && std::has_single_bit(lanes);
}

std::size_t VectorSpec::log2_lanes() const {
  return static_cast<std::size_t>(std::bit_width(lanes_ - 1));
}

ScoreVector::ScoreVector(std::initializer_list<Score> values)
    : count_(static_cast<std::uint8_t>(values.size())) {
  if (values.size() > kMaxLanes) throw Error(ErrorCode::kInvalidLanes, "too many lanes");
  std::copy(values.begin(), values.end(), lane_.begin());
}

std::string ScoreVector::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t l = 0; l < count_; ++l) os << (l ? "," : "") << lane_[l];
  os << ']';
  return os.str();
}

OpCounters& OpCounters::operator+=(const OpCounters& o) {
  shifts += o.shifts;
  sat_adds += o.sat_adds;
  sat_subs += o.sat_subs;
  maxes += o.maxes;
  loads += o.loads;
  stores += o.stores;
  correction_passes += o.correction_passes;
  return *this;
}

OpCounters operator-(OpCounters a, const OpCounters& b) {
  a.shifts -= b.shifts;
  a.sat_adds -= b.sat_adds;
  a.sat_subs -= b.sat_subs;
  a.maxes -= b.maxes;
  a.loads -= b.loads;
  a.stores -= b.stores;
  a.correction_passes -= b.correction_passes;
  return a;
}

namespace detail {

void throw_bad_shift() {
  throw Error(ErrorCode::kInvalidLanes, "shift larger than lane count");
}

void throw_lane_mismatch() { throw Error(ErrorCode::kInvalidLanes, "lane count mismatch"); }

}  // namespace detail

namespace {

void require_same_lanes(const ScoreVector& a, const ScoreVector& b) {
  if (a.lanes() != b.lanes())
    detail::throw_lane_mismatch();
}

ReferenceBackend backend_for(const ScoreVector& a) { return ReferenceBackend(VectorSpec(a.lanes())); }

}  // namespace

ScoreVector splat(Score c, VectorSpec spec) { return ReferenceBackend(spec).splat(c); }

ScoreVector vmax(const ScoreVector& a, const ScoreVector& b) {
  require_same_lanes(a, b);
  return backend_for(a).vmax(a, b);
}

ScoreVector sat_add(const ScoreVector& a, const ScoreVector& b, bool* saturated) {
  require_same_lanes(a, b);
  auto be = backend_for(a);
  auto r = be.sat_add(a, b);
  if (saturated) *saturated = be.saturated();
  return r;
}

ScoreVector sat_sub(const ScoreVector& a, Score c) { return backend_for(a).sat_sub(a, c); }

ScoreVector shift_lanes_up(const ScoreVector& a, std::size_t k) {
  if (k > a.lanes()) detail::throw_bad_shift();
  return backend_for(a).shift_lanes_up(a, k);
}

Score lane_max(const ScoreVector& a) { return backend_for(a).lane_max(a); }

}  // namespace swscan
