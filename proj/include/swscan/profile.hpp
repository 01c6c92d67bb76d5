#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "swscan/alphabet.hpp"
#include "swscan/scoring.hpp"
#include "swscan/vector.hpp"

namespace swscan {

struct StripePos {
  std::size_t segment;
  std::size_t lane;

  friend bool operator==(StripePos, StripePos) = default;
};

/// (segment, lane) of query position q in the striped layout, where lane l
/// of segment j holds position l * seg_len + j.
StripePos stripe_index(std::size_t q, std::size_t seg_len, std::size_t lanes);

/// Inverse of stripe_index.
constexpr std::size_t stripe_position(StripePos pos, std::size_t seg_len) {
  return pos.lane * seg_len + pos.segment;
}

constexpr std::size_t segment_count(std::size_t query_len, std::size_t lanes) {
  return (query_len + lanes - 1) / lanes;
}

/// Striped, biased substitution vectors for one query, one scheme and one
/// lane count. Immutable once built.
///
/// For symbol a and segment j, lane l holds bias + s(a, query[l*seg_len + j]),
/// or 0 where that position lies past the end of the query.
class QueryProfile {
 public:
  QueryProfile(const EncodedSequence& query, const ScoringScheme& scheme,
               VectorSpec spec);

  std::size_t seg_len() const { return seg_len_; }
  std::size_t query_len() const { return query_len_; }
  VectorSpec spec() const { return spec_; }
  int bias() const { return scheme_.bias(); }
  const ScoringScheme& scheme() const { return scheme_; }

  std::span<const ScoreVector> vectors(Symbol a) const {
    return {vectors_.data() + static_cast<std::size_t>(a) * seg_len_, seg_len_};
  }

 private:
  std::size_t seg_len_;
  std::size_t query_len_;
  VectorSpec spec_;
  ScoringScheme scheme_;
  std::vector<ScoreVector> vectors_;
};

inline QueryProfile build_profile(const EncodedSequence& query,
                                  const ScoringScheme& scheme,
                                  VectorSpec spec) {
  return QueryProfile(query, scheme, spec);
}

}  // namespace swscan
