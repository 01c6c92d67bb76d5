#include "swscan/profile.hpp"

#include <string>

#include "swscan/error.hpp"

namespace swscan {

StripePos stripe_index(std::size_t q, std::size_t seg_len, std::size_t lanes) {
  if (seg_len == 0 || q >= seg_len * lanes)
    throw Error(ErrorCode::kPositionOutOfRange,
                "query position " + std::to_string(q) + " outside striped range of " +
                    std::to_string(seg_len * lanes));
  return {q % seg_len, q / seg_len};
}

QueryProfile::QueryProfile(const EncodedSequence& query, const ScoringScheme& scheme,
                           VectorSpec spec)
    : seg_len_(segment_count(query.size(), spec.lanes())),
      query_len_(query.size()),
      spec_(spec),
      scheme_(scheme) {
  if (query.empty()) throw Error(ErrorCode::kEmptyQuery, "query is empty");
  for (Symbol s : query)
    if (s >= scheme.alphabet_size())
      throw Error(ErrorCode::kSymbolOutOfAlphabet, "query symbol outside the alphabet");

  const std::size_t p = spec.lanes();
  const std::size_t n = scheme.alphabet_size();
  vectors_.assign(n * seg_len_, ScoreVector(p));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t j = 0; j < seg_len_; ++j) {
      ScoreVector& v = vectors_[a * seg_len_ + j];
      for (std::size_t l = 0; l < p; ++l) {
        const std::size_t q = l * seg_len_ + j;
        // Padding keeps 0, i.e. an effective score of -bias.
        if (q < query_len_)
          v[l] = static_cast<Score>(scheme.bias() +
                                    scheme.substitution(static_cast<Symbol>(a), query[q]));
      }
    }
  }
}

}  // namespace swscan
