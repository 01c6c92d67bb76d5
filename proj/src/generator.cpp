#include <limits>
#include <random>
#include <string>

#include "swscan/error.hpp"
#include "swscan/harness.hpp"

namespace swscan {

std::uint64_t bounded_draw(std::mt19937_64& engine, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return engine();
  const std::uint64_t range = span + 1;
  // Reject the top partial bucket so every value is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = engine();
  while (x >= limit) x = engine();
  return lo + x % range;
}

std::vector<SequencePair> generate_pairs(const GeneratorParams& params, const Alphabet& alphabet) {
  if (params.len_min < 1 || params.len_min > params.len_max)
    throw Error(ErrorCode::kInvalidConfig, "generator needs 1 <= len_min <= len_max");
  const std::string_view symbols = alphabet.regular_symbols();
  if (symbols.empty()) throw Error(ErrorCode::kInvalidConfig, "alphabet has no regular symbols");

  std::mt19937_64 engine(params.seed);
  auto sequence = [&] {
    const auto len = bounded_draw(engine, params.len_min, params.len_max);
    std::string s(len, ' ');
    for (char& c : s) c = symbols[bounded_draw(engine, 0, symbols.size() - 1)];
    return s;
  };

  std::vector<SequencePair> pairs;
  pairs.reserve(params.count);
  for (std::size_t n = 0; n < params.count; ++n) {
    SequencePair pair;
    pair.query.id = "q" + std::to_string(n);
    pair.query.sequence = sequence();
    pair.target.id = "t" + std::to_string(n);
    pair.target.sequence = sequence();
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace swscan
