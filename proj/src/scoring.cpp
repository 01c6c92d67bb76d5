#include "swscan/scoring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "swscan/error.hpp"

namespace swscan {

ScoringScheme::ScoringScheme(std::size_t alphabet_size, std::vector<int> matrix,
                             int gap_open, int gap_extend)
    : size_(alphabet_size), matrix_(std::move(matrix)), gap_open_(gap_open),
      gap_extend_(gap_extend) {
  if (size_ == 0 || matrix_.size() != size_ * size_)
    throw Error(ErrorCode::kInvalidScoring, "substitution matrix must be square over the alphabet");
  for (int s : matrix_)
    if (s < -127 || s > 127)
      throw Error(ErrorCode::kInvalidScoring,
                  "substitution score " + std::to_string(s) + " outside [-127, 127]");
  if (gap_extend_ < 1)
    throw Error(ErrorCode::kInvalidScoring, "gap_extend must be at least 1");
  if (gap_open_ < gap_extend_)
    throw Error(ErrorCode::kInvalidScoring, "gap_open must be at least gap_extend");
  // Kernels subtract these as 16-bit saturating constants.
  if (gap_open_ > 0xFFFF)
    throw Error(ErrorCode::kInvalidScoring, "gap_open too large");
  const auto [lo, hi] = std::minmax_element(matrix_.begin(), matrix_.end());
  min_sub_ = *lo;
  max_sub_ = *hi;
  bias_ = std::max(0, -min_sub_);
}

ScoringScheme ScoringScheme::match_mismatch(const Alphabet& alphabet, int match,
                                            int mismatch, int gap_open, int gap_extend) {
  const std::size_t n = alphabet.size();
  const auto wild = alphabet.wildcard_index();
  std::vector<int> m(n * n, mismatch);
  for (std::size_t a = 0; a < n; ++a)
    if (!wild || a != *wild) m[a * n + a] = match;
  return ScoringScheme(n, std::move(m), gap_open, gap_extend);
}

bool ScoringScheme::symmetric() const {
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = a + 1; b < size_; ++b)
      if (matrix_[a * size_ + b] != matrix_[b * size_ + a]) return false;
  return true;
}

MatrixFile parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string symbols;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tok.size() != 1)
        throw Error(ErrorCode::kInvalidScoring, "matrix header token '" + tok + "' is not a single symbol");
      symbols += tok;
    }
    if (!symbols.empty()) break;
  }
  if (symbols.empty()) throw Error(ErrorCode::kInvalidScoring, "matrix file has no symbol line");

  Alphabet alphabet(symbols);
  const std::size_t n = alphabet.size();
  std::vector<int> scores;
  scores.reserve(n * n);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    int v = 0;
    while (ls >> v) row.push_back(v);
    if (!ls.eof())
      throw Error(ErrorCode::kInvalidScoring, "non-integer entry in matrix row " + std::to_string(rows + 1));
    if (row.empty()) continue;
    if (row.size() != n)
      throw Error(ErrorCode::kInvalidScoring, "matrix row " + std::to_string(rows + 1) + " has " +
                                                  std::to_string(row.size()) + " entries, expected " +
                                                  std::to_string(n));
    scores.insert(scores.end(), row.begin(), row.end());
    ++rows;
  }
  if (rows != n)
    throw Error(ErrorCode::kInvalidScoring,
                "matrix has " + std::to_string(rows) + " rows, expected " + std::to_string(n));
  return {std::move(alphabet), std::move(scores)};
}

MatrixFile load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open matrix file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

}  // namespace swscan
