#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "swscan/alphabet.hpp"

namespace swscan {

/// Substitution scores plus affine gap penalties.
///
/// A gap of length L costs gap_open + (L - 1) * gap_extend. Scores are in
/// [-127, 127]; bias is the amount added to every substitution score so the
/// striped profile can be stored unsigned.
class ScoringScheme {
 public:
  ScoringScheme(std::size_t alphabet_size, std::vector<int> matrix,
                int gap_open, int gap_extend);

  /// Uniform match/mismatch scores. A wildcard scores `mismatch` against
  /// everything, itself included.
  static ScoringScheme match_mismatch(const Alphabet& alphabet, int match,
                                      int mismatch, int gap_open,
                                      int gap_extend);

  int substitution(Symbol a, Symbol b) const {
    return matrix_[static_cast<std::size_t>(a) * size_ + b];
  }

  std::size_t alphabet_size() const { return size_; }
  int gap_open() const { return gap_open_; }
  int gap_extend() const { return gap_extend_; }
  int bias() const { return bias_; }
  int max_substitution() const { return max_sub_; }
  int min_substitution() const { return min_sub_; }
  bool symmetric() const;

  friend bool operator==(const ScoringScheme&, const ScoringScheme&) = default;

 private:
  std::size_t size_;
  std::vector<int> matrix_;
  int gap_open_;
  int gap_extend_;
  int bias_ = 0;
  int max_sub_ = 0;
  int min_sub_ = 0;
};

/// Plain-text matrix: first line the symbols (space separated), then one
/// row of integers per symbol. Returns the alphabet together with the
/// matrix entries in row-major order.
struct MatrixFile {
  Alphabet alphabet;
  std::vector<int> scores;
};

MatrixFile parse_matrix(const std::string& text);
MatrixFile load_matrix(const std::string& path);

}  // namespace swscan
