#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace swscan {

using Symbol = std::uint8_t;
using EncodedSequence = std::vector<Symbol>;

/// Ordered residue alphabet with dense indices 0..size()-1.
///
/// When a wildcard is configured it is stored as the last symbol. Lookup is
/// case-insensitive; every other character is rejected.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols,
                    std::optional<char> wildcard = std::nullopt);

  /// ACGT with N as wildcard.
  static Alphabet dna();
  /// The 20 standard amino acids with X as wildcard.
  static Alphabet protein();

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbols() const { return symbols_; }
  std::optional<char> wildcard() const { return wildcard_; }
  std::optional<Symbol> wildcard_index() const;

  /// Symbols that a random generator may draw, i.e. all but the wildcard.
  std::string_view regular_symbols() const;

  bool contains(char c) const;
  Symbol index_of(char c) const;
  char symbol_at(Symbol index) const;

  EncodedSequence encode(std::string_view residues) const;
  std::string decode(const EncodedSequence& seq) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_ && a.wildcard_ == b.wildcard_;
  }

 private:
  static constexpr std::int16_t kAbsent = -1;

  std::string symbols_;
  std::optional<char> wildcard_;
  std::array<std::int16_t, 256> lookup_{};
};

}  // namespace swscan
