#include "swscan/alphabet.hpp"

#include <cctype>
#include <string>

#include "swscan/error.hpp"

namespace swscan {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyQuery: return "EmptyQuery";
    case ErrorCode::kSymbolOutOfAlphabet: return "SymbolOutOfAlphabet";
    case ErrorCode::kPositionOutOfRange: return "PositionOutOfRange";
    case ErrorCode::kProfileMismatch: return "ProfileMismatch";
    case ErrorCode::kInvalidScoring: return "InvalidScoring";
    case ErrorCode::kInvalidLanes: return "InvalidLanes";
    case ErrorCode::kMalformedFasta: return "MalformedFasta";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

namespace {

unsigned char fold(char c) {
  return static_cast<unsigned char>(std::toupper(static_cast<unsigned char>(c)));
}

}  // namespace

Alphabet::Alphabet(std::string_view symbols, std::optional<char> wildcard)
    : wildcard_(wildcard) {
  lookup_.fill(kAbsent);
  std::string all;
  for (char c : symbols) all.push_back(static_cast<char>(fold(c)));
  if (wildcard_) {
    wildcard_ = static_cast<char>(fold(*wildcard_));
    all.push_back(*wildcard_);
  }
  if (all.empty()) throw Error(ErrorCode::kInvalidScoring, "alphabet is empty");
  if (all.size() > 255) throw Error(ErrorCode::kInvalidScoring, "alphabet too large");
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto c = static_cast<unsigned char>(all[i]);
    if (std::isspace(c) || c == '>')
      throw Error(ErrorCode::kInvalidScoring, "alphabet symbol is not printable residue");
    if (lookup_[c] != kAbsent)
      throw Error(ErrorCode::kInvalidScoring,
                  std::string("duplicate alphabet symbol '") + all[i] + "'");
    lookup_[c] = static_cast<std::int16_t>(i);
    // Lower-case input maps to the same index.
    lookup_[static_cast<unsigned char>(std::tolower(c))] = static_cast<std::int16_t>(i);
  }
  symbols_ = std::move(all);
}

Alphabet Alphabet::dna() { return Alphabet("ACGT", 'N'); }

Alphabet Alphabet::protein() { return Alphabet("ARNDCQEGHILKMFPSTWYV", 'X'); }

std::optional<Symbol> Alphabet::wildcard_index() const {
  if (!wildcard_) return std::nullopt;
  return static_cast<Symbol>(symbols_.size() - 1);
}

std::string_view Alphabet::regular_symbols() const {
  std::string_view all = symbols_;
  return wildcard_ ? all.substr(0, all.size() - 1) : all;
}

bool Alphabet::contains(char c) const {
  return lookup_[static_cast<unsigned char>(c)] != kAbsent;
}

Symbol Alphabet::index_of(char c) const {
  const auto idx = lookup_[static_cast<unsigned char>(c)];
  if (idx == kAbsent) {
    std::string shown = std::isprint(static_cast<unsigned char>(c))
                            ? std::string(1, c)
                            : "\\x" + std::to_string(static_cast<unsigned char>(c));
    throw Error(ErrorCode::kSymbolOutOfAlphabet, "symbol '" + shown + "' not in alphabet " + symbols_);
  }
  return static_cast<Symbol>(idx);
}

char Alphabet::symbol_at(Symbol index) const {
  if (index >= symbols_.size())
    throw Error(ErrorCode::kSymbolOutOfAlphabet, "symbol index out of range");
  return symbols_[index];
}

EncodedSequence Alphabet::encode(std::string_view residues) const {
  EncodedSequence out;
  out.reserve(residues.size());
  for (char c : residues) out.push_back(index_of(c));
  return out;
}

std::string Alphabet::decode(const EncodedSequence& seq) const {
  std::string out;
  out.reserve(seq.size());
  for (Symbol s : seq) out.push_back(symbol_at(s));
  return out;
}

}  // namespace swscan
