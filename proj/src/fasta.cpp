#include <cctype>
#include <fstream>
#include <istream>
#include <string>

#include "swscan/error.hpp"
#include "swscan/harness.hpp"

namespace swscan {

namespace {

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
  throw Error(ErrorCode::kMalformedFasta, "line " + std::to_string(line_no) + ": " + why);
}

void finish(std::vector<FastaRecord>& out, FastaRecord& rec, bool open, std::size_t header_line) {
  if (!open) return;
  if (rec.sequence.empty()) malformed(header_line, "record '" + rec.id + "' has an empty sequence");
  out.push_back(std::move(rec));
  rec = FastaRecord{};
}

}  // namespace

std::vector<FastaRecord> parse_fasta(std::istream& in, const Alphabet& alphabet) {
  std::vector<FastaRecord> out;
  FastaRecord rec;
  bool open = false;
  std::size_t line_no = 0;
  std::size_t header_line = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;

    if (line[0] == '>') {
      finish(out, rec, open, header_line);
      open = true;
      header_line = line_no;
      const std::string header = line.substr(1);
      const auto id_begin = header.find_first_not_of(" \t");
      if (id_begin == std::string::npos) malformed(line_no, "header without an id");
      const auto id_end = header.find_first_of(" \t", id_begin);
      rec.id = header.substr(id_begin, id_end - id_begin);
      if (id_end != std::string::npos) {
        const auto desc = header.find_first_not_of(" \t", id_end);
        if (desc != std::string::npos) rec.description = header.substr(desc);
      }
      continue;
    }

    if (!open) malformed(line_no, "sequence data before the first header");
    for (char c : line) {
      if (c == ' ' || c == '\t') continue;
      const char up = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (!alphabet.contains(up))
        malformed(line_no, std::string("illegal residue '") + c + "' in record '" + rec.id + "'");
      rec.sequence.push_back(up);
    }
  }
  finish(out, rec, open, header_line);
  return out;
}

std::vector<FastaRecord> read_fasta(const std::string& path, const Alphabet& alphabet) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return parse_fasta(in, alphabet);
}

}  // namespace swscan
