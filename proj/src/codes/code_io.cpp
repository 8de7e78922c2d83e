#include "accred/code_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "accred/error.hpp"

namespace accred {
namespace {

std::string strip(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

std::size_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw DomainError("malformed " + what + " '" + text + "'");
  }
  return std::stoul(text);
}

}  // namespace

BinaryCode read_code(std::istream& in) {
  std::string line;
  std::string header;
  std::vector<std::string> body;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line.front() == '#') continue;
    if (header.empty()) {
      header = line;
    } else {
      body.push_back(line);
    }
  }
  if (header.empty()) throw DomainError("code file is empty");

  auto parse_rows = [&](std::size_t width) {
    std::vector<Word> rows;
    for (const auto& row : body) {
      if (row.size() != width) {
        throw DomainError("row '" + row + "' does not have length " + std::to_string(width));
      }
      rows.push_back(word_from_string(row));
    }
    return rows;
  };

  if (header.rfind("p=", 0) == 0) {
    const std::size_t length = parse_count(header.substr(2), "length");
    return BinaryCode::from_words(length, parse_rows(length));
  }
  if (header.rfind("g=", 0) == 0) {
    const std::string dims = header.substr(2);
    const auto x = dims.find('x');
    if (x == std::string::npos) throw DomainError("generator header must be g=<rows>x<cols>");
    const std::size_t rows = parse_count(dims.substr(0, x), "row count");
    const std::size_t cols = parse_count(dims.substr(x + 1), "column count");
    if (body.size() != rows) {
      throw DomainError("generator header announces " + std::to_string(rows) + " rows, found " +
                        std::to_string(body.size()));
    }
    return BinaryCode::from_generator(cols, parse_rows(cols));
  }
  throw DomainError("code file must start with p=<int> or g=<rows>x<cols>");
}

BinaryCode read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open code file '" + path.string() + "'");
  return read_code(in);
}

void write_words(std::ostream& out, const BinaryCode& code) {
  out << "p=" << code.length() << '\n';
  for (Word w : code.words()) out << word_to_string(w, code.length()) << '\n';
}

void write_code(std::ostream& out, const BinaryCode& code) {
  if (!code.is_linear()) {
    write_words(out, code);
    return;
  }
  const auto& rows = *code.generator();
  out << "g=" << rows.size() << 'x' << code.length() << '\n';
  for (Word r : rows) out << word_to_string(r, code.length()) << '\n';
}

}  // namespace accred
