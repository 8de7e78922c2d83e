#pragma once

#include <filesystem>
#include <iosfwd>

#include "accred/codes.hpp"

namespace accred {

// Text format. Either
//   p=<length>            followed by one '0'/'1' codeword per line, or
//   g=<rows>x<cols>       followed by <rows> generator rows.
// Blank lines and lines starting with '#' are ignored.
BinaryCode read_code(std::istream& in);
BinaryCode read_code_file(const std::filesystem::path& path);

// Linear codes are written as their generator, others as a word list.
void write_code(std::ostream& out, const BinaryCode& code);
void write_words(std::ostream& out, const BinaryCode& code);

}  // namespace accred
