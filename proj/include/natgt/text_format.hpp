// Plain-text matrix and vector format.
//
//   matrix:  "<rows> <cols>\n" followed by `rows` lines of exactly `cols` '0'/'1' chars
//   vector:  "<len>\n" followed by one line of `len` '0'/'1' chars
//
// Lines starting with '#' before the size line are comments (generator sidecars).
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "natgt/bitmat.hpp"

namespace natgt {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BitMatrix read_matrix(std::istream& in);
BitVector read_vector(std::istream& in);

/// `comment`, when non-empty, is written as a leading "# ..." line.
void write_matrix(std::ostream& out, const BitMatrix& m, std::string_view comment = {});
void write_vector(std::ostream& out, const BitVector& v);

BitMatrix load_matrix(const std::string& path);
BitVector load_vector(const std::string& path);
void save_matrix(const std::string& path, const BitMatrix& m, std::string_view comment = {});
void save_vector(const std::string& path, const BitVector& v);

}  // namespace natgt
