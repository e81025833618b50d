#include "natgt/text_format.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <vector>

namespace natgt {
namespace {

std::string next_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(std::string("unexpected end of input while reading ") + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::string header_line(std::istream& in, const char* what) {
  std::string line = next_line(in, what);
  while (!line.empty() && line.front() == '#') line = next_line(in, what);
  return line;
}

std::size_t parse_count(std::string_view token, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value == 0)
    throw ParseError(std::string("invalid ") + what + ": '" + std::string(token) + "'");
  return value;
}

BitVector parse_bits(const std::string& line, std::size_t expected, const char* what) {
  if (line.size() != expected)
    throw ParseError(std::string(what) + ": expected " + std::to_string(expected) + " characters, got " +
                     std::to_string(line.size()));
  try {
    return BitVector::from_string(line);
  } catch (const std::invalid_argument&) {
    throw ParseError(std::string(what) + ": entries must be '0' or '1'");
  }
}

}  // namespace

BitMatrix read_matrix(std::istream& in) {
  const std::string header = header_line(in, "matrix header");
  const auto space = header.find(' ');
  if (space == std::string::npos) throw ParseError("matrix header must be '<rows> <cols>'");
  const std::size_t rows = parse_count(std::string_view(header).substr(0, space), "row count");
  const std::size_t cols = parse_count(std::string_view(header).substr(space + 1), "column count");
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, parse_bits(next_line(in, "matrix row"), cols, "matrix row"));
  return m;
}

BitVector read_vector(std::istream& in) {
  const std::size_t len = parse_count(header_line(in, "vector header"), "vector length");
  return parse_bits(next_line(in, "vector body"), len, "vector body");
}

void write_matrix(std::ostream& out, const BitMatrix& m, std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << m.rows() << ' ' << m.cols() << '\n';
  std::string line(m.cols(), '0');
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) line[c] = m.at(r, c) ? '1' : '0';
    out << line << '\n';
  }
}

void write_vector(std::ostream& out, const BitVector& v) { out << v.size() << '\n' << v.to_string() << '\n'; }

BitMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_matrix(in);
}

BitVector load_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_vector(in);
}

void save_matrix(const std::string& path, const BitMatrix& m, std::string_view comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_matrix(out, m, comment);
}

void save_vector(const std::string& path, const BitVector& v) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_vector(out, v);
}

}  // namespace natgt
