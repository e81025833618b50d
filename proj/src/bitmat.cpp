#include "natgt/bitmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace natgt {

BitVector::BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {
  if (len == 0) throw std::invalid_argument("BitVector: length must be positive");
}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw std::invalid_argument("BitVector: expected only '0' and '1' characters");
  }
  return v;
}

BitVector BitVector::from_bits(std::initializer_list<int> bits) {
  BitVector v(bits.size());
  std::size_t i = 0;
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("BitVector: entries must be 0 or 1");
    v.set(i++, b == 1);
  }
  return v;
}

BitVector BitVector::ones(std::size_t len) {
  BitVector v(len);
  std::fill(v.words_.begin(), v.words_.end(), ~Word{0});
  v.words_.back() &= tail_mask(len);
  return v;
}

std::size_t BitVector::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

bool BitVector::all() const noexcept { return count() == len_; }

bool BitVector::subset_of(const BitVector& other) const {
  require_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

void BitVector::require_same_size(const BitVector& other) const {
  if (len_ != other.len_) throw std::invalid_argument("BitVector: length mismatch");
}

BitVector& BitVector::operator|=(const BitVector& other) {
  require_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector BitVector::operator~() const {
  BitVector out = *this;
  for (Word& w : out.words_) w = ~w;
  if (!out.words_.empty()) out.words_.back() &= tail_mask(len_);
  return out;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("BitMatrix: dimensions must be positive");
}

BitMatrix BitMatrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) throw std::invalid_argument("BitMatrix: no rows");
  BitMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("BitMatrix: ragged rows");
    m.set_row(r, BitVector::from_string(rows[r]));
  }
  return m;
}

BitMatrix BitMatrix::from_rows(std::initializer_list<std::string_view> rows) {
  return from_rows(std::vector<std::string>(rows.begin(), rows.end()));
}

BitMatrix BitMatrix::ones(std::size_t rows, std::size_t cols) {
  BitMatrix m(rows, cols);
  const BitVector all = BitVector::ones(cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, all);
  return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
  return v;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    if (at(r, c)) v.set(r);
  return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& bits) {
  if (bits.size() != cols_) throw std::invalid_argument("BitMatrix::set_row: length mismatch");
  std::copy(bits.words().begin(), bits.words().end(), data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    const auto words = row_words(r);
    for (std::size_t w = 0; w < stride_; ++w) {
      Word bits = words[w];
      while (bits) {
        const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        t.set(c, r);
        bits &= bits - 1;
      }
    }
  }
  return t;
}

BitMatrix BitMatrix::select_columns(const IndexSet& columns) const {
  if (columns.empty()) throw std::invalid_argument("select_columns: empty column set");
  BitMatrix out(rows_, columns.size());
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const std::size_t c = columns[k];
    if (c < 1 || c > cols_) throw std::out_of_range("select_columns: column index out of range");
    for (std::size_t r = 0; r < rows_; ++r)
      if (at(r, c - 1)) out.set(r, k);
  }
  return out;
}

std::size_t BitMatrix::count() const noexcept {
  std::size_t total = 0;
  for (Word w : data_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

BitMatrix complement(const BitMatrix& m) {
  BitMatrix out = m;
  const Word tail = tail_mask(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto words = out.row_words(r);
    for (Word& w : words) w = ~w;
    words.back() &= tail;
  }
  return out;
}

BitMatrix mask_columns(const BitMatrix& m, const BitVector& g) {
  if (g.size() != m.cols()) throw std::invalid_argument("mask_columns: mask length must equal column count");
  BitMatrix out = m;
  const auto mask = g.words();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto words = out.row_words(r);
    for (std::size_t w = 0; w < words.size(); ++w) words[w] &= mask[w];
  }
  return out;
}

BitVector union_columns(const BitMatrix& m, const IndexSet& columns) {
  for (std::size_t c : columns)
    if (c < 1 || c > m.cols()) throw std::out_of_range("union_columns: column index out of range");
  BitVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c : columns) {
      if (m.at(r, c - 1)) {
        out.set(r);
        break;
      }
    }
  }
  return out;
}

BitVector indicator(std::size_t n, const IndexSet& items) {
  BitVector v(n);
  for (std::size_t j : items) {
    if (j < 1 || j > n) throw std::out_of_range("indicator: item index out of range");
    v.set(j - 1);
  }
  return v;
}

IndexSet support(const BitVector& v) {
  IndexSet out;
  const auto words = v.words();
  for (std::size_t w = 0; w < words.size(); ++w) {
    Word bits = words[w];
    while (bits) {
      out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)) + 1);
      bits &= bits - 1;
    }
  }
  return out;
}

}  // namespace natgt
