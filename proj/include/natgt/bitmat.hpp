// Dense bit-packed binary vectors and matrices.
//
// Element accessors (`test`, `at`, `set`) are 0-based like any container.
// Item-index sets (`IndexSet`) are 1-based everywhere they cross the public
// API: union_columns, indicator, support, decoder outputs, witnesses.
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace natgt {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// Sorted, duplicate-free set of 1-based item indices.
using IndexSet = std::vector<std::size_t>;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

/// Mask of the valid bits in the last word of a `bits`-long packed row.
constexpr Word tail_mask(std::size_t bits) {
  const std::size_t rem = bits % kWordBits;
  return rem == 0 ? ~Word{0} : (Word{1} << rem) - 1;
}

class BitVector {
 public:
  BitVector() = default;
  /// All-zeros vector of length `len` (len >= 1).
  explicit BitVector(std::size_t len);

  /// Parses a string of '0'/'1' characters.
  static BitVector from_string(std::string_view bits);
  static BitVector from_bits(std::initializer_list<int> bits);
  static BitVector ones(std::size_t len);

  std::size_t size() const noexcept { return len_; }
  bool empty() const noexcept { return len_ == 0; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i, bool value = true) noexcept {
    const Word bit = Word{1} << (i % kWordBits);
    if (value)
      words_[i / kWordBits] |= bit;
    else
      words_[i / kWordBits] &= ~bit;
  }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool all() const noexcept;

  /// True when every set bit of *this is also set in `other`.
  bool subset_of(const BitVector& other) const;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  BitVector& operator|=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator^=(const BitVector& other);
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  BitVector operator~() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::string to_string() const;

 private:
  void require_same_size(const BitVector& other) const;

  std::size_t len_ = 0;
  std::vector<Word> words_;
};

class BitMatrix {
 public:
  BitMatrix() = default;
  /// All-zeros `rows` x `cols` matrix; both dimensions must be >= 1.
  BitMatrix(std::size_t rows, std::size_t cols);

  /// One string of '0'/'1' per row; all rows must have equal length.
  static BitMatrix from_rows(const std::vector<std::string>& rows);
  static BitMatrix from_rows(std::initializer_list<std::string_view> rows);
  static BitMatrix ones(std::size_t rows, std::size_t cols);
  static BitMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return stride_; }

  bool at(std::size_t r, std::size_t c) const noexcept {
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value = true) noexcept {
    Word& w = data_[r * stride_ + c / kWordBits];
    const Word bit = Word{1} << (c % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
  }

  std::span<const Word> row_words(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }
  std::span<Word> row_words(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }

  BitVector row(std::size_t r) const;
  BitVector column(std::size_t c) const;
  void set_row(std::size_t r, const BitVector& bits);

  /// Column-packed copy: row j of the result is column j of *this.
  BitMatrix transpose() const;

  /// Columns selected by 1-based `columns`, in the given order.
  BitMatrix select_columns(const IndexSet& columns) const;

  std::size_t count() const noexcept;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Entry-wise 1 - m.
BitMatrix complement(const BitMatrix& m);

/// M x diag(g): column j is kept when g_j = 1 and zeroed otherwise.
BitMatrix mask_columns(const BitMatrix& m, const BitVector& g);

/// Coordinate-wise OR of the 1-based columns in `columns`; empty set gives all-zeros.
BitVector union_columns(const BitMatrix& m, const IndexSet& columns);

/// Length-n indicator vector of a 1-based index set.
BitVector indicator(std::size_t n, const IndexSet& items);

/// 1-based positions of the set bits.
IndexSet support(const BitVector& v);

/// Popcount of the AND of two equally sized word spans.
inline std::size_t and_count(std::span<const Word> a, std::span<const Word> b) noexcept {
  std::size_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

}  // namespace natgt
