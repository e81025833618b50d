// Disjunct matrices: construction, exhaustive verification, cover decoding.
//
// M is r-disjunct when no union of up to r columns contains another column.
// If M is r-disjunct and y is the OR of at most r of its columns, the cover
// decoder (every column whose support lies inside supp(y)) returns exactly
// those columns.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "natgt/bitmat.hpp"

namespace natgt {

enum class DisjunctConstruction { reed_solomon, random };

std::string_view to_string(DisjunctConstruction c) noexcept;
DisjunctConstruction parse_construction(std::string_view text);

inline constexpr std::uint64_t kDefaultFieldCap = 8192;

/// Reed-Solomon code over the prime field GF(q) with messages of `dimension` symbols.
struct RsParams {
  std::uint64_t q = 0;
  std::uint64_t dimension = 0;

  std::uint64_t rows() const noexcept { return q * q; }
};

/// Smallest prime q (then smallest dimension) with q^dimension >= n and
/// floor((q-1)/(dimension-1)) >= d+1; dimension 1 imposes no disjunctness limit.
/// Throws std::invalid_argument if no prime q <= field_cap works.
RsParams choose_rs_params(std::size_t d, std::uint64_t n, std::uint64_t field_cap = kDefaultFieldCap);

/// Kautz-Singleton matrix: column j is the symbol-position indicator of the
/// j-th RS codeword (row = position * q + symbol), so every column has exactly
/// q ones. Messages are taken in lexicographic order, the base-q digits of
/// the message index giving coefficients from the highest degree down, and
/// truncated to the first n. The result is (d+1)-disjunct.
BitMatrix gen_rs_concatenated(std::size_t d, std::size_t n, std::uint64_t field_cap = kDefaultFieldCap);

/// ceil(3 (d+2)^2 ln n).
std::size_t random_disjunct_rows(std::size_t d, std::uint64_t n);

/// Bernoulli(1/(d+2)) matrix with random_disjunct_rows(d, n) rows. Not
/// guaranteed disjunct; verify with is_disjunct when it matters.
BitMatrix gen_random_disjunct(std::size_t d, std::size_t n, std::uint64_t seed);

/// Dispatches on `construction`; `seed` only matters for the random one.
BitMatrix gen_disjunct(std::size_t d, std::size_t n, DisjunctConstruction construction, std::uint64_t seed);

/// Row count gen_disjunct would produce, without building the matrix.
std::uint64_t disjunct_rows(std::size_t d, std::uint64_t n, DisjunctConstruction construction);

/// Column `column` is contained in the union of the columns in `cover` (1-based).
struct DisjunctWitness {
  std::size_t column = 0;
  IndexSet cover;
};

struct DisjunctVerdict {
  bool disjunct = true;
  std::optional<DisjunctWitness> witness;
  explicit operator bool() const noexcept { return disjunct; }
};

/// Unions the exhaustive check visits: n * C(n-1, r), saturating.
std::uint64_t disjunct_work(std::size_t n, std::size_t r);

/// Exhaustive r-disjunctness check, r < cols. Only |C| = r is enumerated:
/// any smaller covering set extends to one of size r. The witness is the
/// smallest failing column with its lexicographically first cover.
DisjunctVerdict is_disjunct(const BitMatrix& m, std::size_t r);

/// Cover decoder with the column-packed copy of M built once.
class CoverDecoder {
 public:
  explicit CoverDecoder(const BitMatrix& m);

  std::size_t rows() const noexcept { return columns_.cols(); }
  std::size_t cols() const noexcept { return columns_.rows(); }

  /// { j : supp(M_j) is a subset of supp(y) }, 1-based and sorted.
  IndexSet decode(const BitVector& y) const;

  /// Column j (0-based) as packed words.
  std::span<const Word> column_words(std::size_t j) const noexcept { return columns_.row_words(j); }

 private:
  BitMatrix columns_;
};

IndexSet cover_decode(const BitMatrix& m, const BitVector& y);

}  // namespace natgt
