// Lexicographic enumeration of k-subsets of {0, ..., n-1}.
#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace natgt {

__extension__ using u128 = unsigned __int128;

/// C(n, k), saturating at UINT64_MAX.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // C(n-k+i, i) = C(n-k+i-1, i-1) * (n-k+i) / i, exact in 128 bits.
    const u128 wide = static_cast<u128>(result) * (n - k + i) / i;
    if (wide > kMax) return kMax;
    result = static_cast<std::uint64_t>(wide);
  }
  return result;
}

/// Saturating a * b.
inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

/// First k-subset in lexicographic order: {0, 1, ..., k-1}.
inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  return c;
}

/// Advances `c` to the next k-subset of {0..n-1}; false after the last one.
inline bool next_combination(std::span<std::size_t> c, std::size_t n) noexcept {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// The k-subset of {0..n-1} at lexicographic position `rank`.
inline std::vector<std::size_t> unrank_combination(std::uint64_t rank, std::size_t n, std::size_t k) {
  std::vector<std::size_t> c(k);
  std::size_t next = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (;; ++next) {
      const std::uint64_t with_next = binomial(n - next - 1, k - i - 1);
      if (rank < with_next) break;
      rank -= with_next;
    }
    c[i] = next++;
  }
  return c;
}

}  // namespace natgt
