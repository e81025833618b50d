#include "natgt/disjunct.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "natgt/combinations.hpp"
#include "natgt/rng.hpp"

namespace natgt {
namespace {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t f = 2; f * f <= v; ++f)
    if (v % f == 0) return false;
  return true;
}

void require_disjunct_args(std::size_t d, std::uint64_t n) {
  if (n < 2 || d + 1 >= n) throw std::invalid_argument("disjunct construction: requires n >= 2 and d + 1 < n");
}

// First cover (lexicographic over the other columns) of size r containing column j.
std::optional<std::vector<std::size_t>> first_cover(const BitMatrix& cols, std::size_t j, std::size_t r) {
  const std::size_t n = cols.rows();
  const auto target = cols.row_words(j);
  std::vector<Word> cover(target.size());
  auto pick = first_combination(r);
  const auto other = [j](std::size_t idx) { return idx < j ? idx : idx + 1; };
  do {
    std::fill(cover.begin(), cover.end(), Word{0});
    for (std::size_t idx : pick) {
      const auto col = cols.row_words(other(idx));
      for (std::size_t k = 0; k < cover.size(); ++k) cover[k] |= col[k];
    }
    bool contained = true;
    for (std::size_t k = 0; k < cover.size(); ++k) {
      if (target[k] & ~cover[k]) {
        contained = false;
        break;
      }
    }
    if (contained) {
      std::vector<std::size_t> c(r);
      for (std::size_t i = 0; i < r; ++i) c[i] = other(pick[i]);
      return c;
    }
  } while (next_combination(pick, n - 1));
  return std::nullopt;
}

}  // namespace

std::string_view to_string(DisjunctConstruction c) noexcept {
  return c == DisjunctConstruction::reed_solomon ? "rs" : "random";
}

DisjunctConstruction parse_construction(std::string_view text) {
  if (text == "rs") return DisjunctConstruction::reed_solomon;
  if (text == "random") return DisjunctConstruction::random;
  throw std::invalid_argument("unknown disjunct construction '" + std::string(text) + "' (expected rs or random)");
}

RsParams choose_rs_params(std::size_t d, std::uint64_t n, std::uint64_t field_cap) {
  require_disjunct_args(d, n);
  for (std::uint64_t q = 2; q <= field_cap; ++q) {
    if (!is_prime(q)) continue;
    std::uint64_t reach = q;  // q^dimension, saturating
    for (std::uint64_t dim = 1;; ++dim) {
      if (dim > 1 && (q - 1) / (dim - 1) < d + 1) break;
      if (reach >= n) return {q, dim};
      reach = saturating_mul(reach, q);
    }
  }
  throw std::invalid_argument("no Reed-Solomon parameters with field size <= " + std::to_string(field_cap) +
                              " give a " + std::to_string(d + 1) + "-disjunct matrix on " + std::to_string(n) +
                              " columns");
}

BitMatrix gen_rs_concatenated(std::size_t d, std::size_t n, std::uint64_t field_cap) {
  const RsParams rs = choose_rs_params(d, n, field_cap);
  const std::uint64_t q = rs.q;
  BitMatrix m(static_cast<std::size_t>(rs.rows()), n);
  std::vector<std::uint64_t> coeffs(rs.dimension);  // highest degree first
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t index = j;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
      coeffs[i] = index % q;
      index /= q;
    }
    for (std::uint64_t point = 0; point < q; ++point) {
      std::uint64_t value = 0;
      for (std::uint64_t c : coeffs) value = (value * point + c) % q;
      m.set(static_cast<std::size_t>(point * q + value), j);
    }
  }
  return m;
}

std::size_t random_disjunct_rows(std::size_t d, std::uint64_t n) {
  require_disjunct_args(d, n);
  const double width = static_cast<double>(d + 2);
  return static_cast<std::size_t>(std::ceil(3.0 * width * width * std::log(static_cast<double>(n))));
}

BitMatrix gen_random_disjunct(std::size_t d, std::size_t n, std::uint64_t seed) {
  const std::size_t k = random_disjunct_rows(d, n);
  const double p = 1.0 / static_cast<double>(d + 2);
  BitMatrix m(k, n);
  Rng rng(seed);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (rng.bernoulli(p)) m.set(r, c);
  return m;
}

BitMatrix gen_disjunct(std::size_t d, std::size_t n, DisjunctConstruction construction, std::uint64_t seed) {
  return construction == DisjunctConstruction::reed_solomon ? gen_rs_concatenated(d, n)
                                                            : gen_random_disjunct(d, n, seed);
}

std::uint64_t disjunct_rows(std::size_t d, std::uint64_t n, DisjunctConstruction construction) {
  return construction == DisjunctConstruction::reed_solomon ? choose_rs_params(d, n).rows()
                                                            : random_disjunct_rows(d, n);
}

std::uint64_t disjunct_work(std::size_t n, std::size_t r) {
  if (n == 0 || r >= n) return 0;
  return saturating_mul(n, binomial(n - 1, r));
}

DisjunctVerdict is_disjunct(const BitMatrix& m, std::size_t r) {
  const std::size_t n = m.cols();
  if (r >= n) throw std::invalid_argument("is_disjunct: requires r < column count");
  const BitMatrix cols = m.transpose();
  std::atomic<std::size_t> first_bad{std::numeric_limits<std::size_t>::max()};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t sj = 0; sj < static_cast<std::int64_t>(n); ++sj) {
    const auto j = static_cast<std::size_t>(sj);
    if (j >= first_bad.load(std::memory_order_relaxed)) continue;
    if (first_cover(cols, j, r)) {
      std::size_t seen = first_bad.load(std::memory_order_relaxed);
      while (j < seen && !first_bad.compare_exchange_weak(seen, j)) {
      }
    }
  }

  const std::size_t bad = first_bad.load();
  if (bad == std::numeric_limits<std::size_t>::max()) return {};
  IndexSet cover = *first_cover(cols, bad, r);
  for (auto& c : cover) ++c;
  return {false, DisjunctWitness{bad + 1, std::move(cover)}};
}

CoverDecoder::CoverDecoder(const BitMatrix& m) : columns_(m.transpose()) {}

IndexSet CoverDecoder::decode(const BitVector& y) const {
  if (y.size() != rows()) throw std::invalid_argument("cover_decode: outcome length must equal the row count");
  const auto outcome = y.words();
  IndexSet found;
  for (std::size_t j = 0; j < cols(); ++j) {
    const auto col = columns_.row_words(j);
    bool inside = true;
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (col[k] & ~outcome[k]) {
        inside = false;
        break;
      }
    }
    if (inside) found.push_back(j + 1);
  }
  return found;
}

IndexSet cover_decode(const BitMatrix& m, const BitVector& y) { return CoverDecoder(m).decode(y); }

}  // namespace natgt
