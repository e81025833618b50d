#include "natgt/separating.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "natgt/combinations.hpp"
#include "natgt/rng.hpp"

namespace natgt {
namespace {

using Real = long double;

// Rows of the column-packed matrix `cols` that are 1 on every column in `items`.
BitVector rows_all_ones(const BitMatrix& cols, std::span<const std::size_t> items) {
  BitVector rows = BitVector::ones(cols.cols());
  auto acc = rows.words();
  for (std::size_t c : items) {
    const auto col = cols.row_words(c);
    for (std::size_t w = 0; w < acc.size(); ++w) acc[w] &= col[w];
  }
  return rows;
}

// First J (lexicographic over the complement of I) whose columns cover every
// row in `candidate_rows`, i.e. a J no singular row exists for.
std::optional<std::vector<std::size_t>> first_unseparated(const BitMatrix& cols, std::span<const std::size_t> chosen,
                                                          const BitVector& candidate_rows, std::size_t w) {
  const std::size_t n = cols.rows();
  std::vector<std::size_t> rest;
  rest.reserve(n - chosen.size());
  for (std::size_t c = 0, next = 0; c < n; ++c) {
    if (next < chosen.size() && chosen[next] == c)
      ++next;
    else
      rest.push_back(c);
  }

  const auto target = candidate_rows.words();
  std::vector<Word> cover(target.size());
  auto pick = first_combination(w);
  do {
    std::fill(cover.begin(), cover.end(), Word{0});
    for (std::size_t idx : pick) {
      const auto col = cols.row_words(rest[idx]);
      for (std::size_t k = 0; k < cover.size(); ++k) cover[k] |= col[k];
    }
    bool has_singular = false;
    for (std::size_t k = 0; k < cover.size(); ++k) {
      if (target[k] & ~cover[k]) {
        has_singular = true;
        break;
      }
    }
    if (!has_singular) {
      std::vector<std::size_t> j(w);
      for (std::size_t i = 0; i < w; ++i) j[i] = rest[pick[i]];
      return j;
    }
  } while (next_combination(pick, rest.size()));
  return std::nullopt;
}

IndexSet to_one_based(std::span<const std::size_t> zero_based) {
  IndexSet out(zero_based.begin(), zero_based.end());
  for (auto& v : out) ++v;
  return out;
}

void require_separating_args(std::size_t n, std::size_t u, std::size_t w) {
  if (u < 1) throw std::invalid_argument("separating check: u must be >= 1");
  if (u + w > n) throw std::invalid_argument("separating check: u + w must not exceed the column count");
}

}  // namespace

double rows_needed_deterministic_real(std::size_t u, std::size_t w, std::uint64_t n) {
  if (u < 1 || w < 1) throw std::invalid_argument("rows_needed_deterministic: u and w must be >= 1");
  if (static_cast<std::uint64_t>(u + w) >= n) throw std::invalid_argument("rows_needed_deterministic: requires u + w < n");
  const Real s = static_cast<Real>(u + w);
  const Real ru = static_cast<Real>(u);
  const Real rw = static_cast<Real>(w);
  const Real coeff = std::pow(s / ru, ru) * std::pow(s / rw, rw);
  const Real bracket = s * (1.0L + std::log(static_cast<Real>(n) / s)) + ru * (1.0L + std::log(s / ru));
  return static_cast<double>(coeff * bracket + 1.0L);
}

std::size_t rows_needed_deterministic(std::size_t u, std::size_t w, std::uint64_t n) {
  return static_cast<std::size_t>(std::ceil(rows_needed_deterministic_real(u, w, n)));
}

double rows_needed_randomized_real(std::size_t u, std::size_t d, double epsilon) {
  if (u < 1 || u >= d) throw std::invalid_argument("rows_needed_randomized: requires 1 <= u < d");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("rows_needed_randomized: requires 0 < epsilon < 1");
  const Real rd = static_cast<Real>(d);
  const Real ru = static_cast<Real>(u);
  const Real rest = static_cast<Real>(d - u);
  const Real coeff = std::pow(rd / ru, ru) * std::pow(rd / rest, rest);
  const Real bracket = ru * (1.0L + std::log(rd / ru)) - std::log(static_cast<Real>(epsilon));
  return static_cast<double>(coeff * bracket);
}

std::size_t rows_needed_randomized(std::size_t u, std::size_t d, double epsilon) {
  return static_cast<std::size_t>(std::ceil(rows_needed_randomized_real(u, d, epsilon)));
}

SeparatingParams SeparatingParams::deterministic(std::size_t u, std::size_t w, std::size_t n) {
  SeparatingParams p;
  p.u = u;
  p.w = w;
  p.n = n;
  p.h = rows_needed_deterministic(u, w, n);
  p.p = static_cast<double>(u) / static_cast<double>(u + w);
  p.epsilon = 0.0;
  return p;
}

SeparatingParams SeparatingParams::randomized(std::size_t u, std::size_t d, std::size_t n, double epsilon) {
  SeparatingParams p;
  p.u = u;
  p.w = d - u;
  p.n = n;
  p.h = rows_needed_randomized(u, d, epsilon);
  p.p = static_cast<double>(u) / static_cast<double>(d);
  p.epsilon = epsilon;
  return p;
}

BitMatrix gen_random(std::size_t h, std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_random: p must lie in [0, 1]");
  BitMatrix g(h, n);
  Rng rng(seed);
  for (std::size_t r = 0; r < h; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (rng.bernoulli(p)) g.set(r, c);
  return g;
}

std::uint64_t separating_work(std::size_t n, std::size_t u, std::size_t w) {
  if (u + w > n) return 0;
  return saturating_mul(binomial(n, u), binomial(n - u, w));
}

SeparatingVerdict is_completely_separating(const BitMatrix& g, std::size_t u, std::size_t w) {
  const std::size_t n = g.cols();
  require_separating_args(n, u, w);
  const BitMatrix cols = g.transpose();

  constexpr std::uint64_t kBlock = 256;
  const std::uint64_t total = binomial(n, u);
  const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
  std::atomic<std::uint64_t> first_bad{std::numeric_limits<std::uint64_t>::max()};

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
    if (begin >= first_bad.load(std::memory_order_relaxed)) continue;
    const std::uint64_t end = std::min(total, begin + kBlock);
    auto chosen = unrank_combination(begin, n, u);
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      if (rank >= first_bad.load(std::memory_order_relaxed)) break;
      if (first_unseparated(cols, chosen, rows_all_ones(cols, chosen), w)) {
        std::uint64_t seen = first_bad.load(std::memory_order_relaxed);
        while (rank < seen && !first_bad.compare_exchange_weak(seen, rank)) {
        }
        break;
      }
      next_combination(chosen, n);
    }
  }

  const std::uint64_t bad = first_bad.load();
  if (bad == std::numeric_limits<std::uint64_t>::max()) return {};
  const auto chosen = unrank_combination(bad, n, u);
  const auto excluded = *first_unseparated(cols, chosen, rows_all_ones(cols, chosen), w);
  return {false, SeparationWitness{to_one_based(chosen), to_one_based(excluded)}};
}

bool is_pruned_separating(const BitMatrix& g, const IndexSet& items, std::size_t u) {
  if (u < 1 || items.size() < u || items.size() > g.cols())
    throw std::invalid_argument("is_pruned_separating: requires 1 <= u <= |items| <= column count");
  return is_completely_separating(g.select_columns(items), u, items.size() - u).separating;
}

}  // namespace natgt
