// (u, w)-completely separating matrices: row-count bounds, random
// generation and exhaustive verification.
//
// A matrix G is (u, w)-completely separating when for every pair of
// disjoint column sets I, J with |I| = u and |J| = w some row of G is 1 on
// all of I and 0 on all of J (a "singular" row for (I, J)).
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "natgt/bitmat.hpp"

namespace natgt {

/// Parameters of a generated separating matrix. `epsilon` is 0 for the
/// universal (deterministic) bound and in (0, 1) for the per-subset bound.
struct SeparatingParams {
  std::size_t u = 1;
  std::size_t w = 1;
  std::size_t n = 0;
  std::size_t h = 1;
  double p = 0.5;
  double epsilon = 0.0;

  /// Rows sufficient for every d = u + w column subset of an h x n matrix to separate.
  static SeparatingParams deterministic(std::size_t u, std::size_t w, std::size_t n);
  /// Rows sufficient for each fixed set of d columns to separate with probability >= 1 - epsilon.
  static SeparatingParams randomized(std::size_t u, std::size_t d, std::size_t n, double epsilon);
};

// Row-count bounds. All logarithms are natural. The *_real forms return the
// unrounded value; the integer forms round up.

/// ((u+w)^(u+w) / (u^u w^w)) * ((u+w) ln(e n/(u+w)) + u ln(e (u+w)/u)) + 1.
/// Requires 1 <= u, 1 <= w, u + w < n.
double rows_needed_deterministic_real(std::size_t u, std::size_t w, std::uint64_t n);
std::size_t rows_needed_deterministic(std::size_t u, std::size_t w, std::uint64_t n);

/// (d/u)^u (d/(d-u))^(d-u) (u ln(e d/u) + ln(1/epsilon)). Requires 1 <= u < d, 0 < epsilon < 1.
double rows_needed_randomized_real(std::size_t u, std::size_t d, double epsilon);
std::size_t rows_needed_randomized(std::size_t u, std::size_t d, double epsilon);

/// h x n matrix with i.i.d. Bernoulli(p) entries, filled row-major from one
/// seeded stream. A pure function of (h, n, p, seed).
BitMatrix gen_random(std::size_t h, std::size_t n, double p, std::uint64_t seed);

/// A disjoint pair (I, J) with no singular row; both 1-based.
struct SeparationWitness {
  IndexSet included;
  IndexSet excluded;
};

struct SeparatingVerdict {
  bool separating = true;
  std::optional<SeparationWitness> witness;
  explicit operator bool() const noexcept { return separating; }
};

/// Number of (I, J) pairs the exhaustive check visits: C(n, u) * C(n - u, w), saturating.
std::uint64_t separating_work(std::size_t n, std::size_t u, std::size_t w);

/// Exhaustive check of all disjoint (I, J), |I| = u, |J| = w. w = 0 is
/// accepted and asks for a row that is all-ones on I. On failure the witness
/// is the lexicographically first failing I, then the first failing J.
/// Runs in parallel; the result does not depend on the schedule.
SeparatingVerdict is_completely_separating(const BitMatrix& g, std::size_t u, std::size_t w);

/// is_completely_separating on the columns of G indexed by the 1-based set
/// `items`, with w = |items| - u.
bool is_pruned_separating(const BitMatrix& g, const IndexSet& items, std::size_t u);

}  // namespace natgt
