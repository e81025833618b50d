// Threshold group testing with gap zero: a test is positive iff its pool
// holds at least u defectives.
//
// The measurement matrix stacks, for each row g_i of a separating matrix G,
// the block [g_i; M diag(g_i); complement(M) diag(g_i)], where M is a
// (d+1)-disjunct k x n matrix. Outcomes are laid out the same way: one
// indicator bit y_i followed by two k-bit blocks per row of G.
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "natgt/bitmat.hpp"
#include "natgt/disjunct.hpp"

namespace natgt {

enum class Mode { deterministic, randomized };

std::string_view to_string(Mode mode) noexcept;
Mode parse_mode(std::string_view text);

struct SchemeOptions {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t u = 0;
  Mode mode = Mode::randomized;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  DisjunctConstruction construction = DisjunctConstruction::reed_solomon;
};

/// Row count of G that build_scheme uses: 1 when u == d, otherwise the
/// deterministic bound for (u, d-u, n) or the randomized bound for (u, d, epsilon).
std::size_t separating_rows(const SchemeOptions& options);
/// Unrounded value of the same bound (1.0 when u == d).
double separating_rows_real(const SchemeOptions& options);

class MeasurementScheme {
 public:
  /// Checks G.cols == M.cols == n and 2 <= u <= d < n.
  MeasurementScheme(BitMatrix g, BitMatrix m, std::size_t u, std::size_t d, Mode mode = Mode::randomized,
                    double epsilon = 0.0, std::uint64_t seed = 0,
                    DisjunctConstruction construction = DisjunctConstruction::reed_solomon);

  const BitMatrix& separating() const noexcept { return g_; }
  const BitMatrix& disjunct() const noexcept { return m_; }
  const BitMatrix& disjunct_complement() const noexcept { return m_bar_; }
  const CoverDecoder& cover_decoder() const noexcept { return decoder_; }

  std::size_t n() const noexcept { return g_.cols(); }
  std::size_t h() const noexcept { return g_.rows(); }
  std::size_t k() const noexcept { return m_.rows(); }
  std::size_t u() const noexcept { return u_; }
  std::size_t d() const noexcept { return d_; }
  Mode mode() const noexcept { return mode_; }
  double epsilon() const noexcept { return epsilon_; }
  std::uint64_t seed() const noexcept { return seed_; }
  DisjunctConstruction construction() const noexcept { return construction_; }

  /// (2k + 1) * h.
  std::size_t tests() const noexcept { return (2 * k() + 1) * h(); }
  std::size_t block_size() const noexcept { return 2 * k() + 1; }

 private:
  BitMatrix g_;
  BitMatrix m_;
  BitMatrix m_bar_;
  CoverDecoder decoder_;
  std::size_t u_;
  std::size_t d_;
  Mode mode_;
  double epsilon_;
  std::uint64_t seed_;
  DisjunctConstruction construction_;
};

/// G ~ Bernoulli(u/d) with separating_rows(options) rows (one all-ones row
/// when u == d); M from the chosen disjunct construction.
MeasurementScheme build_scheme(const SchemeOptions& options);

/// Same M and parameters, with G replaced.
MeasurementScheme with_separating(const MeasurementScheme& scheme, BitMatrix g);

/// The explicit (2k+1)h x n measurement matrix.
BitMatrix stack_matrix(const MeasurementScheme& scheme);

/// Bit i is 1 iff |row_i AND x| >= u (integer count).
BitVector threshold_encode(const BitMatrix& t, const BitVector& x, std::size_t u);

/// OR of the columns of M selected by x; equals threshold_encode(M, x, 1).
BitVector classical_encode(const BitMatrix& m, const BitVector& x);

/// Per coordinate: y = 1 -> 1; y = 0, ybar = 1 -> 0; y = 0, ybar = 0 -> 1.
BitVector convert_outcomes(const BitVector& y_block, const BitVector& ybar_block);

/// Read-only view of an outcome vector split into per-G-row blocks.
class OutcomeView {
 public:
  /// Throws std::invalid_argument unless outcome.size() == (2k+1) h.
  OutcomeView(const BitVector& outcome, std::size_t h, std::size_t k);

  std::size_t h() const noexcept { return h_; }
  std::size_t k() const noexcept { return k_; }

  /// y_i for 0-based G-row i.
  bool indicator(std::size_t i) const noexcept { return outcome_.test(i * (2 * k_ + 1)); }
  BitVector y_block(std::size_t i) const { return slice(i * (2 * k_ + 1) + 1); }
  BitVector ybar_block(std::size_t i) const { return slice(i * (2 * k_ + 1) + 1 + k_); }

 private:
  BitVector slice(std::size_t offset) const;

  const BitVector& outcome_;
  std::size_t h_;
  std::size_t k_;
};

/// The decoder: for each G-row with a positive indicator, convert the two
/// blocks to a classical outcome y', cover-decode it with M, and accept the
/// candidate set only if it has exactly u items and its column union equals
/// y'. Returns the union of accepted sets. Rows are processed in parallel;
/// the result is identical to sequential execution.
IndexSet decode(const MeasurementScheme& scheme, const BitVector& outcome);

/// The outcome of testing the defective set `items` (1-based, |items| <= d)
/// with stack_matrix(scheme), computed block by block without building it.
BitVector simulate_instance(const MeasurementScheme& scheme, const IndexSet& items);

// Scheme files: "key=value" header lines (n, d, u, mode, epsilon, seed, h,
// k, construction), then "[G]" and the G matrix, then "[M]" and the M matrix.
void write_scheme(std::ostream& out, const MeasurementScheme& scheme);
MeasurementScheme read_scheme(std::istream& in);
void save_scheme(const std::string& path, const MeasurementScheme& scheme);
MeasurementScheme load_scheme(const std::string& path);

}  // namespace natgt
