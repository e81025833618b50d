// Monte Carlo encode -> decode experiments.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "natgt/rng.hpp"
#include "natgt/scheme.hpp"

namespace natgt {

struct TrialReport {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t u = 0;
  Mode mode = Mode::randomized;
  double epsilon = 0.0;
  std::size_t trials = 0;
  std::size_t successes = 0;              // decoded set == true set
  std::size_t false_positive_trials = 0;  // decoded set not a subset of the true set
  std::size_t h = 0;
  std::size_t k = 0;
  std::size_t tests = 0;  // (2k + 1) h
  double mean_decode_seconds = 0.0;

  double success_rate() const noexcept {
    return trials == 0 ? 0.0 : static_cast<double>(successes) / static_cast<double>(trials);
  }
};

/// |S| uniform in [lo, hi], then S uniform among subsets of [1, n] of that size.
IndexSet draw_defectives(Rng& rng, std::size_t n, std::size_t lo, std::size_t hi);

/// Runs `trials` independent trials. Deterministic mode reuses one G built
/// from options.seed; randomized mode draws a fresh G per trial. Each trial's
/// randomness comes from stream_seed(options.seed, trial), so the report is
/// independent of thread scheduling (apart from timing).
TrialReport run_simulation(const SchemeOptions& options, std::size_t trials);

/// Aligned "key value" lines.
std::string format_report_text(const TrialReport& report);
/// Header line plus one data row.
std::string format_report_csv(const TrialReport& report);
/// Inverse of format_report_csv; throws ParseError on malformed input.
TrialReport parse_report_csv(const std::string& csv);

}  // namespace natgt
