#include "natgt/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "natgt/separating.hpp"
#include "natgt/text_format.hpp"

namespace natgt {
namespace {

constexpr const char* kCsvHeader =
    "n,d,u,mode,epsilon,trials,successes,false_positive_trials,h,k,tests,mean_decode_seconds";

// Salts keep the G stream and the defective-set stream of one trial apart.
constexpr std::uint64_t kSeparatingSalt = 0x5e9a7a7e00000000ULL;

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, sep)) out.push_back(field);
  return out;
}

}  // namespace

IndexSet draw_defectives(Rng& rng, std::size_t n, std::size_t lo, std::size_t hi) {
  if (lo > hi || hi > n) throw std::invalid_argument("draw_defectives: requires lo <= hi <= n");
  const std::size_t size = lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
  // Floyd's sampling: exactly `size` draws, uniform over all subsets.
  IndexSet picked;
  for (std::size_t j = n - size; j < n; ++j) {
    const std::size_t t = static_cast<std::size_t>(rng.below(j + 1)) + 1;
    if (std::find(picked.begin(), picked.end(), t) == picked.end())
      picked.push_back(t);
    else
      picked.push_back(j + 1);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

TrialReport run_simulation(const SchemeOptions& options, std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("run_simulation: trials must be >= 1");
  const MeasurementScheme base = build_scheme(options);
  const bool fresh_g = options.mode == Mode::randomized && options.u < options.d;
  const double p = static_cast<double>(options.u) / static_cast<double>(options.d);

  std::size_t successes = 0;
  std::size_t false_positives = 0;
  double decode_seconds = 0.0;

#pragma omp parallel for schedule(dynamic, 1) reduction(+ : successes, false_positives, decode_seconds)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(trials); ++t) {
    const std::uint64_t trial_seed = stream_seed(options.seed, static_cast<std::uint64_t>(t));
    Rng rng(trial_seed);
    const IndexSet truth = draw_defectives(rng, options.n, options.u, options.d);

    const auto run = [&truth](const MeasurementScheme& scheme) {
      const BitVector outcome = simulate_instance(scheme, truth);
      const auto start = std::chrono::steady_clock::now();
      const IndexSet decoded = decode(scheme, outcome);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return std::pair{decoded, seconds};
    };

    const auto [decoded, seconds] =
        fresh_g ? run(with_separating(base, gen_random(base.h(), options.n, p, trial_seed ^ kSeparatingSalt)))
                : run(base);
    decode_seconds += seconds;
    if (decoded == truth) ++successes;
    if (!std::includes(truth.begin(), truth.end(), decoded.begin(), decoded.end())) ++false_positives;
  }

  TrialReport report;
  report.n = options.n;
  report.d = options.d;
  report.u = options.u;
  report.mode = options.mode;
  report.epsilon = options.epsilon;
  report.trials = trials;
  report.successes = successes;
  report.false_positive_trials = false_positives;
  report.h = base.h();
  report.k = base.k();
  report.tests = base.tests();
  report.mean_decode_seconds = trials == 0 ? 0.0 : decode_seconds / static_cast<double>(trials);
  return report;
}

std::string format_report_text(const TrialReport& r) {
  std::string out;
  const auto line = [&out](std::string_view key, const std::string& value) {
    out += fmt::format("{:<24}{}\n", key, value);
  };
  line("n", std::to_string(r.n));
  line("d", std::to_string(r.d));
  line("u", std::to_string(r.u));
  line("mode", std::string(to_string(r.mode)));
  line("epsilon", fmt::format("{}", r.epsilon));
  line("h", std::to_string(r.h));
  line("k", std::to_string(r.k));
  line("tests", std::to_string(r.tests));
  line("trials", std::to_string(r.trials));
  line("successes", std::to_string(r.successes));
  line("success_rate", fmt::format("{:.6f}", r.success_rate()));
  line("false_positive_trials", std::to_string(r.false_positive_trials));
  line("mean_decode_seconds", fmt::format("{:.3e}", r.mean_decode_seconds));
  return out;
}

std::string format_report_csv(const TrialReport& r) {
  return fmt::format("{}\n{},{},{},{},{},{},{},{},{},{},{},{}\n", kCsvHeader, r.n, r.d, r.u, to_string(r.mode),
                     r.epsilon, r.trials, r.successes, r.false_positive_trials, r.h, r.k, r.tests,
                     r.mean_decode_seconds);
}

TrialReport parse_report_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string header;
  std::string row;
  if (!std::getline(in, header) || header != kCsvHeader) throw ParseError("report csv: unexpected header");
  if (!std::getline(in, row)) throw ParseError("report csv: missing data row");
  const auto fields = split(row, ',');
  if (fields.size() != 12) throw ParseError("report csv: expected 12 fields");
  try {
    TrialReport r;
    r.n = std::stoull(fields[0]);
    r.d = std::stoull(fields[1]);
    r.u = std::stoull(fields[2]);
    r.mode = parse_mode(fields[3]);
    r.epsilon = std::stod(fields[4]);
    r.trials = std::stoull(fields[5]);
    r.successes = std::stoull(fields[6]);
    r.false_positive_trials = std::stoull(fields[7]);
    r.h = std::stoull(fields[8]);
    r.k = std::stoull(fields[9]);
    r.tests = std::stoull(fields[10]);
    r.mean_decode_seconds = std::stod(fields[11]);
    return r;
  } catch (const std::exception& e) {
    throw ParseError(std::string("report csv: ") + e.what());
  }
}

}  // namespace natgt
