#include <gtest/gtest.h>

#include <set>

#include "natgt/simulation.hpp"
#include "natgt/text_format.hpp"

using namespace natgt;

TEST(DrawDefectives, SizesAndRange) {
  Rng rng(1);
  std::set<std::size_t> sizes;
  for (int i = 0; i < 400; ++i) {
    const IndexSet s = draw_defectives(rng, 20, 2, 5);
    sizes.insert(s.size());
    ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
    ASSERT_TRUE(std::adjacent_find(s.begin(), s.end()) == s.end());
    for (std::size_t j : s) ASSERT_TRUE(j >= 1 && j <= 20);
  }
  EXPECT_EQ(sizes, (std::set<std::size_t>{2, 3, 4, 5}));
  EXPECT_THROW(draw_defectives(rng, 5, 3, 6), std::invalid_argument);
}

TEST(RunSimulation, EqualThresholdAlwaysSucceeds) {
  const TrialReport r = run_simulation({.n = 30, .d = 3, .u = 3, .seed = 2}, 200);
  EXPECT_EQ(r.trials, 200u);
  EXPECT_EQ(r.successes, 200u);
  EXPECT_EQ(r.false_positive_trials, 0u);
  EXPECT_EQ(r.h, 1u);
  EXPECT_EQ(r.tests, 2 * r.k + 1);
}

TEST(RunSimulation, NoFalsePositivesAndDeterministic) {
  const SchemeOptions o{.n = 80, .d = 4, .u = 2, .mode = Mode::randomized, .epsilon = 0.3, .seed = 8};
  const TrialReport a = run_simulation(o, 150);
  const TrialReport b = run_simulation(o, 150);
  EXPECT_EQ(a.false_positive_trials, 0u);
  EXPECT_EQ(a.successes, b.successes);
  EXPECT_GT(a.success_rate(), 0.5);
  EXPECT_THROW(run_simulation(o, 0), std::invalid_argument);
}

TEST(Report, CsvRoundTrip) {
  TrialReport r;
  r.n = 200;
  r.d = 6;
  r.u = 3;
  r.mode = Mode::deterministic;
  r.epsilon = 0.05;
  r.trials = 1000;
  r.successes = 987;
  r.false_positive_trials = 0;
  r.h = 3000;
  r.k = 289;
  r.tests = 579 * 3000;
  r.mean_decode_seconds = 1.25e-4;
  const std::string csv = format_report_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "n,d,u,mode,epsilon,trials,successes,false_positive_trials,h,k,tests,mean_decode_seconds");
  const TrialReport back = parse_report_csv(csv);
  EXPECT_EQ(back.n, r.n);
  EXPECT_EQ(back.mode, r.mode);
  EXPECT_EQ(back.successes, r.successes);
  EXPECT_EQ(back.tests, r.tests);
  EXPECT_DOUBLE_EQ(back.epsilon, r.epsilon);
  EXPECT_DOUBLE_EQ(back.mean_decode_seconds, r.mean_decode_seconds);
  EXPECT_THROW(parse_report_csv("n,d\n1,2\n"), ParseError);
  EXPECT_NE(format_report_text(r).find("987"), std::string::npos);
}
