#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "natgt/combinations.hpp"
#include "natgt/rng.hpp"
#include "natgt/scheme.hpp"
#include "natgt/separating.hpp"
#include "natgt/text_format.hpp"
#include "oracles/oracles.hpp"

using namespace natgt;

namespace {

const BitVector kWorkedY = BitVector::from_bits({0, 0, 1, 0, 0, 0, 0, 0, 0});
const BitVector kWorkedYbar = BitVector::from_bits({1, 1, 0, 1, 0, 0, 0, 1, 0});
const BitVector kWorkedYprime = BitVector::from_bits({0, 0, 1, 0, 1, 1, 1, 0, 1});

MeasurementScheme worked_example_scheme() {
  return MeasurementScheme(BitMatrix::ones(1, 12), oracle::worked_example_matrix(), 2, 2);
}

IndexSet random_set(Rng& rng, std::size_t n, std::size_t size) {
  IndexSet s;
  while (s.size() < size) {
    const std::size_t j = 1 + rng.below(n);
    if (std::find(s.begin(), s.end(), j) == s.end()) s.push_back(j);
  }
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<IndexSet> subsets_of_size(std::size_t n, std::size_t size) {
  std::vector<IndexSet> out;
  auto c = first_combination(size);
  do {
    IndexSet s;
    for (std::size_t v : c) s.push_back(v + 1);
    out.push_back(s);
  } while (next_combination(c, n));
  return out;
}

}  // namespace

TEST(BuildScheme, EqualThresholdCollapsesToOneRow) {
  const MeasurementScheme s = build_scheme({.n = 12, .d = 2, .u = 2});
  EXPECT_EQ(s.h(), 1u);
  EXPECT_EQ(s.separating(), BitMatrix::ones(1, 12));
  EXPECT_EQ(s.tests(), 2 * s.k() + 1);
}

TEST(BuildScheme, RowCountsFollowTheBounds) {
  const MeasurementScheme rnd = build_scheme({.n = 12, .d = 3, .u = 2, .mode = Mode::randomized, .epsilon = 0.1, .seed = 3});
  EXPECT_EQ(rnd.h(), rows_needed_randomized(2, 3, 0.1));
  EXPECT_EQ(rnd.h(), 35u);
  const MeasurementScheme det = build_scheme({.n = 12, .d = 3, .u = 2, .mode = Mode::deterministic, .seed = 3});
  EXPECT_EQ(det.h(), rows_needed_deterministic(2, 1, 12));
  EXPECT_EQ(det.k(), 25u);  // q = 5, dimension 2
}

TEST(BuildScheme, RejectsInvalidParameters) {
  EXPECT_THROW(build_scheme({.n = 12, .d = 3, .u = 1}), std::invalid_argument);
  EXPECT_THROW(build_scheme({.n = 12, .d = 2, .u = 3}), std::invalid_argument);
  EXPECT_THROW(build_scheme({.n = 4, .d = 4, .u = 2}), std::invalid_argument);
  EXPECT_THROW(MeasurementScheme(BitMatrix(2, 10), BitMatrix(3, 11), 2, 3), std::invalid_argument);
}

TEST(BuildScheme, Deterministic) {
  const SchemeOptions o{.n = 40, .d = 4, .u = 2, .mode = Mode::randomized, .epsilon = 0.2, .seed = 9};
  const MeasurementScheme a = build_scheme(o);
  const MeasurementScheme b = build_scheme(o);
  EXPECT_EQ(a.separating(), b.separating());
  EXPECT_EQ(a.disjunct(), b.disjunct());
}

TEST(StackMatrix, Layout) {
  const BitMatrix m = oracle::worked_example_matrix();
  const BitMatrix t = stack_matrix(worked_example_scheme());
  ASSERT_EQ(t.rows(), 19u);
  EXPECT_EQ(t.row(0), BitVector::ones(12));
  for (std::size_t l = 0; l < 9; ++l) {
    EXPECT_EQ(t.row(1 + l), m.row(l));
    EXPECT_EQ(t.row(10 + l), complement(m).row(l));
  }

  const BitMatrix zeros = stack_matrix(MeasurementScheme(BitMatrix(1, 12), m, 2, 2));
  EXPECT_EQ(zeros, BitMatrix(19, 12));
}

TEST(StackMatrix, BlocksAreMaskedCopies) {
  const MeasurementScheme s = build_scheme({.n = 30, .d = 3, .u = 2, .epsilon = 0.3, .seed = 4});
  const BitMatrix t = stack_matrix(s);
  ASSERT_EQ(t.rows(), s.tests());
  const std::size_t k = s.k();
  for (std::size_t i = 0; i < s.h(); ++i) {
    const BitVector g = s.separating().row(i);
    const BitMatrix masked = mask_columns(s.disjunct(), g);
    const BitMatrix masked_bar = mask_columns(complement(s.disjunct()), g);
    ASSERT_EQ(t.row((2 * k + 1) * i), g);
    for (std::size_t l = 0; l < k; ++l) {
      ASSERT_EQ(t.row((2 * k + 1) * i + 1 + l), masked.row(l));
      ASSERT_EQ(t.row((2 * k + 1) * i + 1 + k + l), masked_bar.row(l));
    }
  }
}

TEST(ThresholdEncode, WorkedExample) {
  const BitMatrix m = oracle::worked_example_matrix();
  const BitVector x = indicator(12, {1, 2});
  EXPECT_EQ(threshold_encode(m, x, 2), kWorkedY);
  EXPECT_EQ(threshold_encode(complement(m), x, 2), kWorkedYbar);
  EXPECT_EQ(threshold_encode(m, BitVector(12), 2), BitVector(9));
  EXPECT_THROW(threshold_encode(m, BitVector(11), 2), std::invalid_argument);
  EXPECT_THROW(threshold_encode(m, x, 0), std::invalid_argument);
}

TEST(ThresholdEncode, MatchesEntrywiseOracle) {
  Rng rng(12);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const BitMatrix t = gen_random(25, 100, 0.3, seed);
    const BitVector x = gen_random(1, 100, 0.1, seed + 77).row(0);
    const std::size_t u = 1 + rng.below(4);
    std::vector<int> xs(100);
    for (std::size_t c = 0; c < 100; ++c) xs[c] = x.test(c);
    const auto expected = oracle::threshold_outcome(oracle::to_dense(t), xs, static_cast<int>(u));
    const BitVector got = threshold_encode(t, x, u);
    for (std::size_t r = 0; r < 25; ++r) ASSERT_EQ(int(got.test(r)), expected[r]);
  }
}

TEST(ClassicalEncode, WorkedExampleAndEquivalence) {
  const BitMatrix m = oracle::worked_example_matrix();
  EXPECT_EQ(classical_encode(m, indicator(12, {1, 2})), kWorkedYprime);
  EXPECT_EQ(classical_encode(m, BitVector(12)), BitVector(9));
  EXPECT_THROW(classical_encode(m, BitVector(3)), std::invalid_argument);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const BitMatrix r = gen_random(17, 70, 0.2, seed);
    const BitVector x = gen_random(1, 70, 0.1, seed + 1).row(0);
    EXPECT_EQ(classical_encode(r, x), threshold_encode(r, x, 1));
  }
}

TEST(ConvertOutcomes, Rules) {
  EXPECT_EQ(convert_outcomes(kWorkedY, kWorkedYbar), kWorkedYprime);
  EXPECT_EQ(convert_outcomes(BitVector::ones(5), BitVector::from_string("10110")), BitVector::ones(5));
  EXPECT_EQ(convert_outcomes(BitVector::from_string("0000"), BitVector::from_string("1010")),
            BitVector::from_string("0101"));
  EXPECT_THROW(convert_outcomes(BitVector(3), BitVector(4)), std::invalid_argument);
}

TEST(ConvertOutcomes, ExactThresholdEquivalenceOnWorkedExample) {
  const BitMatrix m = oracle::worked_example_matrix();
  const BitMatrix m_bar = complement(m);
  for (std::size_t u : {2u, 3u}) {
    for (const IndexSet& s : subsets_of_size(12, u)) {
      const BitVector x = indicator(12, s);
      ASSERT_EQ(convert_outcomes(threshold_encode(m, x, u), threshold_encode(m_bar, x, u)), classical_encode(m, x));
    }
  }
}

TEST(Decode, WorkedExampleEndToEnd) {
  const MeasurementScheme s = worked_example_scheme();
  const BitVector outcome = simulate_instance(s, {1, 2});
  EXPECT_EQ(outcome.to_string(), "1001000000110100010");
  EXPECT_EQ(decode(s, outcome), (IndexSet{1, 2}));
}

TEST(Decode, NoDefectivesGivesEmptySet) {
  const MeasurementScheme s = build_scheme({.n = 50, .d = 4, .u = 2, .epsilon = 0.2, .seed = 1});
  const BitVector outcome = simulate_instance(s, {});
  EXPECT_TRUE(outcome.none());
  EXPECT_TRUE(decode(s, outcome).empty());
}

TEST(Decode, FewerThanThresholdIsSilent) {
  const MeasurementScheme s = build_scheme({.n = 50, .d = 4, .u = 3, .epsilon = 0.2, .seed = 1});
  for (const IndexSet& items : {IndexSet{7}, IndexSet{3, 44}}) {
    const BitVector outcome = simulate_instance(s, items);
    EXPECT_TRUE(outcome.none());
    EXPECT_TRUE(decode(s, outcome).empty());
  }
}

TEST(Decode, EqualThresholdRecoversEveryExactSet) {
  const MeasurementScheme s = build_scheme({.n = 12, .d = 3, .u = 3});
  for (const IndexSet& items : subsets_of_size(12, 3)) ASSERT_EQ(decode(s, simulate_instance(s, items)), items);
}

TEST(Decode, RecoversWhenPrunedMatrixSeparates) {
  Rng rng(21);
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const MeasurementScheme s = build_scheme({.n = 40, .d = 4, .u = 2, .epsilon = 0.3, .seed = seed});
    for (int trial = 0; trial < 20; ++trial) {
      const IndexSet items = random_set(rng, 40, 2 + rng.below(3));
      const IndexSet decoded = decode(s, simulate_instance(s, items));
      EXPECT_TRUE(std::includes(items.begin(), items.end(), decoded.begin(), decoded.end()));
      if (is_pruned_separating(s.separating(), items, 2)) {
        EXPECT_EQ(decoded, items);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(Decode, NeverReportsFalsePositivesEvenWithPoorG) {
  // A G that is far from separating (dense, few rows) still cannot make the
  // decoder accept a non-defective.
  Rng rng(31);
  const BitMatrix m = gen_rs_concatenated(5, 60);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const MeasurementScheme s(gen_random(6, 60, 0.8, seed), m, 2 + seed % 3, 5);
    for (int trial = 0; trial < 25; ++trial) {
      const IndexSet items = random_set(rng, 60, rng.below(6));
      const IndexSet decoded = decode(s, simulate_instance(s, items));
      ASSERT_TRUE(std::includes(items.begin(), items.end(), decoded.begin(), decoded.end()));
    }
  }
}

TEST(Decode, RejectsMalformedOutcome) {
  const MeasurementScheme s = worked_example_scheme();
  EXPECT_THROW(decode(s, BitVector(18)), std::invalid_argument);
  EXPECT_THROW(simulate_instance(s, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(simulate_instance(s, {13}), std::out_of_range);
}

TEST(OutcomeView, Blocks) {
  const BitVector outcome = BitVector::from_string("1001000000110100010");
  const OutcomeView view(outcome, 1, 9);
  EXPECT_TRUE(view.indicator(0));
  EXPECT_EQ(view.y_block(0), kWorkedY);
  EXPECT_EQ(view.ybar_block(0), kWorkedYbar);
}

TEST(SchemeFile, RoundTrip) {
  const MeasurementScheme s =
      build_scheme({.n = 25, .d = 3, .u = 2, .mode = Mode::deterministic, .epsilon = 0.0, .seed = 42});
  std::stringstream buf;
  write_scheme(buf, s);
  const MeasurementScheme back = read_scheme(buf);
  EXPECT_EQ(back.separating(), s.separating());
  EXPECT_EQ(back.disjunct(), s.disjunct());
  EXPECT_EQ(back.u(), 2u);
  EXPECT_EQ(back.d(), 3u);
  EXPECT_EQ(back.mode(), Mode::deterministic);
  EXPECT_EQ(back.seed(), 42u);
}

TEST(SchemeFile, RejectsInconsistentHeaders) {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_scheme(in);
  };
  const std::string body = "[G]\n1 3\n111\n[M]\n3 3\n100\n010\n001\n";
  EXPECT_NO_THROW(parse("n=3\nd=2\nu=2\n" + body));
  EXPECT_THROW(parse("n=4\nd=2\nu=2\n" + body), ParseError);
  EXPECT_THROW(parse("n=3\nd=2\n" + body), ParseError);
  EXPECT_THROW(parse("n=3\nd=2\nu=2\nh=2\n" + body), ParseError);
  EXPECT_THROW(parse("n=3\nd=2\nu=2\nmode=fast\n" + body), ParseError);
  EXPECT_THROW(parse("n=3\nd=2\nu=2\n"), ParseError);
  EXPECT_THROW(parse("n=3\nd=3\nu=2\n" + body), ParseError);
}
