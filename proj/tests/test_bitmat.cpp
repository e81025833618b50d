#include <gtest/gtest.h>

#include <sstream>

#include "natgt/bitmat.hpp"
#include "natgt/rng.hpp"
#include "natgt/separating.hpp"
#include "natgt/text_format.hpp"
#include "oracles/oracles.hpp"

using namespace natgt;

namespace {

IndexSet random_subset(Rng& rng, std::size_t n, double p) {
  IndexSet s;
  for (std::size_t j = 1; j <= n; ++j)
    if (rng.bernoulli(p)) s.push_back(j);
  return s;
}

}  // namespace

TEST(BitMatrix, ComplementOfWorkedExampleRow) {
  const BitMatrix m = oracle::worked_example_matrix();
  EXPECT_EQ(complement(m).row(0), BitVector::from_string("111111000011"));
}

TEST(BitMatrix, ComplementOfZeroIsOnes) {
  EXPECT_EQ(complement(BitMatrix(2, 3)), BitMatrix::ones(2, 3));
}

TEST(BitMatrix, ComplementSumsToOnes) {
  const BitMatrix x = gen_random(5, 7, 0.5, 11);
  const BitMatrix y = complement(x);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 7; ++c) EXPECT_EQ(int(x.at(r, c)) + int(y.at(r, c)), 1);
}

TEST(BitMatrix, ComplementIsInvolution) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng shape(seed);
    const std::size_t rows = 1 + shape.below(40);
    const std::size_t cols = 1 + shape.below(150);  // crosses word boundaries
    const BitMatrix x = gen_random(rows, cols, 0.4, seed);
    ASSERT_EQ(complement(complement(x)), x);
  }
}

TEST(BitMatrix, MaskColumns) {
  const BitMatrix m = oracle::worked_example_matrix();
  EXPECT_EQ(mask_columns(m, BitVector::ones(12)), m);
  EXPECT_EQ(mask_columns(m, BitVector(12)), BitMatrix(9, 12));

  const BitMatrix masked = mask_columns(m, indicator(12, {1, 2}));
  for (std::size_t c = 0; c < 12; ++c) {
    const BitVector expected = c < 2 ? m.column(c) : BitVector(9);
    EXPECT_EQ(masked.column(c), expected) << "column " << c + 1;
  }
  EXPECT_THROW(mask_columns(m, BitVector(11)), std::invalid_argument);
}

TEST(BitMatrix, MaskZeroColumnsExactlyWhereExpected) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const BitMatrix m = gen_random(6, 70, 0.2, seed);
    const BitVector g = gen_random(1, 70, 0.5, seed + 1000).row(0);
    const BitMatrix masked = mask_columns(m, g);
    for (std::size_t c = 0; c < 70; ++c)
      EXPECT_EQ(masked.column(c).none(), !g.test(c) || m.column(c).none());
  }
}

TEST(BitMatrix, UnionColumns) {
  const BitMatrix m = oracle::worked_example_matrix();
  EXPECT_EQ(union_columns(m, {1, 2}), BitVector::from_bits({0, 0, 1, 0, 1, 1, 1, 0, 1}));
  EXPECT_EQ(union_columns(m, {}), BitVector(9));
  for (std::size_t j = 1; j <= 12; ++j) EXPECT_EQ(union_columns(m, {j}), m.column(j - 1));
  EXPECT_THROW(union_columns(m, {0}), std::out_of_range);
  EXPECT_THROW(union_columns(m, {13}), std::out_of_range);
}

TEST(BitMatrix, UnionDistributesOverDisjointSets) {
  Rng rng(99);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const BitMatrix m = gen_random(20, 90, 0.1, seed);
    IndexSet a, b;
    for (std::size_t j = 1; j <= 90; ++j) {
      const auto pick = rng.below(3);
      if (pick == 0) a.push_back(j);
      if (pick == 1) b.push_back(j);
    }
    IndexSet both = a;
    both.insert(both.end(), b.begin(), b.end());
    std::sort(both.begin(), both.end());
    EXPECT_EQ(union_columns(m, both), union_columns(m, a) | union_columns(m, b));
  }
}

TEST(BitMatrix, SupportAndIndicatorAreInverse) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const IndexSet s = random_subset(rng, 130, 0.3);
    EXPECT_EQ(support(indicator(130, s)), s);
  }
  EXPECT_THROW(indicator(5, {6}), std::out_of_range);
}

TEST(BitMatrix, TransposeAndSelect) {
  const BitMatrix m = gen_random(13, 70, 0.3, 3);
  const BitMatrix t = m.transpose();
  ASSERT_EQ(t.rows(), 70u);
  for (std::size_t r = 0; r < 13; ++r)
    for (std::size_t c = 0; c < 70; ++c) ASSERT_EQ(t.at(c, r), m.at(r, c));
  EXPECT_EQ(t.transpose(), m);

  const BitMatrix picked = m.select_columns({3, 70});
  EXPECT_EQ(picked.column(0), m.column(2));
  EXPECT_EQ(picked.column(1), m.column(69));
}

TEST(BitMatrix, RejectsEmptyShapes) {
  EXPECT_THROW(BitMatrix(0, 3), std::invalid_argument);
  EXPECT_THROW(BitMatrix(3, 0), std::invalid_argument);
  EXPECT_THROW(BitVector(0), std::invalid_argument);
  EXPECT_THROW(BitVector::from_string("0120"), std::invalid_argument);
}

TEST(TextFormat, RoundTripsRandomMatrices) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng shape(seed);
    const BitMatrix m = gen_random(1 + shape.below(20), 1 + shape.below(100), 0.5, seed);
    std::stringstream buf;
    write_matrix(buf, m, "generator=test");
    EXPECT_EQ(read_matrix(buf), m);
  }
}

TEST(TextFormat, ExactLayout) {
  std::ostringstream out;
  write_matrix(out, BitMatrix::from_rows({"101", "010"}));
  EXPECT_EQ(out.str(), "2 3\n101\n010\n");
  std::ostringstream vec;
  write_vector(vec, BitVector::from_string("0110"));
  EXPECT_EQ(vec.str(), "4\n0110\n");
}

TEST(TextFormat, RejectsMalformedInput) {
  const auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_matrix(in);
  };
  EXPECT_THROW(parse("2 3\n101\n"), ParseError);
  EXPECT_THROW(parse("2 3\n101\n01\n"), ParseError);
  EXPECT_THROW(parse("2 3\n101\n012\n"), ParseError);
  EXPECT_THROW(parse("0 3\n"), ParseError);
  EXPECT_THROW(parse("x y\n"), ParseError);
  EXPECT_NO_THROW(parse("# comment\n1 2\n10\n"));

  std::istringstream vec("3\n10\n");
  EXPECT_THROW(read_vector(vec), ParseError);
}
