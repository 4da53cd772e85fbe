#include <gtest/gtest.h>

#include "gns/fano.hpp"
#include "test_support.hpp"

namespace gns {
namespace {

TEST(Star, Examples) {
  EXPECT_EQ(star(1, 2), 5);
  EXPECT_EQ(star(3, 3), 0);
  EXPECT_EQ(star(0, 6), 6);
  EXPECT_EQ(star(6, 0), 6);
}

TEST(Star, MatchesLineListAndGroupLaw) {
  for (Index i = 0; i < kIndexCount; ++i) {
    for (Index j = 0; j < kIndexCount; ++j) {
      EXPECT_EQ(star(i, j), testing::oracle_star(i, j));
      EXPECT_EQ(star(i, j), star(j, i));
      for (Index k = 0; k < kIndexCount; ++k) EXPECT_EQ(star(star(i, j), k), star(i, star(j, k)));
    }
  }
}

TEST(Star, RejectsOutOfRange) {
  EXPECT_THROW(star(8, 1), std::invalid_argument);
  EXPECT_THROW(star(1, -1), std::invalid_argument);
}

TEST(Lines, FigureOrder) {
  ASSERT_EQ(lines().size(), 7u);
  EXPECT_EQ(lines()[0].as_set(), (IndexSet{1, 2, 5}));
  EXPECT_EQ(lines()[6].as_set(), (IndexSet{3, 4, 5}));
}

TEST(LineThrough, Examples) {
  EXPECT_EQ(line_through(1, 2).as_set(), (IndexSet{1, 2, 5}));
  EXPECT_EQ(line_through(5, 2).as_set(), (IndexSet{1, 2, 5}));
  EXPECT_EQ(line_through(3, 4).as_set(), (IndexSet{3, 4, 5}));
  EXPECT_THROW(line_through(3, 3), std::invalid_argument);
  EXPECT_THROW(line_through(0, 3), std::invalid_argument);
}

TEST(Generative, Examples) {
  EXPECT_TRUE(is_generative(1, 2, 3));
  EXPECT_FALSE(is_generative(1, 2, 5));
  EXPECT_FALSE(is_generative(0, 2, 3));
  int count = 0;
  for (Index i = 1; i < 8; ++i)
    for (Index j = 1; j < 8; ++j)
      for (Index k = 1; k < 8; ++k) count += is_generative(i, j, k);
  EXPECT_EQ(count, 168);
}

TEST(IsLine, ExactlySevenTriples) {
  int count = 0;
  for (int m = 0; m < 256; m += 2) count += is_line(IndexSet::from_mask(static_cast<std::uint8_t>(m)));
  EXPECT_EQ(count, 7);
}

TEST(PairIndex, BijectiveOntoZeroTo35) {
  std::vector<bool> seen(kPairCount, false);
  for (Index i = 0; i < kIndexCount; ++i) {
    for (Index j = i; j < kIndexCount; ++j) {
      const Pair p = Pair::of(j, i);
      EXPECT_EQ(p.lo, i);
      const int idx = p.index();
      ASSERT_GE(idx, 0);
      ASSERT_LT(idx, kPairCount);
      EXPECT_FALSE(seen[static_cast<std::size_t>(idx)]);
      seen[static_cast<std::size_t>(idx)] = true;
      EXPECT_EQ(Pair::from_index(idx), p);
    }
  }
  EXPECT_EQ(Pair::of(0, 0).index(), 0);
  EXPECT_EQ(Pair::of(7, 7).index(), 35);
}

TEST(PairSetLiteral, RoundTrip) {
  const PairSet s = PairSet::parse("12,00,01");
  EXPECT_EQ(s.to_string(), "00,01,12");
  EXPECT_EQ(PairSet::parse("21"), PairSet::parse("12"));
  EXPECT_EQ(PairSet::parse(""), PairSet{});
  EXPECT_EQ(PairSet::parse("{}"), PairSet{});
  std::mt19937_64 rng(testing::kSeed);
  for (int n = 0; n < 500; ++n) {
    const PairSet r = testing::random_pairset(rng, 36);
    EXPECT_EQ(PairSet::parse(r.to_string()), r);
  }
}

TEST(PairSetLiteral, MalformedThrowsParseError) {
  for (const char* bad : {"1", "123", "18", "a1", "12,", ",12", "12;13", "0x"}) {
    EXPECT_THROW(PairSet::parse(bad), ParseError) << bad;
  }
}

TEST(SubsetFamily, Examples) {
  EXPECT_EQ(subset_family(Family::XPerp, 1), PairSet::parse("25,36,47"));
  EXPECT_EQ(subset_family(Family::XE), PairSet::parse("00,11,22,33,44,55,66,77"));
  EXPECT_EQ(subset_family(Family::XLine, line_through(1, 2)), PairSet::parse("12,15,25"));
  EXPECT_EQ(subset_family(Family::X).size(), 21);
  EXPECT_EQ(subset_family(Family::X0), PairSet::full());
  EXPECT_EQ(subset_family(Family::XF).size(), 8);
  EXPECT_EQ(subset_family(Family::XPencil, 1), PairSet::parse("12,13,14,15,16,17"));
  EXPECT_EQ(subset_family(Family::XLineComp, line_through(1, 2)).size(), 6);
  EXPECT_EQ(subset_family(Family::XLine, line_through(1, 2)) | subset_family(Family::XLineComp, line_through(1, 2)) |
                subset_family(Family::XPerp, 3) | subset_family(Family::XPerp, 4) | subset_family(Family::XPerp, 6) |
                subset_family(Family::XPerp, 7),
            subset_family(Family::X));
}

TEST(PSet, Examples) {
  EXPECT_EQ(p_set(0, 0, 0), PairSet::parse("00"));
  EXPECT_EQ(p_set(1, 2, 3), PairSet::parse("12,13,17,23,26,35"));
  EXPECT_EQ(p_set(1, 1, 2), PairSet::parse("11,12,02,15"));
}

TEST(PSet, MatchesOracleAndIsSymmetric) {
  for (Index i = 0; i < 8; ++i)
    for (Index j = 0; j < 8; ++j)
      for (Index k = 0; k < 8; ++k) {
        EXPECT_EQ(p_set(i, j, k), testing::oracle_p_set(i, j, k));
        EXPECT_EQ(p_set(i, j, k), p_set(j, k, i));
        EXPECT_EQ(p_set(i, j, k), p_set(k, j, i));
      }
}

TEST(TSet, Examples) {
  EXPECT_EQ(t_set(1, 2, 3).size(), 10);
  EXPECT_TRUE(subset_family(Family::XPencil, 1).is_subset_of(t_set(1, 2, 3)));
  EXPECT_EQ(t_set(1, 2, 3), t_set(1, 3, 2));
  EXPECT_THROW(t_set(1, 2, 5), std::invalid_argument);
}

}  // namespace
}  // namespace gns
