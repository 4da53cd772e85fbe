#include <gtest/gtest.h>

#include "gns/collineation_search.hpp"
#include "test_support.hpp"

namespace gns {
namespace {

PairSet ps(const char* text) { return PairSet::parse(text); }

TEST(FrequencyProfile, Examples) {
  const auto diag = frequency_profile(ps("11,22"));
  EXPECT_EQ(diag.freq_sets[0], (IndexSet{3, 4, 5, 6, 7}));
  EXPECT_EQ(diag.freq_sets[2], (IndexSet{1, 2}));

  const auto edge = frequency_profile(ps("12"));
  for (Index t = 1; t < 8; ++t) EXPECT_EQ(edge.weights[static_cast<std::size_t>(t)], (t == 1 || t == 2) ? 1 : 0);
  EXPECT_EQ(edge.points, IndexSet{5});

  const auto none = frequency_profile(PairSet{});
  for (Index t = 1; t < 8; ++t) EXPECT_EQ(none.weights[static_cast<std::size_t>(t)], 0);
  EXPECT_EQ(none.freq_sets[0], IndexSet::all());
}

TEST(FrequencyProfile, FrequencySetsAreEquivariant) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 1000; ++trial) {
    const PairSet s = testing::random_pairset(rng);
    const auto before = frequency_profile(s);
    for (const auto& sigma : CollineationGroup::instance().elements()) {
      const auto after = frequency_profile(apply_to_set(sigma, s));
      for (std::size_t w = 0; w < before.freq_sets.size(); ++w)
        ASSERT_EQ(after.freq_sets[w], sigma.apply(before.freq_sets[w]));
      ASSERT_EQ(after.points, sigma.apply(before.points));
      ASSERT_EQ(after.support, sigma.apply(before.support));
    }
  }
}

TEST(PartialCollineation, PropagatesStar) {
  PartialCollineation p;
  EXPECT_TRUE(p.assign(1, 2));
  EXPECT_TRUE(p.assign(2, 3));
  EXPECT_EQ(p.sigma()[5], star(2, 3));
  EXPECT_FALSE(p.assign(5, 1));   // contradicts the propagated value
  EXPECT_FALSE(p.assign(4, 2));   // value already used
  EXPECT_TRUE(p.admits(Collineation::from_generative_triplet(2, 3, 1)));
  EXPECT_FALSE(p.admits(Collineation::identity()));
}

TEST(FindCollineations, Examples) {
  EXPECT_EQ(find_collineations(PairSet{}, PairSet{}).size(), 168u);
  const auto remark = find_collineations(ps("11,22"), ps("22,33"));
  ASSERT_FALSE(remark.empty());
  for (const auto& c : remark) EXPECT_EQ(c(5), 7);
  const auto edge = find_collineations(ps("12"), ps("67"));
  ASSERT_FALSE(edge.empty());
  for (const auto& c : edge) EXPECT_EQ(c.apply(Pair::of(1, 2)), Pair::of(6, 7));
  EXPECT_TRUE(find_collineations(ps("12"), ps("11")).empty());
  EXPECT_TRUE(find_collineations(ps("12,15,25"), ps("12,13,23")).empty());
}

TEST(FindCollineations, ExhaustiveOverCaseBPairs) {
  std::vector<PairSet> case_b;
  for (PairSet t : testing::all_gns())
    if (!t.empty() && decompose_case(t) == CaseTag::B) case_b.push_back(t);
  ASSERT_FALSE(case_b.empty());
  for (PairSet s : case_b)
    for (PairSet t : case_b) ASSERT_EQ(find_collineations(s, t), brute_force_collineations(s, t)) << s.to_string() << " -> " << t.to_string();
}

TEST(FindCollineations, RandomGnsPairsMatchOracle) {
  const auto& family = testing::all_gns();
  std::mt19937_64 rng(testing::kSeed + 1);
  for (int trial = 0; trial < 10000; ++trial) {
    const PairSet s = family[rng() % family.size()];
    // Half the targets are images of s so that nonempty answers are common.
    const PairSet t = trial % 2 ? family[rng() % family.size()] : apply_to_set(testing::random_element(rng), s);
    ASSERT_EQ(find_collineations(s, t), brute_force_collineations(s, t)) << s.to_string() << " -> " << t.to_string();
  }
}

TEST(FindCollineations, ArbitrarySetsMatchOracle) {
  std::mt19937_64 rng(testing::kSeed + 2);
  for (int trial = 0; trial < 3000; ++trial) {
    const PairSet s = testing::random_pairset(rng, 36);
    const PairSet t = trial % 2 ? testing::random_pairset(rng, 36) : apply_to_set(testing::random_element(rng), s);
    ASSERT_EQ(find_collineations(s, t), brute_force_collineations(s, t)) << s.to_string() << " -> " << t.to_string();
  }
}

TEST(FindCollineations, CosetStructure) {
  std::mt19937_64 rng(testing::kSeed + 3);
  for (int trial = 0; trial < 200; ++trial) {
    const PairSet s = testing::random_pairset(rng);
    const auto& sigma = testing::random_element(rng);
    const auto found = find_collineations(s, apply_to_set(sigma, s));
    EXPECT_EQ(found.size(), orbit_and_stabilizer(s).stabilizer.size());
    EXPECT_TRUE(std::find(found.begin(), found.end(), sigma) != found.end());
  }
}

}  // namespace
}  // namespace gns
