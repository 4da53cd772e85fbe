#include <gtest/gtest.h>

#include <set>

#include "gns/group.hpp"
#include "test_support.hpp"

namespace gns {
namespace {

const CollineationGroup& group() { return CollineationGroup::instance(); }

std::array<Index, kIndexCount> images(const Collineation& c) {
  std::array<Index, kIndexCount> out{};
  for (Index t = 0; t < kIndexCount; ++t) out[static_cast<std::size_t>(t)] = c(t);
  return out;
}

TEST(Collineation, FromGenerativeTripletExamples) {
  EXPECT_EQ(Collineation::from_generative_triplet(1, 2, 3), Collineation::identity());
  EXPECT_EQ(Collineation::from_generative_triplet(2, 1, 3).to_string(), "2134576");
  EXPECT_THROW(Collineation::from_generative_triplet(1, 2, 5), std::invalid_argument);
}

TEST(Collineation, ParseAndFormat) {
  EXPECT_EQ(Collineation::parse("1234567"), Collineation::identity());
  EXPECT_THROW(Collineation::parse("2134567"), std::invalid_argument);  // not line-preserving
  EXPECT_THROW(Collineation::parse("123456"), ParseError);
  EXPECT_THROW(Collineation::parse("1234568"), ParseError);
  for (const auto& c : group().elements()) EXPECT_EQ(Collineation::parse(c.to_string()), c);
}

TEST(Group, EqualsBruteForceLinePreservingPermutations) {
  const auto oracle = testing::oracle_group();
  ASSERT_EQ(oracle.size(), 168u);
  std::set<std::array<Index, kIndexCount>> expected(oracle.begin(), oracle.end());
  std::set<std::array<Index, kIndexCount>> actual;
  for (const auto& c : group().elements()) actual.insert(images(c));
  EXPECT_EQ(actual, expected);
  EXPECT_EQ(group().size(), CollineationGroup::kOrder);
}

TEST(Group, OrderedByGenerativeTriplet) {
  std::size_t n = 0;
  for (Index i = 1; i < 8; ++i)
    for (Index j = 1; j < 8; ++j)
      for (Index k = 1; k < 8; ++k) {
        if (!is_generative(i, j, k)) continue;
        const Collineation& c = group()[n];
        EXPECT_EQ(c(1), i);
        EXPECT_EQ(c(2), j);
        EXPECT_EQ(c(3), k);
        EXPECT_EQ(group().index_of(c), n);
        ++n;
      }
  EXPECT_EQ(n, 168u);
  EXPECT_EQ(group()[group().identity_index()], Collineation::identity());
}

TEST(Group, Axioms) {
  std::set<Collineation> all(group().elements().begin(), group().elements().end());
  for (const auto& a : group().elements()) {
    EXPECT_EQ(compose(a, Collineation::identity()), a);
    EXPECT_EQ(compose(Collineation::identity(), a), a);
    EXPECT_EQ(compose(a, a.inverse()), Collineation::identity());
    EXPECT_EQ(compose(a.inverse(), a), Collineation::identity());
    for (const auto& b : group().elements()) {
      const Collineation ab = compose(a, b);
      ASSERT_TRUE(all.count(ab));
      for (Index t = 0; t < 8; ++t) EXPECT_EQ(ab(t), a(b(t)));
    }
    for (const Line& l : lines())
      EXPECT_TRUE(is_line(a.apply(l).as_set()));
  }
}

TEST(ApplyToSet, Examples) {
  const auto swap = Collineation::from_generative_triplet(2, 1, 3);
  const PairSet t = PairSet::parse("11,12");
  EXPECT_EQ(apply_to_set(Collineation::identity(), t), t);
  EXPECT_EQ(apply_to_set(swap, t), PairSet::parse("22,12"));
  for (std::size_t n = 0; n < group().size(); ++n) {
    EXPECT_EQ(apply_to_set(group()[n], PairSet::full()), PairSet::full());
  }
}

TEST(ApplyToSet, TableMatchesPointwiseAndIsAnAction) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 300; ++trial) {
    const PairSet t = testing::random_pairset(rng, 36);
    const auto& a = testing::random_element(rng);
    const auto& b = testing::random_element(rng);
    PairSet pointwise;
    for (Pair p : t.pairs()) pointwise.insert(Pair::of(a(p.lo), a(p.hi)));
    EXPECT_EQ(apply_to_set(a, t), pointwise);
    EXPECT_EQ(group().apply(group().index_of(a), t), pointwise);
    EXPECT_EQ(apply_to_set(compose(a, b), t), apply_to_set(a, apply_to_set(b, t)));
    EXPECT_EQ(apply_to_set(a, t).size(), t.size());
  }
}

TEST(CanonicalForm, Examples) {
  EXPECT_EQ(canonical_form(PairSet{}), PairSet{});
  EXPECT_EQ(canonical_form(PairSet::full()), PairSet::full());
  EXPECT_EQ(canonical_form(PairSet::parse("67")), PairSet::parse("12"));
}

TEST(CanonicalForm, InvariantAndMinimal) {
  std::mt19937_64 rng(testing::kSeed + 1);
  for (int trial = 0; trial < 200; ++trial) {
    const PairSet t = testing::random_pairset(rng);
    const PairSet c = canonical_form(t);
    EXPECT_EQ(canonical_form(apply_to_set(testing::random_element(rng), t)), c);
    for (const auto& g : group().elements()) EXPECT_LE(c, apply_to_set(g, t));
  }
}

TEST(OrbitStabilizer, Examples) {
  const auto empty = orbit_and_stabilizer(PairSet{});
  EXPECT_EQ(empty.orbit.size(), 1u);
  EXPECT_EQ(empty.stabilizer.size(), 168u);
  EXPECT_EQ(orbit_and_stabilizer(PairSet::parse("12")).orbit.size(), 21u);
  EXPECT_EQ(orbit_and_stabilizer(subset_family(Family::XLine, line_through(1, 2))).orbit.size(), 7u);
}

TEST(OrbitStabilizer, OrbitStabilizerTheorem) {
  std::mt19937_64 rng(testing::kSeed + 2);
  for (int trial = 0; trial < 200; ++trial) {
    const PairSet t = testing::random_pairset(rng);
    const auto os = orbit_and_stabilizer(t);
    EXPECT_EQ(os.orbit.size() * os.stabilizer.size(), 168u);
    EXPECT_TRUE(std::is_sorted(os.orbit.begin(), os.orbit.end()));
    EXPECT_TRUE(std::binary_search(os.orbit.begin(), os.orbit.end(), t));
    EXPECT_EQ(os.orbit.front(), canonical_form(t));
    for (const auto& s : os.stabilizer) EXPECT_EQ(apply_to_set(s, t), t);
  }
}

}  // namespace
}  // namespace gns
