#include <gtest/gtest.h>

#include <set>

#include "gns/enumeration.hpp"
#include "test_support.hpp"

namespace gns {
namespace {

using testing::all_gns;
using testing::census;

TEST(NextClosure, StartsAtEmptyAndEndsAtFull) {
  const auto first = next_closure(PairSet{});
  ASSERT_TRUE(first.has_value());
  EXPECT_GT(*first, PairSet{});
  EXPECT_TRUE(is_gns(*first));
  EXPECT_FALSE(next_closure(PairSet::full()).has_value());
}

TEST(EnumerateGns, SortedUniqueAllGnsWithEndpoints) {
  const auto& family = all_gns();
  EXPECT_EQ(family.size(), 16147u);
  EXPECT_TRUE(std::is_sorted(family.begin(), family.end()));
  EXPECT_EQ(std::adjacent_find(family.begin(), family.end()), family.end());
  EXPECT_EQ(family.front(), PairSet{});
  EXPECT_EQ(family.back(), PairSet::full());
  for (PairSet t : family) ASSERT_TRUE(is_gns(t));
  for (std::size_t n = 0; n + 1 < family.size(); n += 97) EXPECT_EQ(next_closure(family[n]), family[n + 1]);
}

TEST(EnumerateGns, IndependentOfWorkerCount) {
  EXPECT_EQ(enumerate_gns(2), all_gns());
  EXPECT_EQ(enumerate_gns(3), all_gns());
}

TEST(EnumerateGns, IntersectionClosed) {
  const std::set<PairSet> members(all_gns().begin(), all_gns().end());
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 5000; ++trial) {
    const PairSet a = all_gns()[rng() % all_gns().size()];
    const PairSet b = all_gns()[rng() % all_gns().size()];
    ASSERT_TRUE(members.count(a & b));
  }
}

TEST(EnumerateGns, RandomGnsAreListed) {
  const std::set<PairSet> members(all_gns().begin(), all_gns().end());
  std::mt19937_64 rng(testing::kSeed + 1);
  for (int trial = 0; trial < 3000; ++trial) {
    const PairSet c = closure(testing::random_pairset(rng));
    ASSERT_TRUE(members.count(c)) << c.to_string();
  }
}

TEST(EnumerateNice, CountsAndContent) {
  const auto nice = enumerate_nice();
  EXPECT_EQ(nice.size(), 779u);
  EXPECT_TRUE(std::is_sorted(nice.begin(), nice.end()));
  for (PairSet s : nice) ASSERT_TRUE(is_nice(s));
  EXPECT_EQ(classify_orbits(nice).classes.size(), 24u);
}

TEST(ClassifyOrbits, GnsCensus) {
  const Census& c = census();
  EXPECT_EQ(c.total, 16147u);
  EXPECT_EQ(c.classes.size(), 246u);
  EXPECT_EQ(c.by_case, (std::map<std::string, std::size_t>{{"EMPTY", 1}, {"A", 13}, {"B", 20}, {"C", 7}, {"D", 205}}));
  EXPECT_EQ(c.case_d_by_t_minus_x,
            (std::map<int, std::size_t>{{1, 40}, {2, 48}, {3, 53}, {4, 27}, {5, 10}, {6, 7}, {7, 7}, {8, 13}}));
  std::size_t labelled = 0;
  for (const auto& k : c.classes) {
    EXPECT_EQ(k.canonical, canonical_form(k.canonical));
    EXPECT_EQ(k.orbit_size * k.stabilizer_size, 168u);
    EXPECT_EQ(k.cardinality, k.canonical.size());
    ASSERT_TRUE(k.case_tag.has_value());
    EXPECT_EQ(*k.case_tag, decompose_case(k.canonical));
    EXPECT_EQ(k.t_minus_x, (k.canonical - subset_family(Family::X)).size());
    labelled += k.orbit_size;
  }
  EXPECT_EQ(labelled, c.total);
  // Contained in X: 14 classes counting the empty set.
  EXPECT_EQ(c.by_case.at("EMPTY") + c.by_case.at("A"), 14u);
}

TEST(ClassifyOrbits, SmallFamiliesAndErrors) {
  const Census empty = classify_orbits({PairSet{}});
  EXPECT_EQ(empty.classes.size(), 1u);
  EXPECT_EQ(empty.by_case.at("EMPTY"), 1u);
  EXPECT_THROW(classify_orbits({PairSet{}, PairSet{}}), std::invalid_argument);
  EXPECT_THROW(classify_orbits({PairSet::parse("12")}), std::invalid_argument);  // orbit not closed
  // Non-GNS families classify with no case tag.
  std::vector<PairSet> orbit = orbit_and_stabilizer(PairSet::parse("11,22,25,36,47")).orbit;
  const Census plain = classify_orbits(orbit);
  ASSERT_EQ(plain.classes.size(), 1u);
  EXPECT_FALSE(plain.classes[0].case_tag.has_value());
}

TEST(Burnside, AgreesWithClassification) {
  EXPECT_EQ(burnside_check(all_gns()).orbit_count(), census().classes.size());
  const auto nice = enumerate_nice();
  EXPECT_EQ(burnside_check(nice).orbit_count(), std::optional<std::size_t>(24));
  EXPECT_EQ(burnside_check({PairSet{}}).orbit_count(), std::optional<std::size_t>(1));
  const auto b = burnside_check(all_gns());
  EXPECT_EQ(b.fixed_counts[CollineationGroup::instance().identity_index()], all_gns().size());
}

TEST(Completeness, Certificate) {
  EXPECT_TRUE(completeness_certificate(all_gns()));
  auto missing_one = all_gns();
  missing_one.erase(missing_one.begin() + 1234);
  EXPECT_FALSE(completeness_certificate(missing_one));
  EXPECT_FALSE(completeness_certificate({PairSet{}, PairSet::full()}));
  auto with_bad = all_gns();
  with_bad.push_back(subset_family(Family::X));
  const auto why = completeness_failure(with_bad);
  ASSERT_TRUE(why.has_value());
}

TEST(CaseC, Representatives) {
  const auto reps = case_c_representatives();
  EXPECT_EQ(reps.size(), 7u);
  std::set<PairSet> canon;
  for (PairSet r : reps) {
    EXPECT_TRUE(is_gns(r));
    EXPECT_EQ(decompose_case(r), CaseTag::C);
    canon.insert(canonical_form(r));
  }
  EXPECT_EQ(canon.size(), 7u);
}

TEST(Structural, EqualsLecticEnumeration) { EXPECT_EQ(structural_enumerate(), all_gns()); }

}  // namespace
}  // namespace gns
