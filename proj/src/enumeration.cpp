#include "gns/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "gns/group.hpp"

namespace gns {

namespace {

constexpr std::uint64_t bits_above(int i) {
  return PairSet::kFullMask & ~((std::uint64_t{1} << (i + 1)) - 1);
}

// All GNS whose highest set bit is h, ascending.
std::vector<PairSet> enumerate_range(int h) {
  std::vector<PairSet> out;
  const std::uint64_t limit = std::uint64_t{1} << (h + 1);
  PairSet a = PairSet::from_mask((std::uint64_t{1} << h) - 1);
  while (true) {
    const auto next = next_closure(a);
    if (!next || next->mask() >= limit) break;
    out.push_back(*next);
    a = *next;
  }
  return out;
}

bool contains_sorted(const std::vector<PairSet>& sorted, PairSet t) {
  return std::binary_search(sorted.begin(), sorted.end(), t);
}

std::vector<PairSet> sorted_copy(const std::vector<PairSet>& family) {
  std::vector<PairSet> out = family;
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t diag_mask(IndexSet j) {
  std::uint64_t m = 0;
  for (Index i : j.members()) m |= std::uint64_t{1} << Pair::of(i, i).index();
  return m;
}

std::uint64_t zero_mask(IndexSet j) {
  std::uint64_t m = std::uint64_t{1} << Pair::of(0, 0).index();
  for (Index i : j.members()) m |= std::uint64_t{1} << Pair::of(0, i).index();
  return m;
}

}  // namespace

std::optional<PairSet> next_closure(PairSet a) {
  const std::uint64_t m = a.mask();
  for (int i = 0; i < kPairCount; ++i) {
    const std::uint64_t b = std::uint64_t{1} << i;
    if ((m & b) != 0) continue;
    const std::uint64_t prefix = m & bits_above(i);
    const PairSet candidate = closure(PairSet::from_mask(prefix | b));
    if ((candidate.mask() & bits_above(i)) == prefix) return candidate;
  }
  return std::nullopt;
}

std::vector<PairSet> enumerate_gns(unsigned jobs) {
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::vector<PairSet>> ranges(kPairCount);
  std::atomic<int> next_h{kPairCount - 1};
  auto worker = [&] {
    for (int h = next_h--; h >= 0; h = next_h--) ranges[static_cast<std::size_t>(h)] = enumerate_range(h);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<PairSet> out;
  const PairSet bottom = closure(PairSet{});
  if (bottom.empty()) out.push_back(bottom);
  for (const auto& r : ranges) out.insert(out.end(), r.begin(), r.end());
  return out;
}

std::vector<PairSet> enumerate_nice() {
  // Spread a 21-bit subset of X onto PairSet positions, 7 bits at a time.
  const std::vector<Pair> edges = subset_family(Family::X).pairs();
  std::array<std::array<std::uint64_t, 128>, 3> spread{};
  for (std::size_t chunk = 0; chunk < 3; ++chunk) {
    for (std::uint32_t v = 0; v < 128; ++v) {
      std::uint64_t m = 0;
      for (std::size_t b = 0; b < 7; ++b) {
        if ((v >> b) & 1U) m |= std::uint64_t{1} << edges[chunk * 7 + b].index();
      }
      spread[chunk][v] = m;
    }
  }
  std::vector<PairSet> out;
  for (std::uint32_t s = 0; s < (1U << 21); ++s) {
    const PairSet t = PairSet::from_mask(spread[0][s & 127U] | spread[1][(s >> 7) & 127U] |
                                         spread[2][s >> 14]);
    if (is_nice(t)) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Census classify_orbits(const std::vector<PairSet>& family) {
  const std::vector<PairSet> sorted = sorted_copy(family);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("classify_orbits: family contains duplicates");
  }
  std::map<PairSet, std::size_t> members_per_class;
  for (PairSet t : sorted) ++members_per_class[canonical_form(t)];

  Census census;
  census.total = sorted.size();
  const PairSet x = subset_family(Family::X);
  for (const auto& [canonical, members] : members_per_class) {
    const OrbitStabilizer os = orbit_and_stabilizer(canonical);
    if (members != os.orbit.size()) {
      throw std::invalid_argument("classify_orbits: family is not closed under collineations (class " +
                                  canonical.to_string() + " has " + std::to_string(members) +
                                  " members but its orbit has " + std::to_string(os.orbit.size()) + ")");
    }
    OrbitClass c;
    c.canonical = canonical;
    c.orbit_size = os.orbit.size();
    c.stabilizer_size = os.stabilizer.size();
    c.cardinality = canonical.size();
    c.t_minus_x = (canonical - x).size();
    if (is_gns(canonical)) c.case_tag = decompose_case(canonical);
    census.classes.push_back(c);
  }
  std::sort(census.classes.begin(), census.classes.end(), [](const OrbitClass& a, const OrbitClass& b) {
    if (a.cardinality != b.cardinality) return a.cardinality < b.cardinality;
    return a.canonical < b.canonical;
  });
  for (const OrbitClass& c : census.classes) {
    if (!c.case_tag) continue;
    ++census.by_case[to_string(*c.case_tag)];
    if (*c.case_tag == CaseTag::D) ++census.case_d_by_t_minus_x[c.t_minus_x];
  }
  return census;
}

std::optional<std::size_t> BurnsideResult::orbit_count() const {
  if (fixed_total % CollineationGroup::kOrder != 0) return std::nullopt;
  return fixed_total / CollineationGroup::kOrder;
}

BurnsideResult burnside_check(const std::vector<PairSet>& family) {
  const auto& g = CollineationGroup::instance();
  BurnsideResult r;
  for (std::size_t n = 0; n < g.size(); ++n) {
    std::size_t fixed = 0;
    for (PairSet t : family) fixed += g.apply(n, t) == t ? 1 : 0;
    r.fixed_counts[n] = fixed;
    r.fixed_total += fixed;
  }
  return r;
}

std::optional<std::string> completeness_failure(const std::vector<PairSet>& family) {
  const std::vector<PairSet> sorted = sorted_copy(family);
  for (PairSet t : sorted) {
    if (!is_gns(t)) return "member " + t.to_string() + " is not a GNS";
  }
  const PairSet bottom = closure(PairSet{});
  if (!contains_sorted(sorted, bottom)) {
    return "closure of the empty set (" + bottom.to_string() + ") is missing";
  }
  for (PairSet t : sorted) {
    for (int p = 0; p < kPairCount; ++p) {
      const Pair pair = Pair::from_index(p);
      if (t.contains(pair)) continue;
      PairSet extended = t;
      extended.insert(pair);
      const PairSet c = closure(extended);
      if (!contains_sorted(sorted, c)) {
        return "closure of " + t.to_string() + " + " + pair.to_string() + " (" + c.to_string() +
               ") is missing";
      }
    }
  }
  return std::nullopt;
}

bool completeness_certificate(const std::vector<PairSet>& family) {
  return !completeness_failure(family).has_value();
}

std::vector<PairSet> case_c_representatives() {
  std::vector<PairSet> reps;
  const PairSet p121 = PairSet::parse("00,01,02,05,11,12,15");
  reps.push_back(p121);
  reps.push_back(p121 | PairSet::parse("22,25,55"));
  reps.push_back(p121 | PairSet::parse("03,06,13,16"));
  PairSet star1;  // {00} u {0l, 1l : l = 1..7}
  star1.insert(Pair::of(0, 0));
  for (Index l = 1; l < kIndexCount; ++l) {
    star1.insert(Pair::of(0, l));
    star1.insert(Pair::of(1, l));
  }
  reps.push_back(star1);
  reps.push_back(star1 | PairSet::parse("23,35,26,56"));
  PairSet removed;
  for (Index k : {3, 4, 6, 7}) {
    for (Index l : {3, 4, 6, 7}) removed.insert(Pair::of(k, l));
  }
  reps.push_back(PairSet::full() - removed);
  reps.push_back(PairSet::full());
  return reps;
}

std::vector<PairSet> structural_enumerate() {
  std::vector<PairSet> out;

  // T inside X: nice sets meeting every line's edge set at most once.
  std::vector<PairSet> inside_x;
  for (PairSet t : enumerate_nice()) {
    bool ok = true;
    for (const Line& l : lines()) ok = ok && (t & subset_family(Family::XLine, l)).size() <= 1;
    if (ok) inside_x.push_back(t);
  }
  out.insert(out.end(), inside_x.begin(), inside_x.end());

  // T disjoint from X: P_{0ii}, {00} plus zero pairs, or diagonal pairs over I.
  for (Index i = 1; i < kIndexCount; ++i) out.push_back(p_set(0, i, i));
  for (std::uint8_t m = 0; m < 128; ++m) {
    const IndexSet j = IndexSet::from_mask(static_cast<std::uint8_t>(m << 1));
    out.push_back(PairSet::from_mask(zero_mask(j)));
    out.push_back(PairSet::from_mask(diag_mask(j)));
  }

  // T n X not a GNS: the orbits of the exceptional representatives.
  const auto& g = CollineationGroup::instance();
  for (PairSet rep : case_c_representatives()) {
    for (std::size_t n = 0; n < g.size(); ++n) out.push_back(g.apply(n, rep));
  }

  // T n X a nonempty GNS: admissible diagonal, zero and P_{0ii} augmentations.
  for (PairSet s : inside_x) {
    if (s.empty()) continue;
    for (std::uint8_t m = 0; m < 128; ++m) {
      const IndexSet j = IndexSet::from_mask(static_cast<std::uint8_t>(m << 1));
      if (admissible_diag(s, j)) out.push_back(s | PairSet::from_mask(diag_mask(j)));
      if (admissible_zero(s, j)) out.push_back(s | PairSet::from_mask(zero_mask(j)));
    }
    for (Index i = 1; i < kIndexCount; ++i) {
      if (admissible_p0ii(s, i)) out.push_back(s | p_set(0, i, i));
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gns
