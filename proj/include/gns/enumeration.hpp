#pragma once

// Exhaustive enumeration of GNS and nice sets, orbit classification,
// Burnside cross-check, completeness certificate and the independent
// structural reconstruction of the GNS family.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gns/fano.hpp"
#include "gns/kernel.hpp"

namespace gns {

/// The numerically smallest GNS whose mask exceeds `a` (any set, closed or
/// not), or nullopt when none exists.
std::optional<PairSet> next_closure(PairSet a);

/// Every GNS, each exactly once, in increasing mask order. `jobs` worker
/// threads split the search by highest set bit; the output does not depend on
/// `jobs` (0 means one worker per hardware thread).
std::vector<PairSet> enumerate_gns(unsigned jobs = 1);

/// Every nice set, in increasing mask order (brute force over subsets of X).
std::vector<PairSet> enumerate_nice();

/// One collinearity class of a family.
struct OrbitClass {
  PairSet canonical;
  std::size_t orbit_size = 0;
  std::size_t stabilizer_size = 0;
  int cardinality = 0;
  /// Set when the canonical form is a GNS; absent for other families.
  std::optional<CaseTag> case_tag;
  int t_minus_x = 0;
};

struct Census {
  std::vector<OrbitClass> classes;             // sorted by (cardinality, canonical mask)
  std::map<std::string, std::size_t> by_case;  // class counts keyed by case name
  std::map<int, std::size_t> case_d_by_t_minus_x;
  std::size_t total = 0;                       // labelled size of the family
};

/// Groups `family` into orbits. Throws std::invalid_argument when the family
/// contains duplicates or is not closed under the collineation action.
Census classify_orbits(const std::vector<PairSet>& family);

struct BurnsideResult {
  std::size_t fixed_total = 0;                 // sum over the group of fixed members
  std::array<std::size_t, 168> fixed_counts{}; // indexed like CollineationGroup
  /// fixed_total / 168 when exact, nullopt when 168 does not divide it.
  std::optional<std::size_t> orbit_count() const;
};

BurnsideResult burnside_check(const std::vector<PairSet>& family);

/// Conditions: every member is a GNS; closure({}) is a member; closure(T u {p})
/// is a member for every member T and pair p outside T. Returns a description
/// of the first failing condition, or nullopt if the certificate holds.
std::optional<std::string> completeness_failure(const std::vector<PairSet>& family);
bool completeness_certificate(const std::vector<PairSet>& family);

/// The representatives of the GNS T whose part inside X is not a GNS, one per
/// class, in increasing cardinality.
std::vector<PairSet> case_c_representatives();

/// Rebuilds every GNS from the structural classification (line condition on
/// nice sets, the three shapes with T n X empty, the exceptional orbits, and
/// admissible augmentations of GNS inside X), without consulting is_gns.
/// Sorted ascending, duplicate-free.
std::vector<PairSet> structural_enumerate();

}  // namespace gns
