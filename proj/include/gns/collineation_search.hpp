#pragma once

// Finding every collineation that maps one pair-set onto another, pruned by
// weight/frequency-set invariants, plus the brute-force oracle.

#include <array>
#include <vector>

#include "gns/fano.hpp"
#include "gns/group.hpp"

namespace gns {

inline constexpr int kMaxWeight = 9;

struct FrequencyProfile {
  /// weights[i] for i in 1..7: occurrences of i in the pairs of S, with {i,i}
  /// counted twice. weights[0] counts occurrences of 0 the same way.
  std::array<int, kIndexCount> weights{};
  /// heights[i] = |{{a,b} in S : a*b = i}| for i in 0..7.
  std::array<int, kIndexCount> heights{};
  /// {a*b : {a,b} in S}, restricted to 1..7.
  IndexSet points;
  /// freq_sets[n] = {i in 1..7 : weights[i] = n}; partitions 1..7.
  std::array<IndexSet, kMaxWeight + 1> freq_sets{};
  /// Points of 1..7 occurring in some pair of S.
  IndexSet support;
};

FrequencyProfile frequency_profile(PairSet s);

/// Images sigma[1..7] fixed so far; 0 marks an undetermined image.
class PartialCollineation {
 public:
  const std::array<Index, kIndexCount>& sigma() const { return sigma_; }
  bool determined(Index t) const { return sigma_[static_cast<std::size_t>(t)] != 0; }

  /// Records sigma(t) = v and closes under sigma(m*n) = sigma(m)*sigma(n).
  /// Returns false if this contradicts earlier assignments.
  bool assign(Index t, Index v);

  /// True if `c` agrees with every determined image.
  bool admits(const Collineation& c) const;

 private:
  std::array<Index, kIndexCount> sigma_{};
};

/// Every sigma with apply_to_set(sigma, S) = T, in group order.
std::vector<Collineation> find_collineations(PairSet s, PairSet t);

/// Tests all 168 elements directly.
std::vector<Collineation> brute_force_collineations(PairSet s, PairSet t);

}  // namespace gns
