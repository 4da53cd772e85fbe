#pragma once

// The 168-element collineation group of the Fano plane acting on I0, on
// pairs and on pair-sets.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gns/fano.hpp"

namespace gns {

/// A permutation of I0 fixing 0 and preserving the star operation.
class Collineation {
 public:
  static Collineation identity();

  /// The unique collineation with 1 -> i, 2 -> j, 3 -> k. Throws unless the
  /// triple is generative.
  static Collineation from_generative_triplet(Index i, Index j, Index k);

  /// Validates that `image` fixes 0, permutes 1..7 and preserves star.
  static Collineation from_images(const std::array<Index, kIndexCount>& image);

  /// Seven digits giving the images of 1..7, e.g. "2135476".
  static Collineation parse(std::string_view text);
  std::string to_string() const;

  Index operator()(Index t) const { return image_[static_cast<std::size_t>(t)]; }
  Pair apply(Pair p) const { return Pair::of((*this)(p.lo), (*this)(p.hi)); }
  Line apply(const Line& l) const;
  IndexSet apply(IndexSet s) const;

  Collineation inverse() const;

  friend Collineation compose(const Collineation& a, const Collineation& b);
  friend bool operator==(const Collineation&, const Collineation&) = default;
  friend auto operator<=>(const Collineation&, const Collineation&) = default;

 private:
  std::array<std::uint8_t, kIndexCount> image_{};
};

/// (a o b)(t) = a(b(t)).
Collineation compose(const Collineation& a, const Collineation& b);

/// The materialised group with a precomputed action on the 36 pairs.
class CollineationGroup {
 public:
  static constexpr std::size_t kOrder = 168;

  /// Built once on first use; immutable afterwards.
  static const CollineationGroup& instance();

  std::span<const Collineation> elements() const { return elements_; }
  const Collineation& operator[](std::size_t n) const { return elements_[n]; }
  std::size_t size() const { return elements_.size(); }
  std::size_t identity_index() const { return identity_index_; }

  /// Position of `c` in elements(); elements are ordered by (c(1), c(2), c(3)).
  std::size_t index_of(const Collineation& c) const;

  /// Image of T under element n, via the 168x36 pair-action table.
  PairSet apply(std::size_t n, PairSet t) const {
    PairSet out;
    std::uint64_t image = 0;
    for (std::uint64_t m = t.mask(); m != 0; m &= m - 1) {
      image |= std::uint64_t{1} << pair_image_[n][static_cast<std::size_t>(std::countr_zero(m))];
    }
    out = PairSet::from_mask(image);
    return out;
  }

 private:
  CollineationGroup();

  std::vector<Collineation> elements_;
  std::vector<std::array<std::uint8_t, kPairCount>> pair_image_;
  std::array<std::uint8_t, 512> by_triplet_{};  // (c(1),c(2),c(3)) -> index
  std::size_t identity_index_ = 0;
};

/// {{s(i), s(j)} : {i,j} in T}.
PairSet apply_to_set(const Collineation& s, PairSet t);

/// Numerically smallest image of T over the whole group.
PairSet canonical_form(PairSet t);

struct OrbitStabilizer {
  std::vector<PairSet> orbit;             // sorted ascending, T included
  std::vector<Collineation> stabilizer;   // in group order
};

OrbitStabilizer orbit_and_stabilizer(PairSet t);

}  // namespace gns
