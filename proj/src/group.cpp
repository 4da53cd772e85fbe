#include "gns/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace gns {

namespace {

bool preserves_star(const std::array<Index, kIndexCount>& image) {
  for (Index i = 0; i < kIndexCount; ++i) {
    for (Index j = 0; j < kIndexCount; ++j) {
      if (image[static_cast<std::size_t>(star(i, j))] !=
          star(image[static_cast<std::size_t>(i)], image[static_cast<std::size_t>(j)])) {
        return false;
      }
    }
  }
  return true;
}

std::size_t triplet_key(Index a, Index b, Index c) {
  return static_cast<std::size_t>((a << 6) | (b << 3) | c);
}

}  // namespace

Collineation Collineation::identity() {
  Collineation c;
  for (std::size_t t = 0; t < kIndexCount; ++t) c.image_[t] = static_cast<std::uint8_t>(t);
  return c;
}

Collineation Collineation::from_generative_triplet(Index i, Index j, Index k) {
  if (!is_generative(i, j, k)) {
    throw std::invalid_argument("from_generative_triplet: (" + std::to_string(i) + "," +
                                std::to_string(j) + "," + std::to_string(k) +
                                ") is not generative");
  }
  // 5 = 1*2, 6 = 1*3, 7 = 2*3, 4 = 1*7; the images are forced by star.
  std::array<Index, kIndexCount> image{};
  image[1] = i;
  image[2] = j;
  image[3] = k;
  image[5] = star(i, j);
  image[6] = star(i, k);
  image[7] = star(j, k);
  image[4] = star(i, image[7]);
  return from_images(image);
}

Collineation Collineation::from_images(const std::array<Index, kIndexCount>& image) {
  if (image[0] != 0) throw std::invalid_argument("Collineation: 0 must be fixed");
  std::uint8_t seen = 0;
  for (std::size_t t = 1; t < kIndexCount; ++t) {
    if (!is_point(image[t])) throw std::invalid_argument("Collineation: image outside 1..7");
    seen = static_cast<std::uint8_t>(seen | (1U << image[t]));
  }
  if (seen != 0xFE) throw std::invalid_argument("Collineation: not a bijection of 1..7");
  if (!preserves_star(image)) throw std::invalid_argument("Collineation: star is not preserved");
  Collineation c;
  for (std::size_t t = 0; t < kIndexCount; ++t) c.image_[t] = static_cast<std::uint8_t>(image[t]);
  return c;
}

Collineation Collineation::parse(std::string_view text) {
  if (text.size() != 7) {
    throw ParseError("malformed collineation '" + std::string(text) +
                     "' (expected 7 digits giving the images of 1..7)");
  }
  std::array<Index, kIndexCount> image{};
  for (std::size_t t = 0; t < 7; ++t) {
    if (text[t] < '1' || text[t] > '7') {
      throw ParseError("malformed collineation '" + std::string(text) + "' (digits must be 1..7)");
    }
    image[t + 1] = text[t] - '0';
  }
  try {
    return from_images(image);
  } catch (const std::invalid_argument& e) {
    throw ParseError("'" + std::string(text) + "' is not a collineation: " + e.what());
  }
}

std::string Collineation::to_string() const {
  std::string out;
  for (std::size_t t = 1; t < kIndexCount; ++t) out += static_cast<char>('0' + image_[t]);
  return out;
}

Line Collineation::apply(const Line& l) const {
  Line out{{(*this)(l.points[0]), (*this)(l.points[1]), (*this)(l.points[2])}};
  std::sort(out.points.begin(), out.points.end());
  return out;
}

IndexSet Collineation::apply(IndexSet s) const {
  IndexSet out;
  for (Index i : s.members()) out.insert((*this)(i));
  return out;
}

Collineation Collineation::inverse() const {
  Collineation c;
  for (std::size_t t = 0; t < kIndexCount; ++t) c.image_[image_[t]] = static_cast<std::uint8_t>(t);
  return c;
}

Collineation compose(const Collineation& a, const Collineation& b) {
  Collineation c;
  for (std::size_t t = 0; t < kIndexCount; ++t) c.image_[t] = a.image_[b.image_[t]];
  return c;
}

// ---------------------------------------------------------------------------

CollineationGroup::CollineationGroup() {
  by_triplet_.fill(0xFF);
  for (Index i = 1; i < kIndexCount; ++i) {
    for (Index j = 1; j < kIndexCount; ++j) {
      for (Index k = 1; k < kIndexCount; ++k) {
        if (!is_generative(i, j, k)) continue;
        by_triplet_[triplet_key(i, j, k)] = static_cast<std::uint8_t>(elements_.size());
        elements_.push_back(Collineation::from_generative_triplet(i, j, k));
      }
    }
  }
  pair_image_.resize(elements_.size());
  for (std::size_t n = 0; n < elements_.size(); ++n) {
    for (int p = 0; p < kPairCount; ++p) {
      pair_image_[n][static_cast<std::size_t>(p)] =
          static_cast<std::uint8_t>(elements_[n].apply(Pair::from_index(p)).index());
    }
  }
  identity_index_ = index_of(Collineation::identity());
}

const CollineationGroup& CollineationGroup::instance() {
  static const CollineationGroup group;
  return group;
}

std::size_t CollineationGroup::index_of(const Collineation& c) const {
  return by_triplet_[triplet_key(c(1), c(2), c(3))];
}

PairSet apply_to_set(const Collineation& s, PairSet t) {
  PairSet out;
  for (Pair p : t.pairs()) out.insert(s.apply(p));
  return out;
}

PairSet canonical_form(PairSet t) {
  const auto& g = CollineationGroup::instance();
  PairSet best = t;
  for (std::size_t n = 0; n < g.size(); ++n) best = std::min(best, g.apply(n, t));
  return best;
}

OrbitStabilizer orbit_and_stabilizer(PairSet t) {
  const auto& g = CollineationGroup::instance();
  OrbitStabilizer out;
  for (std::size_t n = 0; n < g.size(); ++n) {
    const PairSet image = g.apply(n, t);
    out.orbit.push_back(image);
    if (image == t) out.stabilizer.push_back(g[n]);
  }
  std::sort(out.orbit.begin(), out.orbit.end());
  out.orbit.erase(std::unique(out.orbit.begin(), out.orbit.end()), out.orbit.end());
  return out;
}

}  // namespace gns
