#include "gns/collineation_search.hpp"

#include <utility>

namespace gns {

namespace {

Index product(IndexSet s) {
  Index p = 0;
  for (Index i : s.members()) p = star(p, i);
  return p;
}

}  // namespace

FrequencyProfile frequency_profile(PairSet s) {
  FrequencyProfile f;
  for (Pair p : s.pairs()) {
    ++f.weights[static_cast<std::size_t>(p.lo)];
    ++f.weights[static_cast<std::size_t>(p.hi)];
    const Index h = star(p.lo, p.hi);
    ++f.heights[static_cast<std::size_t>(h)];
    if (h != 0) f.points.insert(h);
    if (p.lo != 0) f.support.insert(p.lo);
    if (p.hi != 0) f.support.insert(p.hi);
  }
  for (Index i = 1; i < kIndexCount; ++i) {
    f.freq_sets[static_cast<std::size_t>(f.weights[static_cast<std::size_t>(i)])].insert(i);
  }
  return f;
}

bool PartialCollineation::assign(Index t, Index v) {
  if (t == 0 || v == 0) return t == v;
  auto& s = sigma_;
  const auto at = [&s](Index i) -> Index& { return s[static_cast<std::size_t>(i)]; };
  const auto used_elsewhere = [&s](Index value, Index except) {
    for (Index i = 1; i < kIndexCount; ++i) {
      if (i != except && s[static_cast<std::size_t>(i)] == value) return true;
    }
    return false;
  };
  if (at(t) != 0) return at(t) == v;
  if (used_elsewhere(v, t)) return false;
  at(t) = v;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index m = 1; m < kIndexCount; ++m) {
      for (Index n = m + 1; n < kIndexCount; ++n) {
        if (at(m) == 0 || at(n) == 0) continue;
        const Index r = star(m, n);
        const Index w = star(at(m), at(n));
        if (at(r) == w) continue;
        if (at(r) != 0 || used_elsewhere(w, r)) return false;
        at(r) = w;
        changed = true;
      }
    }
  }
  return true;
}

bool PartialCollineation::admits(const Collineation& c) const {
  for (Index t = 1; t < kIndexCount; ++t) {
    if (determined(t) && c(t) != sigma_[static_cast<std::size_t>(t)]) return false;
  }
  return true;
}

std::vector<Collineation> find_collineations(PairSet s, PairSet t) {
  if (s.size() != t.size()) return {};
  const FrequencyProfile fs = frequency_profile(s);
  const FrequencyProfile ft = frequency_profile(t);
  if (fs.support.size() != ft.support.size() || fs.points.size() != ft.points.size() ||
      fs.weights[0] != ft.weights[0]) {
    return {};
  }
  for (int n = 0; n <= kMaxWeight; ++n) {
    if (fs.freq_sets[static_cast<std::size_t>(n)].size() != ft.freq_sets[static_cast<std::size_t>(n)].size()) {
      return {};
    }
  }

  // A collineation maps freq(n,S) onto freq(n,T); derive forced images from
  // each pair of frequency sets (complements for sizes 4..6).
  PartialCollineation partial;
  std::vector<std::pair<IndexSet, IndexSet>> line_constraints;
  for (int n = 0; n <= kMaxWeight; ++n) {
    IndexSet a = fs.freq_sets[static_cast<std::size_t>(n)];
    IndexSet b = ft.freq_sets[static_cast<std::size_t>(n)];
    if (a.size() >= 4 && a.size() <= 6) {
      a = a.complement();
      b = b.complement();
    }
    bool ok = true;
    switch (a.size()) {
      case 1:
      case 2:
        ok = partial.assign(product(a), product(b));
        break;
      case 3:
        if (is_line(a) != is_line(b)) return {};
        if (is_line(a)) {
          line_constraints.emplace_back(a, b);
        } else {
          ok = partial.assign(product(a), product(b));
        }
        break;
      default:
        break;
    }
    if (!ok) return {};
  }

  std::vector<Collineation> out;
  for (const Collineation& c : CollineationGroup::instance().elements()) {
    if (!partial.admits(c)) continue;
    bool ok = true;
    for (const auto& [from, to] : line_constraints) ok = ok && c.apply(from) == to;
    if (ok && apply_to_set(c, s) == t) out.push_back(c);
  }
  return out;
}

std::vector<Collineation> brute_force_collineations(PairSet s, PairSet t) {
  std::vector<Collineation> out;
  for (const Collineation& c : CollineationGroup::instance().elements()) {
    if (apply_to_set(c, s) == t) out.push_back(c);
  }
  return out;
}

}  // namespace gns
