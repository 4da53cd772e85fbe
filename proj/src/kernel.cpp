#include "gns/kernel.hpp"

#include <algorithm>
#include <vector>

namespace gns {

namespace {

// One instance of the absorbing rule: if every pair of `trigger` is present,
// every pair of `result` must be present too.
struct Rule {
  std::uint64_t trigger = 0;
  std::uint64_t result = 0;
  friend bool operator==(const Rule&, const Rule&) = default;
  friend auto operator<=>(const Rule&, const Rule&) = default;
};

std::uint64_t bit(Pair p) { return std::uint64_t{1} << p.index(); }

std::vector<Rule> build_rules(bool generative_only) {
  std::vector<Rule> rules;
  for (Index i = 0; i < kIndexCount; ++i) {
    for (Index j = 0; j < kIndexCount; ++j) {
      for (Index k = 0; k < kIndexCount; ++k) {
        if (generative_only && !is_generative(i, j, k)) continue;
        Rule r{bit(Pair::of(i, j)) | bit(Pair::of(star(i, j), k)), p_set(i, j, k).mask()};
        r.result &= ~r.trigger;
        if (r.result != 0) rules.push_back(r);
      }
    }
  }
  std::sort(rules.begin(), rules.end());
  rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
  return rules;
}

const std::vector<Rule>& gns_rules() {
  static const std::vector<Rule> rules = build_rules(false);
  return rules;
}

const std::vector<Rule>& nice_rules() {
  static const std::vector<Rule> rules = build_rules(true);
  return rules;
}

bool satisfies(const std::vector<Rule>& rules, std::uint64_t t) {
  for (const Rule& r : rules) {
    if ((t & r.trigger) == r.trigger && (t & r.result) != r.result) return false;
  }
  return true;
}

void require_in_x(PairSet s, const char* what) {
  static const PairSet x = subset_family(Family::X);
  if (!s.is_subset_of(x)) {
    throw std::invalid_argument(std::string(what) + ": " + s.to_string() +
                                " is not contained in X");
  }
}

void require_gns_in_x(PairSet s, const char* what) {
  require_in_x(s, what);
  if (!is_gns(s)) {
    throw std::invalid_argument(std::string(what) + ": " + s.to_string() + " is not a GNS");
  }
}

}  // namespace

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Empty: return "EMPTY";
    case CaseTag::A: return "A";
    case CaseTag::B: return "B";
    case CaseTag::C: return "C";
    case CaseTag::D: return "D";
  }
  return "?";
}

CaseTag parse_case_tag(std::string_view text) {
  for (CaseTag tag : {CaseTag::Empty, CaseTag::A, CaseTag::B, CaseTag::C, CaseTag::D}) {
    if (text == to_string(tag)) return tag;
  }
  throw ParseError("unknown case tag '" + std::string(text) + "'");
}

bool is_nice(PairSet t) {
  require_in_x(t, "is_nice");
  return satisfies(nice_rules(), t.mask());
}

bool is_gns(PairSet t) { return satisfies(gns_rules(), t.mask()); }

std::optional<Triple> find_violation(PairSet t) {
  for (Index i = 0; i < kIndexCount; ++i) {
    for (Index j = 0; j < kIndexCount; ++j) {
      if (!t.contains(Pair::of(i, j))) continue;
      for (Index k = 0; k < kIndexCount; ++k) {
        if (t.contains(Pair::of(star(i, j), k)) && !p_set(i, j, k).is_subset_of(t)) {
          return Triple{i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

PairSet closure(PairSet s) {
  const auto& rules = gns_rules();
  std::uint64_t t = s.mask();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : rules) {
      if ((t & r.trigger) == r.trigger && (t & r.result) != r.result) {
        t |= r.result;
        changed = true;
      }
    }
  }
  return PairSet::from_mask(t);
}

CaseTag decompose_case(PairSet t) {
  if (!is_gns(t)) {
    throw std::invalid_argument("decompose_case: " + t.to_string() + " is not a GNS");
  }
  static const PairSet x = subset_family(Family::X);
  if (t.empty()) return CaseTag::Empty;
  if (t.is_subset_of(x)) return CaseTag::A;
  const PairSet inside = t & x;
  if (inside.empty()) return CaseTag::B;
  return is_gns(inside) ? CaseTag::D : CaseTag::C;
}

IndexSet j_set(PairSet s) {
  require_in_x(s, "j_set");
  IndexSet out;
  for (Pair p : s.pairs()) out.insert(star(p.lo, p.hi));
  return out;
}

IndexSet i_set(PairSet s) {
  require_in_x(s, "i_set");
  IndexSet out;
  for (Pair p : s.pairs()) out = out | line_through(p.lo, p.hi).as_set();
  return out;
}

PairSet augment_diag(PairSet s, IndexSet j) {
  require_gns_in_x(s, "augment_diag");
  for (Index i : j.members()) s.insert(Pair::of(i, i));
  return s;
}

PairSet augment_zero(PairSet s, IndexSet j) {
  require_gns_in_x(s, "augment_zero");
  s.insert(Pair::of(0, 0));
  for (Index i : j.members()) s.insert(Pair::of(0, i));
  return s;
}

PairSet augment_p0ii(PairSet s, Index i) {
  require_gns_in_x(s, "augment_p0ii");
  if (!is_point(i)) {
    throw std::invalid_argument("augment_p0ii: i = " + std::to_string(i) + " must lie in 1..7");
  }
  return s | p_set(0, i, i);
}

bool admissible_diag(PairSet s, IndexSet j) { return (j & j_set(s)).empty(); }

bool admissible_zero(PairSet s, IndexSet j) {
  require_in_x(s, "admissible_zero");
  for (Pair p : s.pairs()) {
    const IndexSet l = line_through(p.lo, p.hi).as_set();
    if (!(l & j).empty() && !l.is_subset_of(j)) return false;
  }
  return true;
}

bool admissible_p0ii(PairSet s, Index i) {
  if (!is_point(i)) {
    throw std::invalid_argument("admissible_p0ii: i = " + std::to_string(i) + " must lie in 1..7");
  }
  return !i_set(s).contains(i);
}

}  // namespace gns
