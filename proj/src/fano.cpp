#include "gns/fano.hpp"

#include <algorithm>
#include <cctype>

namespace gns {

namespace {

constexpr std::array<Line, kLineCount> kLines = {{
    {{1, 2, 5}},
    {{5, 6, 7}},
    {{1, 4, 7}},
    {{1, 3, 6}},
    {{2, 4, 6}},
    {{2, 3, 7}},
    {{3, 4, 5}},
}};

using StarTable = std::array<std::array<std::uint8_t, kIndexCount>, kIndexCount>;

constexpr StarTable make_star_table() {
  StarTable t{};
  for (int i = 0; i < kIndexCount; ++i) {
    t[0][i] = static_cast<std::uint8_t>(i);
    t[i][0] = static_cast<std::uint8_t>(i);
    t[i][i] = 0;
  }
  for (const Line& l : kLines) {
    const auto [a, b, c] = l.points;
    t[a][b] = t[b][a] = static_cast<std::uint8_t>(c);
    t[a][c] = t[c][a] = static_cast<std::uint8_t>(b);
    t[b][c] = t[c][b] = static_cast<std::uint8_t>(a);
  }
  return t;
}

constexpr StarTable kStar = make_star_table();

constexpr std::array<Pair, kPairCount> make_pair_table() {
  std::array<Pair, kPairCount> t{};
  for (int i = 0; i < kIndexCount; ++i) {
    for (int j = i; j < kIndexCount; ++j) {
      Pair p{i, j};
      t[p.index()] = p;
    }
  }
  return t;
}

constexpr std::array<Pair, kPairCount> kPairs = make_pair_table();

void require_index(Index i, const char* what) {
  if (!is_index(i)) {
    throw std::invalid_argument(std::string(what) + ": index " + std::to_string(i) +
                                " outside 0..7");
  }
}

void require_point(Index i, const char* what) {
  if (!is_point(i)) {
    throw std::invalid_argument(std::string(what) + ": point " + std::to_string(i) +
                                " outside 1..7");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// Pair

Pair Pair::of(Index a, Index b) {
  require_index(a, "Pair");
  require_index(b, "Pair");
  return a <= b ? Pair{a, b} : Pair{b, a};
}

Pair Pair::from_index(int position) {
  if (position < 0 || position >= kPairCount) {
    throw std::invalid_argument("Pair: position " + std::to_string(position) + " outside 0..35");
  }
  return kPairs[static_cast<std::size_t>(position)];
}

Pair Pair::parse(std::string_view text) {
  text = trim(text);
  if (text.size() != 2 || text[0] < '0' || text[0] > '7' || text[1] < '0' || text[1] > '7') {
    throw ParseError("malformed pair literal '" + std::string(text) +
                     "' (expected two digits 0..7, e.g. \"05\")");
  }
  return of(text[0] - '0', text[1] - '0');
}

std::string Pair::to_string() const {
  return {static_cast<char>('0' + lo), static_cast<char>('0' + hi)};
}

// ---------------------------------------------------------------------------
// IndexSet

IndexSet::IndexSet(std::initializer_list<Index> members) {
  for (Index i : members) insert(i);
}

IndexSet IndexSet::from_mask(std::uint8_t mask) {
  if ((mask & 1U) != 0) throw std::invalid_argument("IndexSet: 0 is not a point");
  IndexSet s;
  s.mask_ = mask;
  return s;
}

IndexSet IndexSet::all() { return from_mask(0xFE); }

void IndexSet::insert(Index i) {
  require_point(i, "IndexSet");
  mask_ = static_cast<std::uint8_t>(mask_ | (1U << i));
}

std::vector<Index> IndexSet::members() const {
  std::vector<Index> out;
  for (Index i = 1; i < kIndexCount; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::string IndexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Index i : members()) {
    if (!first) out += ',';
    out += static_cast<char>('0' + i);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// PairSet

PairSet::PairSet(std::initializer_list<Pair> pairs) {
  for (Pair p : pairs) insert(p);
}

PairSet PairSet::from_mask(std::uint64_t mask) {
  if ((mask & ~kFullMask) != 0) {
    throw std::invalid_argument("PairSet: bits above position 35 are set");
  }
  return PairSet(mask, 0);
}

PairSet PairSet::parse(std::string_view text) {
  text = trim(text);
  PairSet out;
  if (text.empty() || text == "{}") return out;
  while (true) {
    const auto comma = text.find(',');
    out.insert(Pair::parse(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string PairSet::to_string() const {
  std::string out;
  for (Pair p : pairs()) {
    if (!out.empty()) out += ',';
    out += p.to_string();
  }
  return out;
}

std::vector<Pair> PairSet::pairs() const {
  std::vector<Pair> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(kPairs[static_cast<std::size_t>(std::countr_zero(m))]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lines and the star operation

bool Line::contains(Index i) const {
  return std::find(points.begin(), points.end(), i) != points.end();
}

IndexSet Line::as_set() const { return IndexSet{points[0], points[1], points[2]}; }

std::string Line::to_string() const { return as_set().to_string(); }

const std::array<Line, kLineCount>& lines() {
  static const std::array<Line, kLineCount> sorted = [] {
    auto out = kLines;
    for (Line& l : out) std::sort(l.points.begin(), l.points.end());
    return out;
  }();
  return sorted;
}

Index star(Index i, Index j) {
  require_index(i, "star");
  require_index(j, "star");
  return kStar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

Line line_through(Index i, Index j) {
  require_point(i, "line_through");
  require_point(j, "line_through");
  if (i == j) throw std::invalid_argument("line_through: points must be distinct");
  Line l{{i, j, star(i, j)}};
  std::sort(l.points.begin(), l.points.end());
  return l;
}

bool is_generative(Index i, Index j, Index k) {
  if (!is_point(i) || !is_point(j) || !is_point(k)) return false;
  if (i == j || j == k || i == k) return false;
  return k != star(i, j);
}

bool is_line(IndexSet s) {
  if (s.size() != 3) return false;
  const auto m = s.members();
  return star(m[0], m[1]) == m[2];
}

PairSet p_set(Index i, Index j, Index k) {
  return PairSet{Pair::of(i, j),          Pair::of(j, k),          Pair::of(k, i),
                 Pair::of(i, star(j, k)), Pair::of(j, star(k, i)), Pair::of(k, star(i, j))};
}

PairSet t_set(Index i, Index j, Index k) {
  if (!is_generative(i, j, k)) {
    throw std::invalid_argument("t_set: (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + ") is not generative");
  }
  return p_set(i, j, k) | p_set(i, j, star(i, k)) | p_set(i, star(i, j), k);
}

PairSet subset_family(Family kind) {
  PairSet out;
  switch (kind) {
    case Family::X:
      for (Index i = 1; i < kIndexCount; ++i)
        for (Index j = i + 1; j < kIndexCount; ++j) out.insert(Pair::of(i, j));
      return out;
    case Family::X0:
      return PairSet::full();
    case Family::XE:
      for (Index i = 0; i < kIndexCount; ++i) out.insert(Pair::of(i, i));
      return out;
    case Family::XF:
      for (Index i = 0; i < kIndexCount; ++i) out.insert(Pair::of(0, i));
      return out;
    default:
      throw std::invalid_argument("subset_family: this family requires a line or point parameter");
  }
}

PairSet subset_family(Family kind, const Line& line) {
  if (kind != Family::XLine && kind != Family::XLineComp) {
    throw std::invalid_argument("subset_family: a line parameter is only valid for XLine/XLineComp");
  }
  Line sorted = line;
  std::sort(sorted.points.begin(), sorted.points.end());
  if (std::find(lines().begin(), lines().end(), sorted) == lines().end()) {
    throw std::invalid_argument("subset_family: " + line.to_string() + " is not a Fano line");
  }
  PairSet out;
  for (Index i = 1; i < kIndexCount; ++i) {
    for (Index j = i + 1; j < kIndexCount; ++j) {
      const bool inside = line.contains(i) && line.contains(j);
      const bool outside = !line.contains(i) && !line.contains(j);
      if ((kind == Family::XLine && inside) || (kind == Family::XLineComp && outside)) {
        out.insert(Pair::of(i, j));
      }
    }
  }
  return out;
}

PairSet subset_family(Family kind, Index point) {
  if (kind != Family::XPencil && kind != Family::XPerp) {
    throw std::invalid_argument("subset_family: a point parameter is only valid for XPencil/XPerp");
  }
  require_point(point, "subset_family");
  PairSet out;
  for (Index i = 1; i < kIndexCount; ++i) {
    for (Index j = i + 1; j < kIndexCount; ++j) {
      const bool take = kind == Family::XPencil ? (i == point || j == point) : star(i, j) == point;
      if (take) out.insert(Pair::of(i, j));
    }
  }
  return out;
}

}  // namespace gns
