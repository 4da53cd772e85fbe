#pragma once

// Incidence algebra of the Fano plane with an adjoined identity 0.
//
// Points are labelled 1..7; together with 0 they form the index set I0 on
// which the star operation is an elementary abelian group of order 8.
// The ground set X0 consists of the 36 unordered pairs {i,j} (i = j allowed)
// and is represented bit-wise by PairSet.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gns {

/// Raised when a text literal (pair, pair-set, collineation) is malformed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An element of I0 = {0,...,7}. 0 is the adjoined identity.
using Index = int;

inline constexpr int kIndexCount = 8;
inline constexpr int kPairCount = 36;
inline constexpr int kLineCount = 7;

constexpr bool is_index(Index i) { return i >= 0 && i < kIndexCount; }
constexpr bool is_point(Index i) { return i >= 1 && i < kIndexCount; }

/// An unordered pair {lo, hi} with lo <= hi.
struct Pair {
  Index lo = 0;
  Index hi = 0;

  /// Normalises the argument order; throws on indices outside 0..7.
  static Pair of(Index a, Index b);
  static Pair from_index(int position);
  static Pair parse(std::string_view text);

  /// Bit position in PairSet: lo*(17-lo)/2 + (hi-lo).
  constexpr int index() const { return lo * (17 - lo) / 2 + (hi - lo); }
  std::string to_string() const;

  bool contains(Index i) const { return lo == i || hi == i; }
  friend constexpr bool operator==(Pair, Pair) = default;
};

/// A subset of the seven Fano points, stored as a bit mask (bit i <=> point i).
class IndexSet {
 public:
  constexpr IndexSet() = default;
  IndexSet(std::initializer_list<Index> members);
  static IndexSet from_mask(std::uint8_t mask);
  static IndexSet all();

  bool contains(Index i) const { return is_point(i) && ((mask_ >> i) & 1U) != 0; }
  void insert(Index i);
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  std::uint8_t mask() const { return mask_; }
  std::vector<Index> members() const;
  std::string to_string() const;

  bool is_subset_of(IndexSet other) const { return (mask_ & ~other.mask_) == 0; }
  IndexSet operator&(IndexSet o) const { return from_mask(mask_ & o.mask_); }
  IndexSet operator|(IndexSet o) const { return from_mask(mask_ | o.mask_); }
  IndexSet complement() const { return from_mask(static_cast<std::uint8_t>(~mask_ & 0xFEU)); }
  friend bool operator==(IndexSet, IndexSet) = default;

 private:
  std::uint8_t mask_ = 0;  // bit 0 is never set
};

/// A set of pairs drawn from X0, held as a 36-bit mask in Pair::index order.
class PairSet {
 public:
  static constexpr std::uint64_t kFullMask = (std::uint64_t{1} << kPairCount) - 1;

  constexpr PairSet() = default;
  PairSet(std::initializer_list<Pair> pairs);

  /// Throws std::invalid_argument if bits above position 35 are set.
  static PairSet from_mask(std::uint64_t mask);
  static constexpr PairSet full() { return PairSet(kFullMask, 0); }

  /// Comma-separated pair literals, e.g. "00,01,12". Order and duplicates on
  /// input are irrelevant; "" and "{}" denote the empty set.
  static PairSet parse(std::string_view text);
  /// Pair literals in index order, comma-separated, no spaces.
  std::string to_string() const;

  constexpr std::uint64_t mask() const { return mask_; }
  bool contains(Pair p) const { return ((mask_ >> p.index()) & 1U) != 0; }
  void insert(Pair p) { mask_ |= std::uint64_t{1} << p.index(); }
  void erase(Pair p) { mask_ &= ~(std::uint64_t{1} << p.index()); }
  int size() const { return std::popcount(mask_); }
  bool empty() const { return mask_ == 0; }
  std::vector<Pair> pairs() const;

  bool is_subset_of(PairSet other) const { return (mask_ & ~other.mask_) == 0; }
  PairSet operator|(PairSet o) const { return PairSet(mask_ | o.mask_, 0); }
  PairSet operator&(PairSet o) const { return PairSet(mask_ & o.mask_, 0); }
  PairSet operator-(PairSet o) const { return PairSet(mask_ & ~o.mask_, 0); }
  PairSet& operator|=(PairSet o) {
    mask_ |= o.mask_;
    return *this;
  }

  friend constexpr bool operator==(PairSet, PairSet) = default;
  friend constexpr auto operator<=>(PairSet a, PairSet b) { return a.mask_ <=> b.mask_; }

 private:
  constexpr PairSet(std::uint64_t mask, int) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

/// A line of the Fano plane: three distinct points, stored ascending.
struct Line {
  std::array<Index, 3> points{};

  bool contains(Index i) const;
  IndexSet as_set() const;
  std::string to_string() const;
  friend bool operator==(const Line&, const Line&) = default;
};

/// The seven lines, in the order {1,2,5},{5,6,7},{1,4,7},{1,3,6},{2,4,6},{2,3,7},{3,4,5}.
const std::array<Line, kLineCount>& lines();

/// Group operation on I0: i*j is the third point on the line through i and j,
/// 0 is the identity and every element is its own inverse.
Index star(Index i, Index j);

/// The line {i, j, i*j}; requires distinct points i, j in 1..7.
Line line_through(Index i, Index j);

/// Distinct points of 1..7 with k != i*j. False for any 0 or repeated argument.
bool is_generative(Index i, Index j, Index k);

/// True if the three points of `s` are collinear (s must have exactly 3 members).
bool is_line(IndexSet s);

/// The six-term set {{i,j},{j,k},{k,i},{i,j*k},{j,k*i},{k,i*j}} for any
/// arguments in I0, duplicates collapsed.
PairSet p_set(Index i, Index j, Index k);

/// P{i,j,k} u P{i,j,i*k} u P{i,i*j,k}; requires a generative triple.
PairSet t_set(Index i, Index j, Index k);

enum class Family {
  X,            // the 21 edges {i,j}, i != j in 1..7
  X0,           // all 36 pairs
  XE,           // diagonal pairs {i,i}, i in 0..7
  XF,           // zero pairs {0,i}, i in 0..7
  XLine,        // edges inside a line
  XLineComp,    // edges avoiding a line
  XPencil,      // edges through a point i
  XPerp,        // edges {j,k} with j*k = i
};

/// Families without a parameter (X, X0, XE, XF).
PairSet subset_family(Family kind);
/// XLine / XLineComp.
PairSet subset_family(Family kind, const Line& line);
/// XPencil / XPerp, with a point in 1..7.
PairSet subset_family(Family kind, Index point);

}  // namespace gns
