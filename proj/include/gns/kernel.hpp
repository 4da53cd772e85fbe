#pragma once

// Nice sets, generalised nice sets (GNS), the closure operator and the
// structural criteria for GNS whose part inside X is itself a GNS.

#include <optional>
#include <string>
#include <string_view>

#include "gns/fano.hpp"

namespace gns {

/// Exhaustive, mutually exclusive taxonomy of a GNS T by how it meets X.
enum class CaseTag {
  Empty,  // T = {}
  A,      // T subset of X
  B,      // T and X disjoint
  C,      // T meets X, T not inside X, and T n X is not a GNS
  D,      // T meets X, T not inside X, and T n X is a GNS
};

/// "EMPTY", "A", "B", "C" or "D".
std::string to_string(CaseTag tag);
/// Inverse of to_string; throws ParseError on anything else.
CaseTag parse_case_tag(std::string_view text);

/// An ordered triple (i,j,k) in I0^3 witnessing a violation of the absorbing
/// rule: {i,j} and {i*j,k} lie in T but p_set(i,j,k) does not.
struct Triple {
  Index i = 0;
  Index j = 0;
  Index k = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Nice-set rule over generative triples; throws unless T is a subset of X.
bool is_nice(PairSet t);

/// GNS rule over all 512 triples of I0^3.
bool is_gns(PairSet t);

/// First violated triple in lexicographic (i,j,k) order, if any.
std::optional<Triple> find_violation(PairSet t);

/// Smallest GNS containing S.
PairSet closure(PairSet s);

/// Throws std::invalid_argument unless is_gns(t).
CaseTag decompose_case(PairSet t);

/// {a*b : {a,b} in S}; throws unless S is a subset of X.
IndexSet j_set(PairSet s);
/// Union of the lines through each {a,b} in S; throws unless S is a subset of X.
IndexSet i_set(PairSet s);

/// S u {{j,j} : j in J}.
PairSet augment_diag(PairSet s, IndexSet j);
/// S u {{0,0}} u {{0,j} : j in J}.
PairSet augment_zero(PairSet s, IndexSet j);
/// S u {{0,0},{0,i},{i,i}}; requires i in 1..7.
PairSet augment_p0ii(PairSet s, Index i);

/// J and J_S are disjoint.
bool admissible_diag(PairSet s, IndexSet j);
/// Every line through a pair of S either misses J or lies inside J.
bool admissible_zero(PairSet s, IndexSet j);
/// i is not in I_S.
bool admissible_p0ii(PairSet s, Index i);

}  // namespace gns
