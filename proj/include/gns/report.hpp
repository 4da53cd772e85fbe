#pragma once

// Fixture verification, the overall verification report, and census
// renderings (JSON, CSV, Markdown).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gns/enumeration.hpp"
#include "gns/fixtures.hpp"
#include "gns/group.hpp"
#include "gns/kernel.hpp"

namespace gns {

struct RowVerdict {
  std::string text;
  PairSet set;
  PairSet canonical;
  bool gns = false;
  std::optional<Triple> violation;  // first violated triple when !gns
  bool in_scope = false;            // canonical form lies in the fixture's census slice
};

struct DuplicateRows {
  std::size_t first = 0;   // row positions
  std::size_t second = 0;
  Collineation witness;    // maps row `first` onto row `second`
};

struct FixtureVerdict {
  std::string id;
  std::size_t claimed = 0;
  std::size_t row_count = 0;
  std::size_t slice_count = 0;
  std::vector<RowVerdict> rows;
  std::vector<DuplicateRows> duplicates;
  /// Census classes in scope that no row (and no verified omission) covers.
  std::vector<PairSet> missing;
  /// Documented omissions that were verified and account for a census class.
  std::vector<PairSet> confirmed_omissions;
  /// Documented omissions that failed re-verification.
  std::vector<std::string> omission_problems;
  std::string omission_note;

  bool gns_ok() const;
  bool distinct_ok() const { return duplicates.empty(); }
  bool complete_ok() const;
  bool passed() const { return gns_ok() && distinct_ok() && complete_ok(); }
};

/// Checks every row is a GNS, rows are pairwise non-collinear, and the rows
/// (plus verified omissions) are exactly the census classes in scope.
FixtureVerdict verify_fixture(const FixtureTable& f, const Census& census);

struct IndexRowVerdict {
  std::string s;
  IndexSet printed_i, printed_j, computed_i, computed_j;
  bool passed() const { return printed_i == computed_i && printed_j == computed_j; }
};

std::vector<IndexRowVerdict> verify_index_table();

struct CountCheck {
  std::string name;
  std::size_t expected = 0;  // frozen regression value
  std::size_t actual = 0;
  bool passed() const { return expected == actual; }
};

struct VerificationReport {
  CensusCounts computed;
  std::vector<FixtureVerdict> fixtures;
  std::vector<IndexRowVerdict> index_rows;
  std::vector<CountCheck> golden;
  /// Published counts plus verified omissions equal the computed counts.
  bool published_reconciled = false;
  /// Union of fixture scopes covers every census class exactly once (the
  /// empty set is shared by the two tables that list it).
  bool scopes_partition = false;
  std::vector<std::string> discrepancies;

  bool passed() const;
};

/// Frozen census counts, recorded after the completeness certificate and the
/// structural reconstruction both passed.
const CensusCounts& golden_counts();

VerificationReport verify_paper(const Census& census);

std::string render_text(const VerificationReport& report);
std::string render_json(const VerificationReport& report);

std::string census_to_json(const Census& census);
std::string census_to_csv(const Census& census);
std::string census_to_markdown(const Census& census);

/// Human-readable description of a violated triple, naming the missing P-set.
std::string describe_violation(PairSet t, const Triple& v);

}  // namespace gns
