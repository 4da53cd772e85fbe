#pragma once

// Machine-readable transcriptions of the published classification tables,
// each with the census slice it claims to classify.

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gns/enumeration.hpp"
#include "gns/fano.hpp"

namespace gns {

/// One class representative. Tables that list T - X and T n X in separate
/// columns keep both parts ("11,22,33 | 12"); the row is their union.
struct FixtureRow {
  std::string text;
  PairSet set() const;
};

struct FixtureTable {
  std::string id;            // "cor-3.2", "table-1", "thm-5.5", "table-3" ... "cor-6.14"
  std::string source_quote;  // caption or theorem lead-in
  std::vector<FixtureRow> rows;
  std::size_t claimed = 0;   // class count stated for this table
  std::string scope;         // human-readable description of the census slice
  std::function<bool(const OrbitClass&)> in_scope;
  /// Classes inside the scope that the published table omits. Each entry is
  /// re-verified (GNS, in scope, not collinear to any row) before it is
  /// accepted as an explanation of an incomplete table.
  std::vector<FixtureRow> omissions{};
  std::string omission_note{};
};

/// All classification fixtures, in publication order. Their scopes partition
/// the GNS census.
const std::vector<FixtureTable>& fixture_tables();

/// Looks up a fixture by id; throws std::invalid_argument if unknown.
const FixtureTable& fixture(const std::string& id);

/// One row of the auxiliary-index table: S with its printed I_S and J_S.
struct IndexTableRow {
  std::string s;
  IndexSet printed_i;
  IndexSet printed_j;
};

const std::vector<IndexTableRow>& index_table();

/// Class counts of a census: overall, per case tag, and for case D per |T - X|.
struct CensusCounts {
  std::size_t total_gns = 0;  // labelled count; 0 when not stated
  std::size_t classes = 0;
  std::map<std::string, std::size_t> by_case;
  std::map<int, std::size_t> case_d_by_t_minus_x;
  friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

CensusCounts counts_of(const Census& census);

/// The published census breakdown (conclusion list; no labelled total given).
const CensusCounts& published_counts();

}  // namespace gns
