#include "gns/fixtures.hpp"

#include <stdexcept>
#include <utility>

namespace gns {

namespace {

// Named sets used verbatim in table cells.
PairSet named_set(std::string_view token) {
  if (token == "X0") return PairSet::full();
  if (token == "XF") return subset_family(Family::XF);
  if (token == "Lc12") return subset_family(Family::XLineComp, line_through(1, 2));
  if (token == "P123") return p_set(1, 2, 3);
  return PairSet::parse(token);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// Rows of a two-column table sharing one T n X cell.
void add_group(std::vector<FixtureRow>& rows, const std::string& cap_x,
               std::initializer_list<const char*> minus_x) {
  for (const char* d : minus_x) rows.push_back({std::string(d) + " | " + cap_x});
}

PairSet minus_x(const OrbitClass& c) { return c.canonical - subset_family(Family::X); }

bool is_case(const OrbitClass& c, CaseTag tag) { return c.case_tag && *c.case_tag == tag; }

// Points i of 1..7 with {i,i} in r.
IndexSet diagonal_points(PairSet r) {
  IndexSet out;
  for (Pair p : r.pairs()) {
    if (p.lo == p.hi && p.lo != 0) out.insert(p.lo);
  }
  return out;
}

bool is_diagonal(PairSet r) {
  PairSet diag = subset_family(Family::XE);
  diag.erase(Pair::of(0, 0));
  return !r.empty() && r.is_subset_of(diag);
}

bool is_zero_part(PairSet r) {
  return r.contains(Pair::of(0, 0)) && r.is_subset_of(subset_family(Family::XF));
}

bool contains_line(IndexSet s) {
  for (const Line& l : lines()) {
    if (l.as_set().is_subset_of(s)) return true;
  }
  return false;
}

// Case D with T - X satisfying `shape`.
std::function<bool(const OrbitClass&)> case_d(std::function<bool(PairSet)> shape) {
  return [shape = std::move(shape)](const OrbitClass& c) {
    return is_case(c, CaseTag::D) && shape(minus_x(c));
  };
}

std::function<bool(PairSet)> diagonal_of_size(int n) {
  return [n](PairSet r) { return is_diagonal(r) && r.size() == n; };
}

std::function<bool(PairSet)> zero_of_size(int n) {
  return [n](PairSet r) { return is_zero_part(r) && r.size() == n; };
}

std::vector<FixtureTable> build_tables() {
  std::vector<FixtureTable> t;
  const std::vector<std::string> inside_x = {
      "12",          "12,13",          "12,67",          "12,13,14",          "12,13,17",
      "12,16,26",    "12,16,67",       "25,36,47",       "12,16,17,26",       "12,16,27,67",
      "12,16,17,26,27", "34,36,37,46,47,67", "12,13,23,17,26,35"};

  {
    FixtureTable f{"cor-3.2", "There are 14 generalised nice sets contained in X up to collineation: the empty set and", {}, 14,
                   "T contained in X (including the empty set)",
                   [](const OrbitClass& c) { return is_case(c, CaseTag::Empty) || is_case(c, CaseTag::A); }};
    f.rows.push_back({""});
    for (const auto& s : inside_x) f.rows.push_back({s});
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"table-1", "Generalised nice sets T with T n X = {}", {}, 21,
                   "T disjoint from X (including the empty set)",
                   [](const OrbitClass& c) { return is_case(c, CaseTag::Empty) || is_case(c, CaseTag::B); }};
    for (const char* r : {"", "00", "11", "00,01", "11,22", "00,01,02", "00,01,11", "11,22,33", "11,22,55",
                          "00,01,02,03", "00,01,02,05", "11,22,33,44", "11,22,33,55", "00,01,02,03,04",
                          "00,01,02,03,05", "11,22,33,44,55", "00,01,02,03,04,05", "11,22,33,44,55,66",
                          "00,01,02,03,04,05,06", "11,22,33,44,55,66,77", "XF"}) {
      f.rows.push_back({r});
    }
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"thm-5.5", "There are 8 generalised nice sets T such that T n X is not a generalised nice set, up to collineations", {}, 8,
                   "T n X is not a GNS",
                   [](const OrbitClass& c) { return is_case(c, CaseTag::C); }};
    for (const char* r : {"00,01,02,05,11,12,15", "00,01,02,05,11,12,15 | 22,25,55",
                          "00,01,02,05,11,12,15 | 03,06,13,16",
                          "00,01,02,03,04,05,06,07,11,12,13,14,15,16,17",
                          "00,01,02,03,04,05,06,07,11,12,13,14,15,16,17 | 23,35,26,56",
                          "00,01,02,03,04,05,06,07,11,12,13,14,15,16,17,22,23,24,25,26,27,35,45,55,56,57",
                          "X0"}) {
      f.rows.push_back({r});
    }
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"table-3", "T - X = {{0,0}}", {}, 13, "case D, T - X = {00}",
                   case_d([](PairSet r) { return r == PairSet::parse("00"); })};
    for (const auto& s : inside_x) f.rows.push_back({"00 | " + s});
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"table-4", "T - X = {{i,i}} for some i in I", {}, 27, "case D, T - X = {ii}",
                   case_d(diagonal_of_size(1))};
    auto& r = f.rows;
    add_group(r, "12", {"11", "33"});
    add_group(r, "12,13", {"11", "22", "44", "77"});
    add_group(r, "12,67", {"11", "33"});
    add_group(r, "25,36,47", {"22"});
    add_group(r, "12,13,14", {"11", "22"});
    add_group(r, "12,13,17", {"11", "22"});
    add_group(r, "12,16,26", {"11", "77"});
    add_group(r, "12,16,67", {"11", "22", "44"});
    add_group(r, "12,16,17,26", {"11", "22", "77"});
    add_group(r, "12,16,27,67", {"11", "44"});
    add_group(r, "12,16,17,26,27", {"11", "66"});
    add_group(r, "Lc12", {"33"});
    add_group(r, "P123", {"11"});
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"table-5", "T - X = {{i,i},{j,j}} for i, j in I distinct", {}, 41,
                   "case D, T - X = {ii,jj}", case_d(diagonal_of_size(2))};
    auto& r = f.rows;
    add_group(r, "12", {"11,22", "11,33", "33,44", "33,66"});
    add_group(r, "12,13", {"11,22", "11,44", "11,77", "22,33", "22,44", "22,77", "44,77"});
    add_group(r, "12,67", {"11,22", "11,33", "11,66", "33,44"});
    add_group(r, "25,36,47", {"22,33", "22,55"});
    add_group(r, "12,13,14", {"11,22", "22,33"});
    add_group(r, "12,13,17", {"11,22", "22,33"});
    add_group(r, "12,16,26", {"11,22", "11,77"});
    add_group(r, "12,16,67", {"11,22", "11,44", "11,66", "11,77", "22,44", "22,77"});
    add_group(r, "12,16,17,26", {"11,22", "11,77", "22,66", "22,77"});
    add_group(r, "12,16,27,67", {"11,22", "11,44", "11,77"});
    add_group(r, "12,16,17,26,27", {"11,22", "11,66", "66,77"});
    add_group(r, "Lc12", {"33,44"});
    add_group(r, "P123", {"11,22"});
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"table-6", "T - X = {{0,0},{0,i}} for i in I", {}, 7, "case D, T - X = {00,0i}",
                   case_d(zero_of_size(2))};
    auto& r = f.rows;
    add_group(r, "12", {"00,03"});
    add_group(r, "12,13", {"00,04", "00,07"});
    add_group(r, "12,67", {"00,03"});
    add_group(r, "12,16,26", {"00,07"});
    add_group(r, "12,16,67", {"00,04"});
    add_group(r, "12,16,27,67", {"00,04"});
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"table-7", "T - X = {{i,i},{j,j},{k,k}}, i, j, k generative", {}, 33,
                   "case D, T - X = three diagonal pairs over a generative triple",
                   case_d([](PairSet r) {
                     return is_diagonal(r) && r.size() == 3 && !is_line(diagonal_points(r));
                   })};
    auto& r = f.rows;
    add_group(r, "12", {"11,22,33", "11,33,44", "33,44,66"});
    add_group(r, "12,13", {"11,22,33", "11,22,44", "11,22,77", "22,33,44", "22,44,77"});
    add_group(r, "12,67", {"11,22,33", "11,22,66", "11,33,44", "11,33,77"});
    add_group(r, "25,36,47", {"22,33,44", "22,33,55"});
    add_group(r, "12,13,14", {"11,22,33", "22,33,44"});
    add_group(r, "12,13,17", {"11,22,33"});
    add_group(r, "12,16,26", {"11,22,66", "11,22,77"});
    add_group(r, "12,16,67", {"11,22,44", "11,22,66", "11,22,77", "11,44,66", "22,44,77"});
    add_group(r, "12,16,17,26", {"11,22,66", "11,22,77", "22,66,77"});
    add_group(r, "12,16,27,67", {"11,22,44", "11,22,66"});
    add_group(r, "12,16,17,26,27", {"11,22,66", "11,66,77"});
    add_group(r, "Lc12", {"33,44,66"});
    add_group(r, "P123", {"11,22,33"});
    // With S = {{1,2}} the rows cover J = {1,2,3}, {1,3,4} (3*4 = 1*2) and
    // {3,4,6}, but not J = {1,3,7}, where 3*7 = 2 is the other index of S.
    f.omissions = {{"11,33,77 | 12"}};
    f.omission_note =
        "for T n X = {{1,2}} the table lists J = {1,2,3}, {1,3,4}, {3,4,6} but omits J = {1,3,7}: "
        "one index of the pair plus two indices off the line l_12 whose product is the other index of the pair";
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"table-8", "T - X = {{i,i},{j,j},{i*j,i*j}} for i != j", {}, 8,
                   "case D, T - X = three diagonal pairs over a line",
                   case_d([](PairSet r) {
                     return is_diagonal(r) && r.size() == 3 && is_line(diagonal_points(r));
                   })};
    auto& r = f.rows;
    add_group(r, "12", {"11,33,66"});
    add_group(r, "12,13", {"11,44,77", "22,33,77"});
    add_group(r, "12,67", {"11,33,66"});
    add_group(r, "25,36,47", {"22,33,77"});
    add_group(r, "12,13,17", {"22,33,77"});
    add_group(r, "12,16,67", {"11,44,77"});
    add_group(r, "12,16,27,67", {"11,44,77"});
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"table-9", "T - X subset of X_F, |T - X| = 3", {}, 4, "case D, T - X = {00,0i,0j}",
                   case_d(zero_of_size(3))};
    auto& r = f.rows;
    add_group(r, "12", {"00,03,04", "00,03,07"});
    add_group(r, "12,13", {"00,04,07"});
    add_group(r, "12,67", {"00,03,04"});
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"table-10", "T - X = P_{0,i,i} for i in I", {}, 7, "case D, T - X = {00,0i,ii}",
                   case_d([](PairSet r) {
                     for (Index i = 1; i < kIndexCount; ++i) {
                       if (r == p_set(0, i, i)) return true;
                     }
                     return false;
                   })};
    auto& r = f.rows;
    add_group(r, "12", {"00,03,33"});
    add_group(r, "12,13", {"00,04,44", "00,07,77"});
    add_group(r, "12,67", {"00,03,33"});
    add_group(r, "12,16,26", {"00,07,77"});
    add_group(r, "12,16,67", {"00,04,44"});
    add_group(r, "12,16,27,67", {"00,04,44"});
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"table-11", "T - X = {{k,k} : k not in l} for l a line", {}, 13,
                   "case D, T - X = diagonal pairs over the complement of a line",
                   case_d([](PairSet r) {
                     return is_diagonal(r) && r.size() == 4 && !contains_line(diagonal_points(r));
                   })};
    auto& r = f.rows;
    add_group(r, "12", {"11,22,33,44", "33,44,66,77"});
    add_group(r, "12,13", {"11,22,33,44"});
    add_group(r, "12,67", {"11,22,33,44", "11,22,66,77"});
    add_group(r, "25,36,47", {"22,33,55,66"});
    add_group(r, "12,13,14", {"11,22,33,44"});
    add_group(r, "12,16,26", {"11,22,66,77"});
    add_group(r, "12,16,67", {"11,22,66,77"});
    add_group(r, "12,16,17,26", {"11,22,66,77"});
    add_group(r, "12,16,27,67", {"11,22,66,77"});
    add_group(r, "12,16,17,26,27", {"11,22,66,77"});
    add_group(r, "Lc12", {"33,44,66,77"});
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"table-12", "T - X = l_ij u {{k,k}}, for k not in l_ij", {}, 12,
                   "case D, T - X = diagonal pairs over a line plus one point",
                   case_d([](PairSet r) {
                     return is_diagonal(r) && r.size() == 4 && contains_line(diagonal_points(r));
                   })};
    auto& r = f.rows;
    add_group(r, "12", {"11,33,66,22", "11,33,66,77"});
    add_group(r, "12,13", {"22,33,77,11", "11,44,77,22", "22,33,77,44"});
    add_group(r, "12,67", {"11,33,66,22", "11,33,66,44"});
    add_group(r, "25,36,47", {"33,44,55,22"});
    add_group(r, "12,13,17", {"22,33,77,11"});
    add_group(r, "12,16,67", {"22,44,66,11", "11,44,77,22"});
    add_group(r, "12,16,27,67", {"22,44,66,11"});
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"prop-6.9", "If S and S'_J are generalised nice sets such that J has cardinal 3, then |S| = 1", {}, 2,
                   "case D, T - X = {00,0i,0j,0k}", case_d(zero_of_size(4))};
    f.rows = {{"00,03,04,07,12"}, {"00,01,02,05,12"}};
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"table-13", "T - X subset of X_E*, |T - X| = 5", {}, 8,
                   "case D, T - X = five diagonal pairs", case_d(diagonal_of_size(5))};
    auto& r = f.rows;
    add_group(r, "12", {"11,33,66,22,44", "33,66,11,44,77"});
    add_group(r, "12,13", {"11,44,77,22,33"});
    add_group(r, "12,67", {"11,33,66,22,44", "66,11,33,22,77"});
    add_group(r, "25,36,47", {"22,66,44,33,55"});
    add_group(r, "12,16,67", {"22,66,44,11,77"});
    add_group(r, "12,16,27,67", {"22,66,44,11,77"});
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"prop-6.11", "If S and S'_J are non-empty generalised nice sets such that J has cardinal 4, then |S| = 1", {}, 2,
                   "case D, T - X = {00} plus four zero pairs", case_d(zero_of_size(5))};
    f.rows = {{"00,03,04,06,07,12"}, {"00,01,02,03,05,12"}};
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"table-14", "T - X subset of X_E*, |T - X| = 6", {}, 3,
                   "case D, T - X = six diagonal pairs", case_d(diagonal_of_size(6))};
    auto& r = f.rows;
    add_group(r, "12", {"11,33,66,22,44,77"});
    add_group(r, "12,67", {"11,33,66,22,44,77"});
    add_group(r, "25,36,47", {"55,33,66,22,44,77"});
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"prop-6.13", "If S and S'_J are non-empty generalised nice sets such that J has cardinal 5, then |S| <= 2", {}, 4,
                   "case D, T - X = {00} plus five zero pairs", case_d(zero_of_size(6))};
    f.rows = {{"00,01,02,05,06,07,12"}, {"00,01,02,05,03,06,12"}, {"00,01,02,05,03,06,12,13"},
              {"00,01,02,05,06,07,12,67"}};
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"table-15", "T - X subset of X_F, |T - X| = 6", {}, 7,
                   "case D, T - X = {00} plus six zero pairs", case_d(zero_of_size(7))};
    auto& r = f.rows;
    add_group(r, "12", {"00,01,02,05,03,04,06"});
    add_group(r, "12,13", {"00,01,02,05,03,04,06", "00,01,02,05,03,07,06"});
    add_group(r, "12,67", {"00,01,02,05,03,06,07"});
    add_group(r, "12,16,26", {"00,01,02,05,03,04,06"});
    add_group(r, "12,16,67", {"00,01,02,05,03,06,07"});
    add_group(r, "12,16,27,67", {"00,01,02,05,03,06,07"});
    t.push_back(std::move(f));
  }
  {
    FixtureTable f{"cor-6.14", "For any generalised nice set S contained in X, S u X_F is a generalised nice set too", {}, 13,
                   "case D, T - X = X_F", case_d([](PairSet r) { return r == subset_family(Family::XF); })};
    for (const auto& s : inside_x) f.rows.push_back({"XF | " + s});
    t.push_back(std::move(f));
  }
  return t;
}

}  // namespace

PairSet FixtureRow::set() const {
  PairSet out;
  std::string_view rest = text;
  while (true) {
    const auto bar = rest.find('|');
    out |= named_set(trim(rest.substr(0, bar)));
    if (bar == std::string_view::npos) break;
    rest.remove_prefix(bar + 1);
  }
  return out;
}

const std::vector<FixtureTable>& fixture_tables() {
  static const std::vector<FixtureTable> tables = build_tables();
  return tables;
}

const FixtureTable& fixture(const std::string& id) {
  for (const auto& f : fixture_tables()) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("unknown fixture '" + id + "'");
}

CensusCounts counts_of(const Census& census) {
  CensusCounts c;
  c.total_gns = census.total;
  c.classes = census.classes.size();
  c.by_case = census.by_case;
  c.case_d_by_t_minus_x = census.case_d_by_t_minus_x;
  return c;
}

const CensusCounts& published_counts() {
  static const CensusCounts counts{
      0, 245, {{"EMPTY", 1}, {"A", 13}, {"B", 20}, {"C", 7}, {"D", 204}},
      {{1, 13 + 27}, {2, 41 + 7}, {3, 33 + 8 + 4 + 7}, {4, 13 + 12 + 2}, {5, 8 + 2}, {6, 3 + 4}, {7, 7}, {8, 13}}};
  return counts;
}

const std::vector<IndexTableRow>& index_table() {
  static const std::vector<IndexTableRow> rows = [] {
    const auto set = [](std::initializer_list<Index> m) { return IndexSet(m); };
    const IndexSet all = IndexSet::all();
    return std::vector<IndexTableRow>{
        {"12", set({1, 2, 5}), set({5})},
        {"12,13", set({1, 2, 3, 5, 6}), set({5, 6})},
        {"12,67", set({1, 2, 5, 6, 7}), set({5})},
        {"25,36,47", all, set({1})},
        {"12,13,14", all, set({5, 6, 7})},
        {"12,13,17", all, set({4, 5, 6})},
        {"12,16,26", set({1, 2, 3, 4, 5, 6}), set({3, 4, 5})},
        {"12,16,67", set({1, 2, 3, 5, 6, 7}), set({3, 5})},
        {"12,16,17,26", all, set({3, 4, 5})},
        {"12,16,27,67", set({1, 2, 3, 5, 6, 7}), set({3, 5})},
        {"12,16,17,26,27", all, set({3, 4, 5})},
        {"Lc12", all, set({1, 2, 5})},
        {"P123", all, set({4, 5, 6, 7})},
    };
  }();
  return rows;
}

}  // namespace gns
