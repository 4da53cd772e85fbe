#include "gns/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gns/collineation_search.hpp"
#include "json.hpp"

namespace gns {

namespace {

using Json = nlohmann::ordered_json;

std::string literal(PairSet s) { return s.empty() ? "{}" : s.to_string(); }

std::string case_name(const std::optional<CaseTag>& tag) { return tag ? to_string(*tag) : "-"; }

const OrbitClass* find_class(const Census& census, PairSet canonical) {
  for (const auto& c : census.classes) {
    if (c.canonical == canonical) return &c;
  }
  return nullptr;
}

std::string triple_name(const Triple& v) {
  return "P_{{" + std::to_string(v.i) + "," + std::to_string(v.j) + "," + std::to_string(v.k) + "}}";
}

}  // namespace

std::string describe_violation(PairSet t, const Triple& v) {
  const PairSet p = p_set(v.i, v.j, v.k);
  std::ostringstream out;
  out << Pair::of(v.i, v.j).to_string() << " and " << Pair::of(star(v.i, v.j), v.k).to_string()
      << " are present but " << triple_name(v) << " = " << p.to_string()
      << " is not contained (missing " << (p - t).to_string() << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// Fixtures

bool FixtureVerdict::gns_ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const RowVerdict& r) { return r.gns; });
}

bool FixtureVerdict::complete_ok() const {
  const bool rows_in_scope =
      std::all_of(rows.begin(), rows.end(), [](const RowVerdict& r) { return r.in_scope; });
  return rows_in_scope && missing.empty() && omission_problems.empty();
}

FixtureVerdict verify_fixture(const FixtureTable& f, const Census& census) {
  FixtureVerdict v;
  v.id = f.id;
  v.claimed = f.claimed;
  v.row_count = f.rows.size();
  v.omission_note = f.omission_note;

  std::set<PairSet> slice;
  for (const auto& c : census.classes) {
    if (f.in_scope(c)) slice.insert(c.canonical);
  }
  v.slice_count = slice.size();

  std::set<PairSet> covered;
  for (const auto& row : f.rows) {
    RowVerdict r;
    r.text = row.text;
    r.set = row.set();
    r.canonical = canonical_form(r.set);
    r.violation = find_violation(r.set);
    r.gns = !r.violation.has_value();
    r.in_scope = slice.count(r.canonical) != 0;
    covered.insert(r.canonical);
    v.rows.push_back(r);
  }
  for (std::size_t a = 0; a < v.rows.size(); ++a) {
    for (std::size_t b = a + 1; b < v.rows.size(); ++b) {
      const auto witnesses = find_collineations(v.rows[a].set, v.rows[b].set);
      if (!witnesses.empty()) v.duplicates.push_back({a, b, witnesses.front()});
    }
  }
  for (const auto& row : f.omissions) {
    const PairSet s = row.set();
    const PairSet canonical = canonical_form(s);
    if (!is_gns(s)) {
      v.omission_problems.push_back(row.text + " is not a GNS");
    } else if (slice.count(canonical) == 0) {
      v.omission_problems.push_back(row.text + " is outside the table's scope");
    } else if (covered.count(canonical) != 0) {
      v.omission_problems.push_back(row.text + " is collinear to a listed row");
    } else {
      v.confirmed_omissions.push_back(canonical);
      covered.insert(canonical);
    }
  }
  for (PairSet s : slice) {
    if (covered.count(s) == 0) v.missing.push_back(s);
  }
  return v;
}

std::vector<IndexRowVerdict> verify_index_table() {
  std::vector<IndexRowVerdict> out;
  for (const auto& row : index_table()) {
    const PairSet s = FixtureRow{row.s}.set();
    out.push_back({row.s, row.printed_i, row.printed_j, i_set(s), j_set(s)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Whole report

const CensusCounts& golden_counts() {
  static const CensusCounts counts{
      16147, 246, {{"EMPTY", 1}, {"A", 13}, {"B", 20}, {"C", 7}, {"D", 205}},
      {{1, 40}, {2, 48}, {3, 53}, {4, 27}, {5, 10}, {6, 7}, {7, 7}, {8, 13}}};
  return counts;
}

bool VerificationReport::passed() const {
  const bool fixtures_ok =
      std::all_of(fixtures.begin(), fixtures.end(), [](const FixtureVerdict& f) { return f.passed(); });
  const bool index_ok =
      std::all_of(index_rows.begin(), index_rows.end(), [](const IndexRowVerdict& r) { return r.passed(); });
  const bool golden_ok =
      std::all_of(golden.begin(), golden.end(), [](const CountCheck& c) { return c.passed(); });
  return fixtures_ok && index_ok && golden_ok && published_reconciled && scopes_partition;
}

VerificationReport verify_paper(const Census& census) {
  VerificationReport r;
  r.computed = counts_of(census);
  for (const auto& f : fixture_tables()) r.fixtures.push_back(verify_fixture(f, census));
  r.index_rows = verify_index_table();

  const CensusCounts& g = golden_counts();
  r.golden.push_back({"labelled GNS", g.total_gns, r.computed.total_gns});
  r.golden.push_back({"classes", g.classes, r.computed.classes});
  for (const auto& [name, n] : g.by_case) {
    const auto it = r.computed.by_case.find(name);
    r.golden.push_back({"case " + name, n, it == r.computed.by_case.end() ? 0 : it->second});
  }
  for (const auto& [t, n] : g.case_d_by_t_minus_x) {
    const auto it = r.computed.case_d_by_t_minus_x.find(t);
    r.golden.push_back({"case D, |T-X|=" + std::to_string(t), n,
                        it == r.computed.case_d_by_t_minus_x.end() ? 0 : it->second});
  }

  // Published counts, corrected by verified omissions, must equal the census.
  CensusCounts corrected = published_counts();
  std::vector<std::string> omission_lines;
  for (const auto& f : r.fixtures) {
    for (PairSet s : f.confirmed_omissions) {
      const OrbitClass* c = find_class(census, s);
      if (c == nullptr || !c->case_tag) continue;
      ++corrected.classes;
      ++corrected.by_case[to_string(*c->case_tag)];
      if (*c->case_tag == CaseTag::D) ++corrected.case_d_by_t_minus_x[c->t_minus_x];
      omission_lines.push_back(f.id + " omits the class of " + s.to_string() + " (case " +
                               to_string(*c->case_tag) + ", |T-X|=" + std::to_string(c->t_minus_x) +
                               "): " + f.omission_note);
    }
  }
  corrected.total_gns = r.computed.total_gns;
  r.published_reconciled = corrected == r.computed;

  // Every class lies in exactly one fixture scope; the empty set in two.
  r.scopes_partition = true;
  for (const auto& c : census.classes) {
    std::size_t hits = 0;
    for (const auto& f : fixture_tables()) hits += f.in_scope(c) ? 1 : 0;
    const std::size_t expected = c.case_tag && *c.case_tag == CaseTag::Empty ? 2 : 1;
    if (hits != expected) r.scopes_partition = false;
  }

  // Discrepancy notes.
  const CensusCounts& pub = published_counts();
  auto& d = r.discrepancies;
  if (pub.classes != r.computed.classes) {
    d.push_back("the census has " + std::to_string(r.computed.classes) +
                " classes; the published total is " + std::to_string(pub.classes));
  }
  for (const auto& [name, n] : pub.by_case) {
    const std::size_t got = r.computed.by_case.count(name) ? r.computed.by_case.at(name) : 0;
    if (got != n) {
      d.push_back("case " + name + ": census " + std::to_string(got) + ", published " + std::to_string(n));
    }
  }
  for (const auto& [t, n] : pub.case_d_by_t_minus_x) {
    const std::size_t got =
        r.computed.case_d_by_t_minus_x.count(t) ? r.computed.case_d_by_t_minus_x.at(t) : 0;
    if (got != n) {
      d.push_back("case D with |T-X|=" + std::to_string(t) + ": census " + std::to_string(got) +
                  ", published " + std::to_string(n));
    }
  }
  d.insert(d.end(), omission_lines.begin(), omission_lines.end());
  for (const auto& f : r.fixtures) {
    if (f.claimed != f.slice_count) {
      d.push_back(f.id + " states " + std::to_string(f.claimed) + " classes and lists " +
                  std::to_string(f.row_count) + " rows; the census slice has " +
                  std::to_string(f.slice_count) + " classes");
    } else if (f.claimed != f.row_count) {
      d.push_back(f.id + " states " + std::to_string(f.claimed) + " classes but lists " +
                  std::to_string(f.row_count) + " rows");
    }
  }
  const std::size_t case_c = r.computed.by_case.count("C") ? r.computed.by_case.at("C") : 0;
  const std::size_t thm_claim = fixture("thm-5.5").claimed;
  const std::size_t list_claim = pub.by_case.at("C");
  if (thm_claim != list_claim) {
    d.push_back("case C: the census has " + std::to_string(case_c) + " classes; \"There are " +
                std::to_string(thm_claim) + " generalised nice sets\" (thm-5.5) is " +
                (thm_claim == case_c ? "confirmed" : "contradicted") + ", \"" + std::to_string(list_claim) +
                " such that T n X is not generalised nice\" (conclusion) is " +
                (list_claim == case_c ? "confirmed" : "contradicted"));
  }
  const std::size_t empty = r.computed.by_case.count("EMPTY") ? r.computed.by_case.at("EMPTY") : 0;
  const std::size_t inside = r.computed.by_case.count("A") ? r.computed.by_case.at("A") : 0;
  d.push_back("the empty set: cor-3.2 counts it among its " + std::to_string(fixture("cor-3.2").claimed) +
              " classes and the conclusion lists it separately; census EMPTY " + std::to_string(empty) +
              " + A " + std::to_string(inside) + " = " + std::to_string(empty + inside));
  return r;
}

std::string render_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "census: " << r.computed.classes << " classes, " << r.computed.total_gns << " GNS in total\n";
  out << "  by case:";
  for (const auto& [name, n] : r.computed.by_case) out << ' ' << name << '=' << n;
  out << "\n  case D by |T-X|:";
  for (const auto& [t, n] : r.computed.case_d_by_t_minus_x) out << ' ' << t << '=' << n;
  out << "\n\nfixtures:\n";
  for (const auto& f : r.fixtures) {
    out << "  " << (f.passed() ? "PASS" : "FAIL") << ' ' << f.id << ": " << f.row_count << " rows, slice "
        << f.slice_count << ", claimed " << f.claimed << (f.gns_ok() ? "" : " [non-GNS row]")
        << (f.distinct_ok() ? "" : " [collinear rows]") << (f.complete_ok() ? "" : " [incomplete]");
    if (!f.confirmed_omissions.empty()) out << " (" << f.confirmed_omissions.size() << " documented omission)";
    out << '\n';
    for (const auto& row : f.rows) {
      if (!row.gns) out << "      row " << row.text << ": " << describe_violation(row.set, *row.violation) << '\n';
      if (!row.in_scope) out << "      row " << row.text << ": outside the table's census slice\n";
    }
    for (const auto& dup : f.duplicates) {
      out << "      rows " << f.rows[dup.first].text << " and " << f.rows[dup.second].text
          << " are collinear via " << dup.witness.to_string() << '\n';
    }
    for (PairSet s : f.missing) out << "      missing class " << literal(s) << '\n';
    for (const auto& p : f.omission_problems) out << "      documented omission rejected: " << p << '\n';
  }
  const bool index_ok = std::all_of(r.index_rows.begin(), r.index_rows.end(),
                                    [](const IndexRowVerdict& x) { return x.passed(); });
  out << "  " << (index_ok ? "PASS" : "FAIL") << " table-2: " << r.index_rows.size() << " rows of I_S, J_S\n";
  for (const auto& row : r.index_rows) {
    if (!row.passed()) {
      out << "      " << row.s << ": printed " << row.printed_i.to_string() << ' ' << row.printed_j.to_string()
          << ", computed " << row.computed_i.to_string() << ' ' << row.computed_j.to_string() << '\n';
    }
  }
  out << "\ngolden counts:\n";
  for (const auto& c : r.golden) {
    out << "  " << (c.passed() ? "PASS" : "FAIL") << ' ' << c.name << ": " << c.actual;
    if (!c.passed()) out << " (expected " << c.expected << ")";
    out << '\n';
  }
  out << "  " << (r.published_reconciled ? "PASS" : "FAIL")
      << " published counts + documented omissions = census\n";
  out << "  " << (r.scopes_partition ? "PASS" : "FAIL") << " fixture scopes partition the census\n";
  out << "\ndiscrepancies:\n";
  for (const auto& d : r.discrepancies) out << "  - " << d << '\n';
  std::size_t omitted = 0;
  for (const auto& f : r.fixtures) omitted += f.confirmed_omissions.size();
  out << '\n' << (r.passed() ? "OK" : "FAILED") << ": " << r.computed.classes << " classes (published "
      << published_counts().classes << " classes + " << omitted << " documented omission"
      << (omitted == 1 ? "" : "s") << ")\n";
  return out.str();
}

std::string render_json(const VerificationReport& r) {
  Json j;
  j["passed"] = r.passed();
  Json census;
  census["total_gns"] = r.computed.total_gns;
  census["classes"] = r.computed.classes;
  census["by_case"] = r.computed.by_case;
  Json by_t = Json::object();
  for (const auto& [t, n] : r.computed.case_d_by_t_minus_x) by_t[std::to_string(t)] = n;
  census["case_d_by_t_minus_x"] = by_t;
  j["census"] = census;
  Json fixtures = Json::array();
  for (const auto& f : r.fixtures) {
    Json jf;
    jf["id"] = f.id;
    jf["passed"] = f.passed();
    jf["gns_ok"] = f.gns_ok();
    jf["distinct_ok"] = f.distinct_ok();
    jf["complete_ok"] = f.complete_ok();
    jf["claimed"] = f.claimed;
    jf["rows"] = f.row_count;
    jf["slice"] = f.slice_count;
    Json failures = Json::array();
    for (const auto& row : f.rows) {
      if (!row.gns) failures.push_back({{"row", row.text}, {"violation", triple_name(*row.violation)}});
      if (!row.in_scope) failures.push_back({{"row", row.text}, {"problem", "outside scope"}});
    }
    for (const auto& dup : f.duplicates) {
      failures.push_back({{"rows", {f.rows[dup.first].text, f.rows[dup.second].text}},
                          {"collineation", dup.witness.to_string()}});
    }
    for (PairSet s : f.missing) failures.push_back({{"missing", literal(s)}});
    for (const auto& p : f.omission_problems) failures.push_back({{"omission_rejected", p}});
    jf["failures"] = failures;
    Json omissions = Json::array();
    for (PairSet s : f.confirmed_omissions) omissions.push_back(s.to_string());
    jf["documented_omissions"] = omissions;
    fixtures.push_back(jf);
  }
  j["fixtures"] = fixtures;
  Json index_rows = Json::array();
  for (const auto& row : r.index_rows) {
    index_rows.push_back({{"S", row.s},
                          {"I_S", row.computed_i.to_string()},
                          {"J_S", row.computed_j.to_string()},
                          {"passed", row.passed()}});
  }
  j["table-2"] = index_rows;
  Json golden = Json::array();
  for (const auto& c : r.golden) {
    golden.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed()}});
  }
  j["golden"] = golden;
  j["published_reconciled"] = r.published_reconciled;
  j["scopes_partition"] = r.scopes_partition;
  j["discrepancies"] = r.discrepancies;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Census renderings

std::string census_to_json(const Census& census) {
  Json j;
  j["total_gns"] = census.total;
  Json classes = Json::array();
  for (const auto& c : census.classes) {
    Json jc;
    jc["canonical"] = c.canonical.to_string();
    jc["orbit_size"] = c.orbit_size;
    jc["stabilizer_size"] = c.stabilizer_size;
    jc["cardinality"] = c.cardinality;
    jc["case"] = c.case_tag ? Json(to_string(*c.case_tag)) : Json(nullptr);
    jc["t_minus_x"] = c.t_minus_x;
    classes.push_back(jc);
  }
  j["classes"] = classes;
  return j.dump(2) + "\n";
}

std::string census_to_csv(const Census& census) {
  std::ostringstream out;
  out << "canonical,orbit_size,stabilizer_size,cardinality,case,t_minus_x\n";
  for (const auto& c : census.classes) {
    out << '"' << c.canonical.to_string() << "\"," << c.orbit_size << ',' << c.stabilizer_size << ','
        << c.cardinality << ',' << (c.case_tag ? to_string(*c.case_tag) : "") << ',' << c.t_minus_x << '\n';
  }
  return out.str();
}

std::string census_to_markdown(const Census& census) {
  std::ostringstream out;
  out << "| canonical | orbit_size | stabilizer_size | cardinality | case | t_minus_x |\n";
  out << "|---|---:|---:|---:|---|---:|\n";
  for (const auto& c : census.classes) {
    out << "| " << literal(c.canonical) << " | " << c.orbit_size << " | " << c.stabilizer_size << " | "
        << c.cardinality << " | " << case_name(c.case_tag) << " | " << c.t_minus_x << " |\n";
  }
  out << "\n" << census.classes.size() << " classes, " << census.total << " sets in total\n";
  return out.str();
}

}  // namespace gns
