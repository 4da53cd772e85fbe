#include "gns/cli.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include "CLI11.hpp"
#include "gns/collineation_search.hpp"
#include "gns/enumeration.hpp"
#include "gns/group.hpp"
#include "gns/kernel.hpp"
#include "gns/report.hpp"

namespace gns {

namespace {

std::string literal(PairSet s) { return s.empty() ? "{}" : s.to_string(); }

int write_output(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return kExitMalformed;
  }
  file << text;
  return kExitOk;
}

int cmd_verify(const std::string& text, std::ostream& out) {
  const PairSet t = PairSet::parse(text);
  const auto v = find_violation(t);
  if (!v) {
    out << literal(t) << " is a generalised nice set\n";
    return kExitOk;
  }
  out << literal(t) << " is not a generalised nice set: " << describe_violation(t, *v) << '\n';
  return kExitFailure;
}

int cmd_case(const std::string& text, std::ostream& out, std::ostream& err) {
  const PairSet t = PairSet::parse(text);
  if (const auto v = find_violation(t)) {
    err << literal(t) << " is not a generalised nice set: " << describe_violation(t, *v) << '\n';
    return kExitFailure;
  }
  out << to_string(decompose_case(t)) << '\n';
  return kExitOk;
}

int cmd_orbit(const std::string& text, std::ostream& out) {
  const PairSet t = PairSet::parse(text);
  const OrbitStabilizer os = orbit_and_stabilizer(t);
  out << "orbit_size: " << os.orbit.size() << '\n'
      << "stabilizer_size: " << os.stabilizer.size() << '\n'
      << "canonical: " << literal(canonical_form(t)) << '\n';
  return kExitOk;
}

int cmd_collineations(const std::string& a, const std::string& b, std::ostream& out) {
  const PairSet s = PairSet::parse(a);
  const PairSet t = PairSet::parse(b);
  const auto found = find_collineations(s, t);
  if (found.empty()) {
    out << "no collineation maps " << literal(s) << " onto " << literal(t) << '\n';
    return kExitFailure;
  }
  for (const auto& c : found) out << c.to_string() << '\n';
  return kExitOk;
}

int cmd_enumerate(const std::string& format, const std::string& path, unsigned jobs, std::ostream& out,
                  std::ostream& err) {
  const Census census = classify_orbits(enumerate_gns(jobs));
  std::string text;
  if (format == "json") {
    text = census_to_json(census);
  } else if (format == "csv") {
    text = census_to_csv(census);
  } else {
    text = census_to_markdown(census);
  }
  return write_output(text, path, out, err);
}

int cmd_check_paper(const std::string& format, const std::string& path, unsigned jobs, std::ostream& out,
                    std::ostream& err) {
  const Census census = classify_orbits(enumerate_gns(jobs));
  const VerificationReport report = verify_paper(census);
  const std::string text = format == "json" ? render_json(report) : render_text(report);
  const int written = write_output(text, path, out, err);
  if (written != kExitOk) return written;
  if (!path.empty()) out << (report.passed() ? "OK" : "FAILED") << ": " << report.computed.classes << " classes\n";
  return report.passed() ? kExitOk : kExitFailure;
}

int cmd_selfcheck(std::uint64_t seed, unsigned jobs, std::ostream& out) {
  bool all = true;
  for (const auto& r : run_selfcheck(seed, jobs)) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << '\n';
    all = all && r.passed;
  }
  out << (all ? "selfcheck passed" : "selfcheck FAILED") << " (seed " << seed << ")\n";
  return all ? kExitOk : kExitFailure;
}

// --- selfcheck suites -------------------------------------------------------

PairSet random_set(std::mt19937_64& rng) {
  // Sparse sets exercise the interesting part of the lattice; mix densities.
  std::uniform_int_distribution<int> density(1, 12);
  const int d = density(rng);
  std::uint64_t m = 0;
  for (int p = 0; p < kPairCount; ++p) {
    if (static_cast<int>(rng() % 36) < d) m |= std::uint64_t{1} << p;
  }
  return PairSet::from_mask(m);
}

SelfcheckResult check_group() {
  const auto& g = CollineationGroup::instance();
  std::set<Collineation> elements(g.elements().begin(), g.elements().end());
  bool ok = g.size() == 168 && elements.size() == 168;
  for (const auto& a : g.elements()) {
    ok = ok && elements.count(a.inverse()) && compose(a, a.inverse()) == Collineation::identity();
    for (const auto& b : g.elements()) ok = ok && elements.count(compose(a, b)) != 0;
    for (const Line& l : lines()) {
      ok = ok && std::find(lines().begin(), lines().end(), a.apply(l)) != lines().end();
    }
  }
  return {"group: 168 distinct elements, closed under composition and inverse, lines preserved", ok, ""};
}

SelfcheckResult check_closure(std::mt19937_64& rng) {
  const auto& g = CollineationGroup::instance();
  for (int n = 0; n < 2000; ++n) {
    const PairSet s = random_set(rng);
    const PairSet bigger = s | random_set(rng);
    const PairSet c = closure(s);
    const auto& sigma = g[rng() % g.size()];
    const bool ok = s.is_subset_of(c) && closure(c) == c && is_gns(c) && c.is_subset_of(closure(bigger)) &&
                    (is_gns(s) == (c == s)) && apply_to_set(sigma, c) == closure(apply_to_set(sigma, s));
    if (!ok) return {"closure axioms", false, "fails for " + literal(s)};
  }
  return {"closure axioms (extensive, idempotent, monotone, equivariant) on 2000 random sets", true, ""};
}

SelfcheckResult check_criteria(const std::vector<PairSet>& family) {
  const PairSet x = subset_family(Family::X);
  std::size_t checks = 0;
  for (PairSet s : family) {
    if (!s.is_subset_of(x)) continue;
    for (std::uint8_t m = 0; m < 128; ++m) {
      const IndexSet j = IndexSet::from_mask(static_cast<std::uint8_t>(m << 1));
      if (is_gns(augment_diag(s, j)) != admissible_diag(s, j) ||
          is_gns(augment_zero(s, j)) != admissible_zero(s, j)) {
        return {"structural criteria", false, "S = " + literal(s) + ", J = " + j.to_string()};
      }
      checks += 2;
    }
    for (Index i = 1; i < kIndexCount; ++i) {
      if (is_gns(augment_p0ii(s, i)) != admissible_p0ii(s, i)) {
        return {"structural criteria", false, "S = " + literal(s) + ", i = " + std::to_string(i)};
      }
      ++checks;
    }
  }
  return {"structural criteria for diagonal, zero and P_{0ii} augmentations", true,
          std::to_string(checks) + " cases"};
}

SelfcheckResult check_search(const std::vector<PairSet>& family, std::mt19937_64& rng) {
  const auto& g = CollineationGroup::instance();
  for (int n = 0; n < 3000; ++n) {
    const PairSet s = family[rng() % family.size()];
    const PairSet t = n % 2 == 0 ? family[rng() % family.size()] : g.apply(rng() % g.size(), s);
    if (find_collineations(s, t) != brute_force_collineations(s, t)) {
      return {"collineation search", false, literal(s) + " -> " + literal(t)};
    }
  }
  return {"collineation search agrees with brute force on 3000 random GNS pairs", true, ""};
}

}  // namespace

std::vector<SelfcheckResult> run_selfcheck(std::uint64_t seed, unsigned jobs) {
  std::mt19937_64 rng(seed);
  std::vector<SelfcheckResult> out;
  out.push_back(check_group());
  out.push_back(check_closure(rng));

  const std::vector<PairSet> family = enumerate_gns(jobs);
  const auto failure = completeness_failure(family);
  out.push_back({"completeness certificate", !failure, failure.value_or(std::to_string(family.size()) + " GNS")});
  out.push_back({"lectic enumeration is strictly increasing", std::is_sorted(family.begin(), family.end()) &&
                     std::adjacent_find(family.begin(), family.end()) == family.end(), ""});
  out.push_back({"enumeration independent of worker count", enumerate_gns(1) == family, ""});
  out.push_back({"structural reconstruction equals lectic enumeration", structural_enumerate() == family, ""});

  const Census census = classify_orbits(family);
  const auto burnside = burnside_check(family).orbit_count();
  out.push_back({"Burnside count equals class count (GNS)", burnside && *burnside == census.classes.size(),
                 std::to_string(census.classes.size()) + " classes"});
  const auto nice = enumerate_nice();
  const auto nice_burnside = burnside_check(nice).orbit_count();
  const std::size_t nice_classes = classify_orbits(nice).classes.size();
  out.push_back({"Burnside count equals class count (nice sets)", nice_burnside && *nice_burnside == nice_classes,
                 std::to_string(nice.size()) + " nice sets, " + std::to_string(nice_classes) + " classes"});
  out.push_back(check_criteria(family));
  out.push_back(check_search(family, rng));
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classification engine for generalised nice sets over the extended Fano plane", "gns_cli"};
  app.require_subcommand(1);

  std::string a, b, format = "json", path;
  unsigned jobs = 1;
  std::uint64_t seed = 20240601;

  auto* verify = app.add_subcommand("verify", "Check whether a pair-set is a GNS");
  verify->add_option("pairset", a, "Pair-set literal, e.g. 00,01,11")->required();
  auto* close = app.add_subcommand("close", "Print the smallest GNS containing a pair-set");
  close->add_option("pairset", a, "Pair-set literal")->required();
  auto* kase = app.add_subcommand("case", "Print the case tag (EMPTY, A, B, C, D) of a GNS");
  kase->add_option("pairset", a, "Pair-set literal")->required();
  auto* orbit = app.add_subcommand("orbit", "Print orbit size, stabilizer size and canonical form");
  orbit->add_option("pairset", a, "Pair-set literal")->required();
  auto* coll = app.add_subcommand("collineations", "List every collineation mapping S onto T");
  coll->add_option("S", a, "Source pair-set")->required();
  coll->add_option("T", b, "Target pair-set")->required();
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all GNS and print the class census");
  enumerate->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
  enumerate->add_option("--out", path, "Write to this file instead of stdout");
  enumerate->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  auto* check = app.add_subcommand("check-paper", "Verify every classification table against the census");
  std::string check_format = "text";
  check->add_option("--format", check_format, "Report format")->check(CLI::IsMember({"text", "json"}));
  check->add_option("--out", path, "Write the report to this file");
  check->add_option("--jobs", jobs, "Worker threads (0 = all cores)");
  auto* self = app.add_subcommand("selfcheck", "Run the property suites");
  self->add_option("--seed", seed, "Seed for randomized checks");
  self->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitMalformed;
  }

  try {
    if (*verify) return cmd_verify(a, out);
    if (*close) {
      out << literal(closure(PairSet::parse(a))) << '\n';
      return kExitOk;
    }
    if (*kase) return cmd_case(a, out, err);
    if (*orbit) return cmd_orbit(a, out);
    if (*coll) return cmd_collineations(a, b, out);
    if (*enumerate) return cmd_enumerate(format, path, jobs, out, err);
    if (*check) return cmd_check_paper(check_format, path, jobs, out, err);
    if (*self) return cmd_selfcheck(seed, jobs, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace gns
