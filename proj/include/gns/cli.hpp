#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 malformed input.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gns {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitMalformed = 2;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SelfcheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Property suites: group axioms, closure axioms, Burnside, completeness
/// certificate, structural-vs-lectic equality, structural criteria, and the
/// collineation search against its oracle on seeded random inputs.
std::vector<SelfcheckResult> run_selfcheck(std::uint64_t seed, unsigned jobs);

}  // namespace gns
