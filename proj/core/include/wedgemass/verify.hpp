#ifndef WEDGEMASS_VERIFY_HPP_
#define WEDGEMASS_VERIFY_HPP_

#include <string>
#include <vector>

namespace wedgemass {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // values behind the verdict, or the failing cases
};

/// Runs the full invariant suite (the nine checks behind the `verify`
/// subcommand) and returns one result per check. Tolerances are fixed here.
std::vector<CheckResult> run_verification();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace wedgemass

#endif  // WEDGEMASS_VERIFY_HPP_
