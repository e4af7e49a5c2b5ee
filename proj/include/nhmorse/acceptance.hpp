#pragma once

// The verification suite shared by the `verify` subcommand and the
// acceptance test binary. Each check is self-contained and deterministic.

#include <string>
#include <vector>

namespace nhmorse::acceptance {

struct CheckResult {
  std::string name;
  bool pass = false;
  double metric = 0.0;       // printed as max_rel_residual=
  std::string tolerance;     // printed as tol=
  std::string note;          // optional trailing detail
  double seconds = 0.0;
};

/// Names in suite order.
const std::vector<std::string>& check_names();

bool is_check(const std::string& name);

/// Runs one check; throws std::invalid_argument for an unknown name.
CheckResult run_check(const std::string& name);

std::vector<CheckResult> run_all();

/// "PASS|FAIL <name> max_rel_residual=<value> tol=<value>[ (note)]"
std::string format_line(const CheckResult& r);

}  // namespace nhmorse::acceptance
