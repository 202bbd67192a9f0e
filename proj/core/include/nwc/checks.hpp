#pragma once

// Named invariant suites behind the `check` command: group laws, spinor
// identities, unitarity, generator consistency, kernel Hermiticity and the
// charge oracle. Each suite reports its measured defect against a pinned
// tolerance.

#include <cstdint>
#include <string>
#include <vector>

namespace nwc {

struct CheckConfig {
  std::uint64_t seed = 12345;
  int nodes = 16;       // nodes per axis for quadrature-backed suites
  int nodes_fine = 24;  // refinement level for the gate
  double sigma = 0.5;
  int samples = 200;  // random draws for algebraic suites
};

struct CheckResult {
  std::string name;
  double defect = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

std::vector<CheckResult> run_all_checks(const CheckConfig& cfg);

}  // namespace nwc
