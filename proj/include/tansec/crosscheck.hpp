#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tansec/formulas.hpp"

namespace tansec {

struct CheckCounter {
  std::string name;
  long checked = 0;
  long failed = 0;
};

struct Mismatch {
  std::string name;
  int n = 0;
  int k = 0;
  std::string expected;
  std::string got;
};

struct CrossCheckReport {
  int n_max = 0;
  std::vector<CheckCounter> counters;
  std::optional<Mismatch> first_mismatch;

  bool pass() const;
  long total_checked() const;
  long total_failed() const;
};

// Runs every requested tangent method against the triangle recurrence on
// all cells 1 <= k <= n <= n_max, the Cauchy product against the secant
// triangle on 0 <= k <= n, the definitional series oracle against all
// three triangles on 0 <= k <= n, both row-sum identities for n = 1..n_max,
// and the tan-power series identity at truncation order n + 15 for
// n = 1..n_max. Methods defaults to everything when empty; Recurrence is
// the reference and is never a counter of its own.
CrossCheckReport run_crosscheck(int n_max, std::vector<MethodTag> methods = {});

}  // namespace tansec
