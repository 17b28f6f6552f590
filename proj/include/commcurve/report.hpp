#pragma once

#include "commcurve/gaussian_rational.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace commcurve {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // empty when passing
};

/// Ordered checks; `bad_t` lists finite parameter values where a check
/// fails, when they are Q(i)-rational.
struct Report {
  std::vector<Check> checks;
  bool pass = false;
  std::vector<GaussianRational> bad_t;
  bool bad_at_infinity = false;

  void finish() {
    pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  }
};

}  // namespace commcurve
