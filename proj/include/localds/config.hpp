#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace localds {

// Radii and limits for the cut-based pipeline.  The true class-dependent
// radii are not computable from the input, so they are configuration with
// fixed defaults.
struct AlgorithmConfig {
  int r1 = 7;         // radius for local 1-cut detection
  int r2 = 13;        // radius for local 2-cut / interesting-vertex detection
  int diam_cap = 40;  // largest component diameter the exact phase will gather
  std::uint64_t seed = 0;

  void validate() const {
    if (r1 < 1) throw std::invalid_argument("config: r1 must be >= 1");
    if (r2 < 2) throw std::invalid_argument("config: r2 must be >= 2");
    if (diam_cap < 1) throw std::invalid_argument("config: diam_cap must be >= 1");
  }

  // Worst-case view radius of the whole pipeline: the cut programs need
  // 2r+1, the component phase adds diam_cap+2 around leaders, plus one
  // round to flood each leader's verdict back over the component fringe.
  int round_budget() const { return 2 * std::max(r1, r2) + diam_cap + 4; }
};

}  // namespace localds
