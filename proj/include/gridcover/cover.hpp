#pragma once

#include <map>
#include <optional>

#include "gridcover/geometry.hpp"
#include "gridcover/lp.hpp"

namespace gridcover {

// One (grid, family, k) problem. Families are always built from the same grid
// object by enumerate_lines or restricted_lines, so incidence indices match
// grid.nonzero_points().
struct CoverInstance {
  Grid grid;
  LineFamily family;
  long k = 1;
};

// Multiset of lines with positive multiplicities.
struct Cover {
  std::map<Line, long> entries;
  long k = 1;

  long size() const {
    long s = 0;
    for (const auto& [ln, mult] : entries) s += mult;
    return s;
  }
};

// Fractional relaxation: one variable per family line, coverage >= 1 at every
// nonzero point, minimize total weight.
LinearProgram build_primal(const CoverInstance& inst);

// Point-weighting side, phrased as a minimization: one variable per nonzero
// point, per-line weight <= 1 encoded as negated rows, objective negated.
// The optimum of build_dual is minus the optimum of build_primal.
LinearProgram build_dual(const CoverInstance& inst);

// Common LP optimum of the instance (k plays no role).
Rat phi(const CoverInstance& inst);

struct IlpOptions {
  long node_budget = 1'000'000;
  double time_budget_secs = 60.0;
};

struct IlpResult {
  long optimum = 0;       // best cover size found
  Cover cover;            // a cover attaining optimum
  bool optimal = false;   // proved optimal within budget
  long lower_bound = 0;   // valid even when not optimal
  long nodes_explored = 0;
  Rat lp_root;            // fractional optimum of the family (per unit k)
};

// Exact branch and bound over the integer program, DFS, branching on the
// variable whose fractional part is closest to 1/2 (ties lowest index),
// upper branch first. warm_start must be a valid k-cover inside the family.
IlpResult solve_ilp(const CoverInstance& inst,
                    const std::optional<Cover>& warm_start = std::nullopt,
                    const IlpOptions& opts = {});

// Ceiling of k times each positive LP weight; always a k-cover when the
// solution solves build_primal of the same instance.
Cover round_lp_to_cover(const CoverInstance& inst, const LPSolution& lp,
                        long k);

struct ReferenceBounds {
  long trivial_lower;  // (n-1) + (m-1) + k - 1
  long trivial_upper;  // k((n-1) + (m-1))
  long ball_serra;     // (n-1) + (m-1) + (k-1) max(n-1, m-1)
};

ReferenceBounds reference_bounds(const Grid& g, long k);

}  // namespace gridcover
