#pragma once

#include <optional>
#include <vector>

#include "gridcover/rational.hpp"

namespace gridcover {

// min objective . x  subject to  rows[i] . x >= rhs[i],  x >= 0, and
// x[j] <= *upper_bounds[j] where set. upper_bounds is empty or one entry per
// variable.
struct LinearProgram {
  std::vector<Rat> objective;
  std::vector<std::vector<Rat>> rows;
  std::vector<Rat> rhs;
  std::vector<std::optional<Rat>> upper_bounds;
};

enum class LPStatus { optimal, infeasible, unbounded };

struct LPSolution {
  LPStatus status = LPStatus::infeasible;
  Rat value;
  std::vector<Rat> primal;
  // Row multipliers: one per input row, then one per finite upper bound in
  // ascending variable order. Certifies optimality together with primal.
  std::vector<Rat> dual;
};

// Exact two-phase primal simplex over Rat. Deterministic: Dantzig pivoting
// with lowest-index ties, falling back to Bland's rule during degenerate
// stalls, so the method terminates on every input.
LPSolution solve_lp(const LinearProgram& p);

// Re-derives everything the solution claims: primal feasibility, dual
// feasibility (A^T y <= c, y >= 0 with bound rows expanded the same way
// solve_lp expands them), and exact equality of the two objectives. False on
// any mismatch; only meaningful for status == optimal.
bool verify_solution(const LinearProgram& p, const LPSolution& s);

}  // namespace gridcover
