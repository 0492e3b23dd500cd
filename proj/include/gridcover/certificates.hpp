#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridcover/geometry.hpp"

namespace gridcover {

// Nonnegative point weights, dense over grid.nonzero_points() in that order.
// Feasible against a family when no line collects weight above 1; the total
// of a feasible weighting lower-bounds the fractional cover optimum.
struct Weighting {
  std::vector<Rat> w;
  Rat total;
};

struct WeightingViolation {
  Line line;
  Rat weight;
};

struct WeightingReport {
  bool feasible;
  Rat max_line_weight;
  std::vector<WeightingViolation> violations;
};

// Checks the Weighting invariants (size, nonnegativity, total) and every
// per-line weight sum.
WeightingReport verify_weighting(const Grid& g, const LineFamily& fam,
                                 const Weighting& wt);

// Grids with no interior point on any axis-to-axis line: interior weight
// 1/(n+m-2), x-axis (n-1)/(n+m-2), y-axis (m-1)/(n+m-2). Total
// (n-1) + (m-1)^2 / (n+m-2).
Weighting weight_generic(const Grid& g);

// Square grids: interior 1/(n+t), axis (t+1)/(n+t), except y-axis points
// whose index sits within t of the zero row, directly or after reflecting
// the axis, which get 0. Feasibility rests on the slanted-line size bound
// checked by linesize_bound_check. Default t: smallest one with
// 4(t+n)^2 >= (5n+1)(n-1).
Weighting weight_square_claim(const Grid& g,
                              std::optional<long> t = std::nullopt);

// Relaxation of weight_generic when axis-to-axis lines carry up to delta
// interior points: interior 1/(2(n-1)-delta), boundary the complement to a
// tight vertical. Needs n >= m.
Weighting weight_delta_generic(const Grid& g, long delta);

// Standard grid {0..n-1}^2: every nonzero axis point 1/2; the points on
// diagonal x+y = n-1+i get 1/(n-i) each for 1 <= i <= t, where t is the
// largest value with sum 1/(n-1) + ... + 1/(n-t) <= 1/2. Total n-1+t.
Weighting weight_standard(long n);

// Certificate for the family of verticals, horizontals and slope -1
// diagonals on the standard grid. alpha[i] modulates coordinate-sum i; z is
// the per-point weight on diagonal x+y = n+t. Total (n-1) + t + (n-t-1)z.
struct RestrictedCertificate {
  Weighting weighting;
  long t;
  Rat z;
  std::vector<Rat> alpha;  // index by coordinate sum, alpha[0] unused
};

RestrictedCertificate weight_restricted(long n);

// Evaluates a weighting against the full line family and buckets violating
// lines by slope ("inf" for vertical). Builds the family, so quadratic in
// grid size.
struct AuditReport {
  WeightingReport report;
  std::map<std::string, long> violations_by_slope;
};

AuditReport audit_weighting(const Grid& g, const Weighting& wt);

}  // namespace gridcover
