#pragma once

#include <optional>
#include <set>
#include <vector>

#include "gridcover/grid.hpp"

namespace gridcover {

// Line a*x + b*y = 1. The form cannot pass through the origin, and (a, b) is
// unique per line, so equality and ordering are plain pairwise comparison.
struct Line {
  Rat a;
  Rat b;

  bool vertical() const { return b == 0; }
  bool horizontal() const { return a == 0; }
  // -a/b for b != 0.
  Rat slope() const;
  bool contains(const GridPoint& p) const { return a * p.x + b * p.y == 1; }

  bool operator==(const Line& o) const { return a == o.a && b == o.b; }
  bool operator<(const Line& o) const {
    int c = cmp(a, o.a);
    if (c != 0) return c < 0;
    return b < o.b;
  }
};

// Lines sorted by (a, b); incidence[i] lists the indices of the nonzero grid
// points on lines[i], ascending, always >= 2 entries.
struct LineFamily {
  std::vector<Line> lines;
  std::vector<std::vector<long>> incidence;

  long size() const { return static_cast<long>(lines.size()); }
};

// The unique origin-avoiding line through two distinct nonzero points, or
// nullopt when the pair is collinear with the origin.
std::optional<Line> line_through(const GridPoint& p, const GridPoint& q);

// Every line through >= 2 nonzero points of g, with full incidence lists.
LineFamily enumerate_lines(const Grid& g);

enum class SlopeClass { horizontal, vertical, minus_one };

// Subfamily of enumerate_lines with the given slopes; requires a standard
// grid (axes {0..n-1} both sides).
LineFamily restricted_lines(const Grid& g,
                            const std::set<SlopeClass>& slopes);

// Per-line point-count bound for square grids: a line of nonzero slope
// through the axis point (0, y_j) covers at most n - |distance of j from the
// zero row, measured directly (positive slope) or after reflecting the axis
// (negative slope)| grid points. Reports every line that exceeds it.
struct LineSizeWitness {
  Line line;
  long axis_index;  // j with (0, y_j) on the line
  long count;
  long bound;
};

struct LineSizeReport {
  bool pass;
  std::vector<LineSizeWitness> failures;
};

LineSizeReport linesize_bound_check(const Grid& g, const LineFamily& fam);

}  // namespace gridcover
