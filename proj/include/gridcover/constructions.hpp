#pragma once

#include <optional>

#include "gridcover/cover.hpp"

namespace gridcover {

// Exhaustive coverage check against the grid itself (not a family): walks the
// grid points on every cover line. witness is a least-covered point.
struct CoverReport {
  bool valid;
  long min_coverage;
  std::optional<GridPoint> witness;
};

CoverReport verify_cover(const Grid& g, const Cover& c);

// Wide-grid cover: k-1 copies of every vertical, every horizontal once, and
// one connecting line per nonzero column, spread round-robin over the nonzero
// rows. Needs n >= (k-1)(m-1)+1; size k(n-1) + (m-1).
Cover construct_wide(const Grid& g, long k);

// Balanced cover from a biregular bipartite multigraph between the two axes.
// With a = (n-1)/gcd(n-1, m-1), b = (m-1)/gcd(n-1, m-1), requires (a+b) | k.
// Verticals get ak/(a+b) copies, horizontals bk/(a+b), and the remaining
// coverage at axis points comes from connecting lines laid out by a
// deterministic half-edge pairing. Size k(n-1) + k(m-1)^2/(n+m-2).
Cover construct_biregular(const Grid& g, long k);

// Square grids: ceil(k/2) copies of every vertical and horizontal plus
// floor(k/2) copies of the line joining the r-th nonzero column to the r-th
// nonzero row. Size ceil(3k/2) * (n-1).
Cover construct_square_threehalves(const Grid& g, long k);

// Cover of the standard grid {0..n-1}^2 mixing verticals, horizontals and
// slope -1 diagonals with multiplicities graded by D = n+t-1: axis line i
// gets ceil(ik/D) copies, diagonal x+y = i gets k - ceil(ik/D). Default t is
// the smallest one with (t+n-1)^2 >= 2n(n-1).
Cover construct_standard(long n, long k, std::optional<long> t = std::nullopt);

}  // namespace gridcover
