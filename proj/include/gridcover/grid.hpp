#pragma once

#include <cstdint>
#include <vector>

#include "gridcover/rational.hpp"

namespace gridcover {

enum class PointClass { origin, boundary, interior };

struct GridPoint {
  Rat x;
  Rat y;
  PointClass cls;

  bool is_zero() const { return cls == PointClass::origin; }
};

// Product grid S1 x S2 with 0 in both axes. Axes are stored sorted ascending
// and duplicate-free; point order everywhere is row-major over (i, j) with i
// indexing S1.
class Grid {
 public:
  // Sorts and validates: >= 2 entries per axis, no duplicates, 0 present.
  Grid(std::vector<Rat> s1, std::vector<Rat> s2);

  const std::vector<Rat>& s1() const { return s1_; }
  const std::vector<Rat>& s2() const { return s2_; }
  long n() const { return static_cast<long>(s1_.size()); }
  long m() const { return static_cast<long>(s2_.size()); }
  // Positions of 0 on each axis.
  long i0() const { return i0_; }
  long j0() const { return j0_; }

  GridPoint point(long i, long j) const;
  // All points except the origin, in (i, j) order. Row index into this vector
  // is the canonical point index used by line incidence and LP rows.
  const std::vector<GridPoint>& nonzero_points() const { return nonzero_; }

  // Index into s1()/s2() if the value is present.
  bool find_s1(const Rat& v, long* idx) const;
  bool find_s2(const Rat& v, long* idx) const;

 private:
  std::vector<Rat> s1_, s2_;
  long i0_ = 0, j0_ = 0;
  std::vector<GridPoint> nonzero_;
};

Grid make_grid(std::vector<Rat> s1, std::vector<Rat> s2);

// Axes {0, 1, ..., n-1} on both sides.
Grid standard_grid(long n);

enum class NamedGridKind { exponential, quadratic };

// exponential: {0, 1, 2, 4, ..., 2^(n-2)}; quadratic: {0, 1, 4, ..., (n-1)^2}.
// Square grids, both axes equal.
Grid named_grid(NamedGridKind kind, long n);

// Seed-deterministic random grid with delta_genericity == 0. Axis entries are
// p/q, p in [-10^6, 10^6] nonzero, q in [1, 10^3], distinct per axis. Resamples
// the whole grid until generic, at most 64 attempts.
Grid generic_grid(long n, long m, std::uint64_t seed);

// Max number of interior points on a line through one boundary point of each
// axis. 0 means generic.
long delta_genericity(const Grid& g);

}  // namespace gridcover
