#include "gridcover/grid.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gridcover/error.hpp"

namespace gridcover {

namespace {

void validate_axis(std::vector<Rat>& axis, const char* name) {
  if (axis.size() < 2)
    throw Error(ErrorKind::TooSmall, std::string(name) + " needs >= 2 entries");
  std::sort(axis.begin(), axis.end());
  for (std::size_t i = 1; i < axis.size(); ++i)
    if (axis[i - 1] == axis[i])
      throw Error(ErrorKind::DuplicateEntry,
                  std::string(name) + " repeats " + rat_str(axis[i]));
}

long zero_index(const std::vector<Rat>& axis, const char* name) {
  auto it = std::lower_bound(axis.begin(), axis.end(), Rat(0));
  if (it == axis.end() || *it != 0)
    throw Error(ErrorKind::MissingOrigin, std::string(name) + " lacks 0");
  return static_cast<long>(it - axis.begin());
}

}  // namespace

Grid::Grid(std::vector<Rat> s1, std::vector<Rat> s2)
    : s1_(std::move(s1)), s2_(std::move(s2)) {
  validate_axis(s1_, "s1");
  validate_axis(s2_, "s2");
  i0_ = zero_index(s1_, "s1");
  j0_ = zero_index(s2_, "s2");
  nonzero_.reserve(s1_.size() * s2_.size() - 1);
  for (long i = 0; i < n(); ++i)
    for (long j = 0; j < m(); ++j)
      if (i != i0_ || j != j0_) nonzero_.push_back(point(i, j));
}

GridPoint Grid::point(long i, long j) const {
  const Rat& x = s1_.at(i);
  const Rat& y = s2_.at(j);
  PointClass cls;
  if (x == 0 && y == 0)
    cls = PointClass::origin;
  else if (x == 0 || y == 0)
    cls = PointClass::boundary;
  else
    cls = PointClass::interior;
  return GridPoint{x, y, cls};
}

bool Grid::find_s1(const Rat& v, long* idx) const {
  auto it = std::lower_bound(s1_.begin(), s1_.end(), v);
  if (it == s1_.end() || *it != v) return false;
  if (idx) *idx = static_cast<long>(it - s1_.begin());
  return true;
}

bool Grid::find_s2(const Rat& v, long* idx) const {
  auto it = std::lower_bound(s2_.begin(), s2_.end(), v);
  if (it == s2_.end() || *it != v) return false;
  if (idx) *idx = static_cast<long>(it - s2_.begin());
  return true;
}

Grid make_grid(std::vector<Rat> s1, std::vector<Rat> s2) {
  return Grid(std::move(s1), std::move(s2));
}

Grid standard_grid(long n) {
  if (n < 2) throw Error(ErrorKind::TooSmall, "standard grid needs n >= 2");
  std::vector<Rat> axis;
  axis.reserve(n);
  for (long i = 0; i < n; ++i) axis.emplace_back(i);
  return Grid(axis, axis);
}

Grid named_grid(NamedGridKind kind, long n) {
  if (n < 2) throw Error(ErrorKind::TooSmall, "named grid needs n >= 2");
  std::vector<Rat> axis;
  axis.reserve(n);
  axis.emplace_back(0);
  if (kind == NamedGridKind::exponential) {
    Int v = 1;
    for (long i = 1; i < n; ++i, v *= 2) axis.emplace_back(v);
  } else {
    for (long i = 1; i < n; ++i) axis.emplace_back(Int(i) * Int(i));
  }
  return Grid(axis, axis);
}

long delta_genericity(const Grid& g) {
  // Lines through (x, 0) and (0, y), both nonzero: a = 1/x, b = 1/y. A point
  // (u, v) with u, v != 0 lies on it iff v = y * (1 - u/x). Scan the shorter
  // axis for candidates and membership-test the partner value.
  bool scan_s1 = g.n() <= g.m();
  long best = 0;
  for (const Rat& x : g.s1()) {
    if (x == 0) continue;
    for (const Rat& y : g.s2()) {
      if (y == 0) continue;
      long count = 0;
      if (scan_s1) {
        for (const Rat& u : g.s1()) {
          if (u == 0 || u == x) continue;
          Rat v = y * (Rat(1) - u / x);
          if (v != 0 && g.find_s2(v, nullptr)) ++count;
        }
      } else {
        for (const Rat& v : g.s2()) {
          if (v == 0 || v == y) continue;
          Rat u = x * (Rat(1) - v / y);
          if (u != 0 && g.find_s1(u, nullptr)) ++count;
        }
      }
      best = std::max(best, count);
    }
  }
  return best;
}

namespace {

// Raw engine outputs with modulo reduction; std:: distributions are
// implementation-defined and would break seed reproducibility.
Rat sample_entry(std::mt19937_64& eng) {
  long p = 0;
  while (p == 0)
    p = static_cast<long>(eng() % 2000001u) - 1000000;
  long q = 1 + static_cast<long>(eng() % 1000u);
  return make_rat(p, q);
}

std::vector<Rat> sample_axis(long len, std::mt19937_64& eng) {
  std::set<Rat> vals;
  while (static_cast<long>(vals.size()) < len - 1) vals.insert(sample_entry(eng));
  std::vector<Rat> axis(vals.begin(), vals.end());
  axis.emplace_back(0);
  return axis;
}

}  // namespace

Grid generic_grid(long n, long m, std::uint64_t seed) {
  if (n < 2 || m < 2)
    throw Error(ErrorKind::TooSmall, "generic grid needs n, m >= 2");
  std::mt19937_64 eng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Grid g(sample_axis(n, eng), sample_axis(m, eng));
    if (delta_genericity(g) == 0) return g;
  }
  throw Error(ErrorKind::GenerationFailed,
              "no generic grid after 64 attempts (seed " +
                  std::to_string(seed) + ")");
}

}  // namespace gridcover
