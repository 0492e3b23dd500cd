#include "gridcover/geometry.hpp"

#include <algorithm>
#include <map>

#include "gridcover/error.hpp"

namespace gridcover {

Rat Line::slope() const {
  if (b == 0) throw Error(ErrorKind::BadParameter, "vertical line has no slope");
  return -a / b;
}

std::optional<Line> line_through(const GridPoint& p, const GridPoint& q) {
  if (p.is_zero() || q.is_zero())
    throw Error(ErrorKind::BadParameter, "line_through needs nonzero points");
  if (p.x == q.x && p.y == q.y)
    throw Error(ErrorKind::SamePoint, "line_through needs distinct points");
  Rat d = p.x * q.y - q.x * p.y;
  if (d == 0) return std::nullopt;
  return Line{(q.y - p.y) / d, (p.x - q.x) / d};
}

LineFamily enumerate_lines(const Grid& g) {
  const auto& pts = g.nonzero_points();
  const long np = static_cast<long>(pts.size());
  // Group pairs by canonical (a, b). Any two points of a family line map to
  // the same key, so the accumulated endpoints are exactly the full incidence
  // list; no second sweep over lines x points is needed.
  std::map<Line, std::vector<long>> groups;
  for (long i = 0; i < np; ++i) {
    for (long j = i + 1; j < np; ++j) {
      Rat d = pts[i].x * pts[j].y - pts[j].x * pts[i].y;
      if (d == 0) continue;
      Line ln{(pts[j].y - pts[i].y) / d, (pts[i].x - pts[j].x) / d};
      auto& v = groups[ln];
      v.push_back(i);
      v.push_back(j);
    }
  }
  LineFamily fam;
  fam.lines.reserve(groups.size());
  fam.incidence.reserve(groups.size());
  for (auto& [ln, idx] : groups) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    fam.lines.push_back(ln);
    fam.incidence.push_back(std::move(idx));
  }
  return fam;
}

namespace {

bool is_standard(const Grid& g) {
  if (g.n() != g.m()) return false;
  for (long i = 0; i < g.n(); ++i)
    if (g.s1()[i] != i || g.s2()[i] != i) return false;
  return true;
}

}  // namespace

LineFamily restricted_lines(const Grid& g, const std::set<SlopeClass>& slopes) {
  if (!is_standard(g))
    throw Error(ErrorKind::NotStandardGrid,
                "restricted family needs axes {0..n-1}");
  const long n = g.n();
  // The origin sits at (0, 0), so nonzero point (i, j) has index i*n + j - 1.
  auto idx = [n](long i, long j) { return i * n + j - 1; };
  std::vector<std::pair<Line, std::vector<long>>> built;
  if (slopes.count(SlopeClass::vertical)) {
    for (long i = 1; i <= n - 1; ++i) {
      std::vector<long> pts;
      pts.reserve(n);
      for (long j = 0; j < n; ++j) pts.push_back(idx(i, j));
      built.emplace_back(Line{make_rat(1, i), Rat(0)}, std::move(pts));
    }
  }
  if (slopes.count(SlopeClass::horizontal)) {
    for (long j = 1; j <= n - 1; ++j) {
      std::vector<long> pts;
      pts.reserve(n);
      for (long i = 0; i < n; ++i) pts.push_back(idx(i, j));
      built.emplace_back(Line{Rat(0), make_rat(1, j)}, std::move(pts));
    }
  }
  if (slopes.count(SlopeClass::minus_one)) {
    // x + y = c has max points 2n-1-c for c >= n-1; c = 2n-2 is a lone
    // corner, not a line of the grid.
    for (long c = 1; c <= 2 * n - 3; ++c) {
      std::vector<long> pts;
      for (long i = std::max(0L, c - n + 1); i <= std::min(n - 1, c); ++i)
        pts.push_back(idx(i, c - i));
      std::sort(pts.begin(), pts.end());
      built.emplace_back(Line{make_rat(1, c), make_rat(1, c)},
                         std::move(pts));
    }
  }
  std::sort(built.begin(), built.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  LineFamily out;
  out.lines.reserve(built.size());
  out.incidence.reserve(built.size());
  for (auto& [ln, pts] : built) {
    out.lines.push_back(ln);
    out.incidence.push_back(std::move(pts));
  }
  return out;
}

LineSizeReport linesize_bound_check(const Grid& g, const LineFamily& fam) {
  if (g.n() != g.m())
    throw Error(ErrorKind::NotSquare, "line size bound needs n == m");
  const long n = g.n();
  const long i0 = g.i0();
  const auto& pts = g.nonzero_points();
  LineSizeReport rep{true, {}};
  for (long li = 0; li < fam.size(); ++li) {
    const Line& ln = fam.lines[li];
    if (ln.a == 0 || ln.b == 0) continue;  // axis-parallel: trivially n points
    // Find the point (0, y_j) on the line, if any; at most one exists since
    // two axis points plus the origin would be collinear.
    long j = -1;
    for (long pi : fam.incidence[li]) {
      if (pts[pi].x == 0) {
        g.find_s2(pts[pi].y, &j);
        break;
      }
    }
    if (j < 0) continue;
    bool positive = sgn(ln.a) != sgn(ln.b);  // slope -a/b > 0
    long dist = positive ? std::abs(j - i0) : std::abs((n - 1 - j) - i0);
    long bound = n - dist;
    long count = static_cast<long>(fam.incidence[li].size());
    if (count > bound) {
      rep.pass = false;
      rep.failures.push_back(LineSizeWitness{ln, j, count, bound});
    }
  }
  return rep;
}

}  // namespace gridcover
