#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gridcover/error.hpp"
#include "gridcover/geometry.hpp"

using namespace gridcover;

namespace {

GridPoint pt(long x, long y) {
  return GridPoint{Rat(x), Rat(y), PointClass::interior};
}

// Incidence rebuilt from scratch must match what the family reports.
void check_incidence(const Grid& g, const LineFamily& fam) {
  const auto& pts = g.nonzero_points();
  for (long li = 0; li < fam.size(); ++li) {
    std::vector<long> got;
    for (long pi = 0; pi < static_cast<long>(pts.size()); ++pi)
      if (fam.lines[li].contains(pts[pi])) got.push_back(pi);
    CHECK(got == fam.incidence[li]);
    CHECK(got.size() >= 2);
  }
  CHECK(std::is_sorted(fam.lines.begin(), fam.lines.end()));
  CHECK(std::adjacent_find(fam.lines.begin(), fam.lines.end()) ==
        fam.lines.end());
}

}  // namespace

TEST_CASE("line through two points") {
  auto v = line_through(pt(2, 0), pt(2, 5));
  REQUIRE(v.has_value());
  CHECK(v->vertical());
  CHECK(v->a == make_rat(1, 2));

  auto h = line_through(pt(1, 3), pt(4, 3));
  REQUIRE(h.has_value());
  CHECK(h->horizontal());
  CHECK(h->b == make_rat(1, 3));

  auto d = line_through(pt(2, 0), pt(0, 2));
  REQUIRE(d.has_value());
  CHECK(d->a == make_rat(1, 2));
  CHECK(d->b == make_rat(1, 2));
  CHECK(d->slope() == Rat(-1));
  CHECK(d->contains(pt(1, 1)));
  CHECK(!d->contains(pt(1, 2)));

  // (1,2) and (2,4) span a line through the origin: no admissible form.
  CHECK(!line_through(pt(1, 2), pt(2, 4)).has_value());

  CHECK_THROWS_AS(line_through(pt(1, 1), pt(1, 1)), Error);
  CHECK_THROWS_AS(line_through(GridPoint{Rat(0), Rat(0), PointClass::origin},
                               pt(1, 1)),
                  Error);
}

TEST_CASE("family counts on small square grids") {
  Grid g2 = standard_grid(2);
  LineFamily f2 = enumerate_lines(g2);
  CHECK(f2.size() == 3);
  check_incidence(g2, f2);

  Grid g3 = standard_grid(3);
  LineFamily f3 = enumerate_lines(g3);
  CHECK(f3.size() == 15);
  check_incidence(g3, f3);

  Grid g4 = standard_grid(4);
  check_incidence(g4, enumerate_lines(g4));
}

TEST_CASE("every nonzero point lies on some family line") {
  for (long n = 2; n <= 5; ++n) {
    Grid g = standard_grid(n);
    LineFamily fam = enumerate_lines(g);
    std::vector<char> hit(g.nonzero_points().size(), 0);
    for (const auto& inc : fam.incidence)
      for (long pi : inc) hit[pi] = 1;
    CHECK(std::count(hit.begin(), hit.end(), 0) == 0);
  }
}

TEST_CASE("restricted family") {
  Grid g = standard_grid(5);
  std::set<SlopeClass> all{SlopeClass::horizontal, SlopeClass::vertical,
                           SlopeClass::minus_one};
  LineFamily fam = restricted_lines(g, all);
  CHECK(fam.size() == (5 - 1) + (5 - 1) + (2 * 5 - 3));
  check_incidence(g, fam);

  // Must be the matching subfamily of the full enumeration.
  LineFamily full = enumerate_lines(g);
  for (long li = 0; li < fam.size(); ++li) {
    auto it = std::lower_bound(full.lines.begin(), full.lines.end(),
                               fam.lines[li]);
    REQUIRE(it != full.lines.end());
    REQUIRE(*it == fam.lines[li]);
    CHECK(full.incidence[it - full.lines.begin()] == fam.incidence[li]);
  }

  LineFamily vert = restricted_lines(g, {SlopeClass::vertical});
  CHECK(vert.size() == 4);
  for (const auto& ln : vert.lines) CHECK(ln.vertical());

  Grid shifted({Rat(-1), Rat(0), Rat(1)}, {Rat(-1), Rat(0), Rat(1)});
  CHECK_THROWS_AS(restricted_lines(shifted, all), Error);
}

TEST_CASE("slanted line size bound on squares") {
  for (long n = 2; n <= 7; ++n) {
    Grid g = standard_grid(n);
    LineSizeReport rep = linesize_bound_check(g, enumerate_lines(g));
    CHECK(rep.pass);
    CHECK(rep.failures.empty());
  }

  Grid sq = generic_grid(6, 6, 12);
  CHECK(linesize_bound_check(sq, enumerate_lines(sq)).pass);

  Grid rect = generic_grid(4, 3, 5);
  CHECK_THROWS_AS(linesize_bound_check(rect, enumerate_lines(rect)), Error);
}
