#include "gridcover/constructions.hpp"

#include <numeric>

#include "gridcover/error.hpp"

namespace gridcover {

namespace {

long nonzero_index(const Grid& g, long i, long j) {
  long pos = i * g.m() + j;
  long origin = g.i0() * g.m() + g.j0();
  return pos < origin ? pos : pos - 1;
}

// Ascending nonzero entries of an axis.
std::vector<Rat> nonzero_entries(const std::vector<Rat>& axis) {
  std::vector<Rat> out;
  out.reserve(axis.size() - 1);
  for (const Rat& v : axis)
    if (v != 0) out.push_back(v);
  return out;
}

Line vertical_at(const Rat& x) { return Line{Rat(1) / x, Rat(0)}; }
Line horizontal_at(const Rat& y) { return Line{Rat(0), Rat(1) / y}; }
// Through (x, 0) and (0, y), both nonzero.
Line connecting(const Rat& x, const Rat& y) {
  return Line{Rat(1) / x, Rat(1) / y};
}

void add(Cover& c, const Line& ln, long mult) {
  if (mult > 0) c.entries[ln] += mult;
}

}  // namespace

CoverReport verify_cover(const Grid& g, const Cover& c) {
  if (c.k < 1) throw Error(ErrorKind::BadParameter, "cover has k < 1");
  for (const auto& [ln, mult] : c.entries)
    if (mult <= 0)
      throw Error(ErrorKind::BadParameter, "cover has nonpositive multiplicity");

  std::vector<long> cov(g.nonzero_points().size(), 0);
  for (const auto& [ln, mult] : c.entries) {
    if (ln.b == 0) {
      // a x = 1: one full column.
      long i;
      if (!g.find_s1(Rat(1) / ln.a, &i)) continue;
      for (long j = 0; j < g.m(); ++j)
        if (i != g.i0() || j != g.j0()) cov[nonzero_index(g, i, j)] += mult;
    } else {
      // One point per column: y = (1 - a x) / b.
      for (long i = 0; i < g.n(); ++i) {
        Rat y = (Rat(1) - ln.a * g.s1()[i]) / ln.b;
        long j;
        if (g.find_s2(y, &j)) cov[nonzero_index(g, i, j)] += mult;
      }
    }
  }

  CoverReport rep{true, 0, std::nullopt};
  bool first = true;
  for (std::size_t idx = 0; idx < cov.size(); ++idx) {
    if (first || cov[idx] < rep.min_coverage) {
      rep.min_coverage = cov[idx];
      rep.witness = g.nonzero_points()[idx];
      first = false;
    }
  }
  rep.valid = !first && rep.min_coverage >= c.k;
  return rep;
}

Cover construct_wide(const Grid& g, long k) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k >= 1 required");
  const long n = g.n(), m = g.m();
  if (n < (k - 1) * (m - 1) + 1)
    throw Error(ErrorKind::HypothesisViolated,
                "wide construction needs n >= (k-1)(m-1)+1");
  std::vector<Rat> xs = nonzero_entries(g.s1());
  std::vector<Rat> ys = nonzero_entries(g.s2());

  Cover c;
  c.k = k;
  for (const Rat& x : xs) add(c, vertical_at(x), k - 1);
  for (const Rat& y : ys) add(c, horizontal_at(y), 1);
  // One connecting line per nonzero column, rows served round-robin: row
  // r mod (m-1) gets column r. Each row collects >= floor((n-1)/(m-1)) >= k-1
  // connecting lines, which tops its horizontal up to k.
  for (std::size_t r = 0; r < xs.size(); ++r)
    add(c, connecting(xs[r], ys[r % ys.size()]), 1);
  return c;
}

Cover construct_biregular(const Grid& g, long k) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k >= 1 required");
  const long n = g.n(), m = g.m();
  const long gg = std::gcd(n - 1, m - 1);
  const long a = (n - 1) / gg, b = (m - 1) / gg;
  if (k % (a + b) != 0)
    throw Error(ErrorKind::DivisibilityViolated,
                "k must be a multiple of " + std::to_string(a + b));
  const long vmult = a * k / (a + b);  // vertical copies
  const long hmult = b * k / (a + b);  // horizontal copies
  const long dcol = k - vmult;         // connecting degree per column
  const long drow = k - hmult;         // connecting degree per row
  std::vector<Rat> xs = nonzero_entries(g.s1());
  std::vector<Rat> ys = nonzero_entries(g.s2());

  Cover c;
  c.k = k;
  for (const Rat& x : xs) add(c, vertical_at(x), vmult);
  for (const Rat& y : ys) add(c, horizontal_at(y), hmult);
  // (n-1)*dcol == (m-1)*drow half-edges; edge r joins column r/dcol with row
  // r/drow, giving every column degree dcol and every row degree drow.
  const long edges = (n - 1) * dcol;
  for (long r = 0; r < edges; ++r)
    add(c, connecting(xs[r / dcol], ys[r / drow]), 1);
  return c;
}

Cover construct_square_threehalves(const Grid& g, long k) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k >= 1 required");
  if (g.n() != g.m())
    throw Error(ErrorKind::NotSquare, "three-halves cover needs n == m");
  std::vector<Rat> xs = nonzero_entries(g.s1());
  std::vector<Rat> ys = nonzero_entries(g.s2());

  Cover c;
  c.k = k;
  const long axis = (k + 1) / 2, diag = k / 2;
  for (const Rat& x : xs) add(c, vertical_at(x), axis);
  for (const Rat& y : ys) add(c, horizontal_at(y), axis);
  // Index-paired connecting lines hit the r-th column and r-th row axis
  // points at once, finishing both off: axis + diag = k.
  for (std::size_t r = 0; r < xs.size(); ++r)
    add(c, connecting(xs[r], ys[r]), diag);
  return c;
}

Cover construct_standard(long n, long k, std::optional<long> t_opt) {
  if (n < 2) throw Error(ErrorKind::TooSmall, "n >= 2 required");
  if (k < 1) throw Error(ErrorKind::BadParameter, "k >= 1 required");
  long t;
  if (t_opt) {
    t = *t_opt;
    if (t < 0 || t > n - 1)
      throw Error(ErrorKind::BadParameter, "t must lie in [0, n-1]");
  } else {
    // Smallest t with (t+n-1)^2 >= 2n(n-1).
    Int target = Int(2) * n * (n - 1);
    Int s = isqrt(target);
    if (s * s < target) s += 1;
    t = std::max(0L, to_long(s) - (n - 1));
  }
  const long D = n + t - 1;

  Cover c;
  c.k = k;
  for (long i = 1; i <= n - 1; ++i) {
    long mult = ceil_long(make_rat(i * k, D));
    add(c, vertical_at(Rat(i)), mult);
    add(c, horizontal_at(Rat(i)), mult);
  }
  // Diagonal x+y = i tops up points with coordinate sum below D; points with
  // x+y >= D are finished by their axis lines alone.
  for (long i = 1; i <= D - 1; ++i)
    add(c, connecting(Rat(i), Rat(i)), k - ceil_long(make_rat(i * k, D)));
  return c;
}

}  // namespace gridcover
