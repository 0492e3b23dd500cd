#include "gridcover/certificates.hpp"

#include <algorithm>

#include "gridcover/error.hpp"

namespace gridcover {

namespace {

Weighting finalize(std::vector<Rat> w) {
  Weighting wt;
  wt.total = 0;
  for (const Rat& v : w) wt.total += v;
  wt.w = std::move(w);
  return wt;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("certificate invariant: ") + what);
}

}  // namespace

WeightingReport verify_weighting(const Grid& g, const LineFamily& fam,
                                 const Weighting& wt) {
  const auto& pts = g.nonzero_points();
  if (wt.w.size() != pts.size())
    throw Error(ErrorKind::DimensionMismatch, "weighting size vs grid");
  Rat total = 0;
  for (const Rat& v : wt.w) {
    if (v < 0) throw Error(ErrorKind::BadParameter, "negative weight");
    total += v;
  }
  if (total != wt.total)
    throw Error(ErrorKind::BadParameter, "stored total does not match weights");

  WeightingReport rep{true, Rat(0), {}};
  for (long li = 0; li < fam.size(); ++li) {
    Rat sum = 0;
    for (long pi : fam.incidence[li]) sum += wt.w[pi];
    if (sum > rep.max_line_weight) rep.max_line_weight = sum;
    if (sum > 1) {
      rep.feasible = false;
      rep.violations.push_back(WeightingViolation{fam.lines[li], sum});
    }
  }
  return rep;
}

Weighting weight_generic(const Grid& g) {
  if (delta_genericity(g) != 0)
    throw Error(ErrorKind::NotGeneric, "grid has collinear interior points");
  const long n = g.n(), m = g.m();
  const Rat alpha = make_rat(1, n + m - 2);
  std::vector<Rat> w;
  w.reserve(g.nonzero_points().size());
  for (const GridPoint& p : g.nonzero_points()) {
    if (p.cls == PointClass::interior)
      w.push_back(alpha);
    else if (p.y == 0)
      w.push_back(Rat(n - 1) * alpha);  // x-axis
    else
      w.push_back(Rat(m - 1) * alpha);  // y-axis
  }
  return finalize(std::move(w));
}

Weighting weight_square_claim(const Grid& g, std::optional<long> t_opt) {
  const long n = g.n();
  if (n != g.m())
    throw Error(ErrorKind::NotSquare, "square-grid weighting needs n == m");
  long t;
  if (t_opt) {
    t = *t_opt;
    if (t < 0 || t > n - 2)
      throw Error(ErrorKind::BadParameter, "t must lie in [0, n-2]");
  } else {
    // Smallest t with 4(t+n)^2 >= (5n+1)(n-1).
    Int target = Int(5 * n + 1) * (n - 1);
    t = 0;
    while (Int(4) * Int(t + n) * Int(t + n) < target) ++t;
    t = std::min(t, n - 2);
  }
  const Rat alpha = make_rat(1, n + t);
  const Rat beta = make_rat(t + 1, n + t);
  const long i0 = g.i0();

  std::vector<Rat> w;
  w.reserve(g.nonzero_points().size());
  for (const GridPoint& p : g.nonzero_points()) {
    if (p.cls == PointClass::interior) {
      w.push_back(alpha);
    } else if (p.y == 0) {
      w.push_back(beta);
    } else {
      // y-axis point (0, y_j): zero out indices within t of the zero row in
      // either axis direction, so every slanted line through a beta-weighted
      // y-axis point has at most n-t points.
      long j;
      g.find_s2(p.y, &j);
      long dist = std::min(std::abs(j - i0), std::abs((n - 1 - j) - i0));
      w.push_back(dist < t ? Rat(0) : beta);
    }
  }
  return finalize(std::move(w));
}

Weighting weight_delta_generic(const Grid& g, long delta) {
  const long n = g.n(), m = g.m();
  if (n < m)
    throw Error(ErrorKind::HypothesisViolated, "needs n >= m");
  if (delta >= 2 * (n - 1))
    throw Error(ErrorKind::BadParameter, "delta must be below 2(n-1)");
  if (delta_genericity(g) > delta)
    throw Error(ErrorKind::DeltaTooSmall,
                "grid defect exceeds the given delta");
  const Rat alpha = make_rat(1, 2 * (n - 1) - delta);
  const Rat beta = Rat(1) - Rat(n - 1) * alpha;
  if (beta < 0)
    throw Error(ErrorKind::BadParameter, "delta too large for this shape");
  std::vector<Rat> w;
  w.reserve(g.nonzero_points().size());
  for (const GridPoint& p : g.nonzero_points())
    w.push_back(p.cls == PointClass::interior ? alpha : beta);
  return finalize(std::move(w));
}

Weighting weight_standard(long n) {
  if (n < 2) throw Error(ErrorKind::TooSmall, "n >= 2 required");
  // Largest t with H(t) = sum_{i=1..t} 1/(n-i) <= 1/2; the window diagonals
  // n-1+1 .. n-1+t each carry total weight exactly 1.
  long t = 0;
  Rat h = 0;
  while (t + 1 <= n - 1 && h + make_rat(1, n - (t + 1)) <= make_rat(1, 2)) {
    ++t;
    h += make_rat(1, n - t);
  }
  Grid g = standard_grid(n);
  std::vector<Rat> w;
  w.reserve(g.nonzero_points().size());
  for (const GridPoint& p : g.nonzero_points()) {
    if (p.cls == PointClass::boundary) {
      w.emplace_back(make_rat(1, 2));
      continue;
    }
    long s = to_long(Int(p.x.get_num())) + to_long(Int(p.y.get_num()));
    long i = s - (n - 1);
    w.push_back(i >= 1 && i <= t ? make_rat(1, n - i) : Rat(0));
  }
  return finalize(std::move(w));
}

RestrictedCertificate weight_restricted(long n) {
  if (n < 2) throw Error(ErrorKind::TooSmall, "n >= 2 required");
  // t is the integer between (sqrt(8n^2-8n+1) - 2n - 1)/2 and
  // (sqrt(8n^2-8n+1) - 2n + 1)/2, bracketed exactly; when both endpoints are
  // integers the smaller one is taken.
  const Int A = Int(8) * n * n - Int(8) * n + 1;
  long t = std::max(0L, to_long((isqrt(A) - 2 * n - 1) / 2));
  while (!(Int(2 * t + 2 * n + 1) * Int(2 * t + 2 * n + 1) >= A)) ++t;
  require(Int(2 * t + 2 * n - 1) * Int(2 * t + 2 * n - 1) <= A,
          "t bracket");
  require(t <= n - 2, "t range");

  // gamma_i = i(i+1) alpha_i accumulates j(j-1)/(n-j); past i = t the z term
  // joins and gamma stays constant.
  std::vector<Rat> gamma(n, Rat(0));
  for (long i = 2; i <= std::min(t, n - 1); ++i)
    gamma[i] = gamma[i - 1] + make_rat(i * (i - 1), n - i);
  Rat h = 0;  // H_t = sum 1/(n-j)
  for (long j = 1; j <= t; ++j) h += make_rat(1, n - j);

  const Rat nn = Rat(n) * Rat(n - 1);
  Rat z = (nn * (make_rat(1, 2) - h) + gamma[t]) / (nn - Rat(t) * Rat(t + 1));
  require(z >= 0, "z nonnegative");
  require(Rat(n - t - 1) * z <= 1, "z diagonal feasible");

  std::vector<Rat> alpha(n, Rat(0));
  for (long i = 1; i <= n - 1; ++i) {
    Rat num = gamma[std::min(i, t)];
    if (i >= t + 1) num += Rat(t) * Rat(t + 1) * z;
    alpha[i] = num / (Rat(i) * Rat(i + 1));
    require(alpha[i] >= 0 && alpha[i] <= make_rat(1, 2), "alpha range");
    if (i <= t + 1 && i >= 2 && n - i - 1 >= 1)
      require(alpha[i] <= make_rat(i - 1, 2 * (n - i - 1)), "alpha cap");
  }

  Grid g = standard_grid(n);
  std::vector<Rat> w;
  w.reserve(g.nonzero_points().size());
  for (const GridPoint& p : g.nonzero_points()) {
    long s = to_long(Int(p.x.get_num())) + to_long(Int(p.y.get_num()));
    if (p.cls == PointClass::boundary) {
      w.push_back(make_rat(1, 2) - alpha[s]);
    } else if (s <= n - 1) {
      // Diagonal x+y = s holds s-1 interior points; together with its two
      // axis endpoints it sums to exactly 1.
      w.push_back(Rat(2) * alpha[s] / Rat(s - 1));
    } else if (s <= n - 1 + t) {
      w.push_back(make_rat(1, 2 * n - 1 - s));
    } else if (s == n + t) {
      // Keeps every vertical and horizontal tight; when t = n-2 this
      // diagonal is the lone corner point, constrained only through them.
      w.push_back(z);
    } else {
      w.push_back(Rat(0));
    }
  }
  RestrictedCertificate cert;
  cert.weighting = finalize(std::move(w));
  cert.t = t;
  cert.z = z;
  cert.alpha = std::move(alpha);
  return cert;
}

AuditReport audit_weighting(const Grid& g, const Weighting& wt) {
  LineFamily fam = enumerate_lines(g);
  AuditReport rep;
  rep.report = verify_weighting(g, fam, wt);
  for (const auto& v : rep.report.violations) {
    std::string key = v.line.vertical() ? "inf" : rat_str(v.line.slope());
    ++rep.violations_by_slope[key];
  }
  return rep;
}

}  // namespace gridcover
