// Acceptance gate: ten checks, one verdict line each. Every expected value
// and tolerance window is pinned right here; nothing is read from disk.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "gridcover/certificates.hpp"
#include "gridcover/constructions.hpp"
#include "gridcover/harness.hpp"
#include "gridcover/io.hpp"

using namespace gridcover;

namespace {

constexpr int kJobs = 4;

std::string g_detail;

void detail(const std::string& s) {
  if (g_detail.empty()) g_detail = s;
}

std::vector<ResultRow> run_suite_entry(const std::string& id) {
  for (const ExperimentSpec& spec : experiment_suite())
    if (spec.id == id) return run_experiment(spec, kJobs);
  detail("suite entry " + id + " missing");
  return {};
}

// c1: on wide grids the k-cover optimum meets the closed form
// k(n-1) + (m-1), and the explicit construction attains it.
bool check_wide_tightness() {
  std::vector<ResultRow> rows = run_suite_entry("E1");
  if (rows.empty()) return false;
  for (const ResultRow& r : rows) {
    long want = r.k * (r.n - 1) + (r.m - 1);
    if (r.ilp_status != "optimal") {
      detail("E1 " + std::to_string(r.n) + "x" + std::to_string(r.m) +
             " k=" + std::to_string(r.k) + " not optimal");
      return false;
    }
    if (!r.ilp || *r.ilp != want || !r.constr_size || *r.constr_size != want) {
      detail("E1 " + std::to_string(r.n) + "x" + std::to_string(r.m) +
             " k=" + std::to_string(r.k) + " got ilp=" +
             std::to_string(r.ilp.value_or(-1)) + " constr=" +
             std::to_string(r.constr_size.value_or(-1)) + " want " +
             std::to_string(want));
      return false;
    }
  }
  return true;
}

// c2: on generic grids the relaxation value (n-1) + (m-1)^2/(n+m-2) is
// certified from both sides and the integer optimum k*phi is attained by the
// biregular construction.
bool check_generic_tightness() {
  std::vector<ResultRow> rows = run_suite_entry("E2");
  if (rows.empty()) return false;
  for (const ResultRow& r : rows) {
    std::string id = "E2 " + std::to_string(r.n) + "x" + std::to_string(r.m);
    Rat want_phi = Rat(r.n - 1) + Rat((r.m - 1) * (r.m - 1)) *
                                      make_rat(1, r.n + r.m - 2);
    if (!r.phi || *r.phi != want_phi) {
      detail(id + " phi off the closed form");
      return false;
    }
    if (!r.cert_total || *r.cert_total != *r.phi) {
      detail(id + " certificate total != phi");
      return false;
    }
    if (r.ilp_status != "optimal" || !r.ilp ||
        Rat(*r.ilp) != Rat(r.k) * *r.phi) {
      detail(id + " k=" + std::to_string(r.k) + " ilp != k*phi");
      return false;
    }
    if (!r.constr_size || *r.constr_size != *r.ilp) {
      detail(id + " biregular size != optimum");
      return false;
    }
  }
  return true;
}

// c3: on seeded generic squares with even k, cov_k = 3k(n-1)/2.
bool check_even_square_tightness() {
  for (long n = 2; n <= 5; ++n)
    for (long k : {2L, 4L}) {
      Grid g = generic_grid(n, n, 52000 + 10 * n + k);
      long want = 3 * k * (n - 1) / 2;
      IlpResult res = solve_ilp(CoverInstance{g, enumerate_lines(g), k},
                                construct_square_threehalves(g, k));
      if (!res.optimal || res.optimum != want) {
        detail("generic n=" + std::to_string(n) + " k=" + std::to_string(k) +
               " got " + std::to_string(res.optimum) + " want " +
               std::to_string(want) + (res.optimal ? "" : " (not optimal)"));
        return false;
      }
    }
  return true;
}

// c4: branch and bound agrees with a family-level exhaustive search.
bool check_exhaustive_agreement() {
  Grid g2 = standard_grid(2);
  LineFamily f2 = enumerate_lines(g2);
  long expect2[] = {0, 2, 3, 5, 6};
  for (long k = 1; k <= 4; ++k) {
    auto oracle = oracle_exhaustive_cov(g2, f2, k, 12);
    IlpResult ilp = solve_ilp(CoverInstance{g2, f2, k});
    if (!oracle || *oracle != expect2[k] || !ilp.optimal ||
        ilp.optimum != expect2[k]) {
      detail("2x2 k=" + std::to_string(k));
      return false;
    }
  }
  Grid g3 = standard_grid(3);
  LineFamily f3 = enumerate_lines(g3);
  auto oracle = oracle_exhaustive_cov(g3, f3, 2, 10);
  IlpResult ilp = solve_ilp(CoverInstance{g3, f3, 2});
  if (!oracle || *oracle != 6 || !ilp.optimal || ilp.optimum != 6) {
    detail("3x3 k=2");
    return false;
  }
  return true;
}

// c5: at desk scale the restricted family already contains an optimal cover.
bool check_restricted_suffices() {
  IlpOptions opts;
  opts.time_budget_secs = 600;
  std::set<SlopeClass> slopes{SlopeClass::horizontal, SlopeClass::vertical,
                              SlopeClass::minus_one};
  for (long n = 2; n <= 6; ++n) {
    Grid g = standard_grid(n);
    LineFamily restr = restricted_lines(g, slopes);
    LineFamily full = enumerate_lines(g);
    for (long k = 1; k <= 4; ++k) {
      std::string id = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      Cover graded = construct_standard(n, k);
      Cover halves = construct_square_threehalves(g, k);
      const Cover& warm = graded.size() <= halves.size() ? graded : halves;
      IlpResult r = solve_ilp(CoverInstance{g, restr, k}, warm, opts);
      if (!r.optimal) {
        detail(id + " restricted solve hit the budget");
        return false;
      }
      // The restricted optimum seeds the full solve; the full family can
      // only do at least as well.
      IlpResult f = solve_ilp(CoverInstance{g, full, k}, r.cover, opts);
      if (!f.optimal) {
        detail(id + " full solve hit the budget");
        return false;
      }
      if (f.optimum != r.optimum) {
        detail(id + " full " + std::to_string(f.optimum) + " != restricted " +
               std::to_string(r.optimum));
        return false;
      }
    }
  }
  return true;
}

// c6: every weighting the library produces is feasible for its family, at
// every shape up to 10 (restricted one up to 60).
bool check_certificate_feasibility() {
  for (long n = 2; n <= 10; ++n) {
    for (long m = 2; m <= n; ++m) {
      Grid g = generic_grid(n, m, 1000 + 10 * n + m);
      Weighting wt = weight_generic(g);
      Rat want = Rat(n - 1) + Rat((m - 1) * (m - 1)) * make_rat(1, n + m - 2);
      if (wt.total != want ||
          !verify_weighting(g, enumerate_lines(g), wt).feasible) {
        detail("generic " + std::to_string(n) + "x" + std::to_string(m));
        return false;
      }
      Weighting wd = weight_delta_generic(g, 0);
      if (!verify_weighting(g, enumerate_lines(g), wd).feasible) {
        detail("delta0 " + std::to_string(n) + "x" + std::to_string(m));
        return false;
      }
    }
  }
  for (long n = 2; n <= 10; ++n) {
    Grid g = standard_grid(n);
    LineFamily full = enumerate_lines(g);
    if (!verify_weighting(g, full, weight_square_claim(g)).feasible) {
      detail("square claim n=" + std::to_string(n));
      return false;
    }
    if (!verify_weighting(g, full, weight_standard(n)).feasible) {
      detail("axis-heavy n=" + std::to_string(n));
      return false;
    }
    if (n >= 3 && !verify_weighting(
                      g, full, weight_delta_generic(g, n - 2)).feasible) {
      detail("delta n=" + std::to_string(n));
      return false;
    }
  }
  for (long n = 3; n <= 10; ++n) {
    // Zero off axis center: the reflection branch of the window matters.
    std::vector<Rat> axis;
    long shift = n / 3;
    for (long i = 0; i < n; ++i) axis.emplace_back(i - shift);
    Grid g(axis, axis);
    if (!verify_weighting(g, enumerate_lines(g),
                          weight_square_claim(g)).feasible) {
      detail("shifted square n=" + std::to_string(n));
      return false;
    }
  }
  for (long kind = 0; kind <= 1; ++kind) {
    for (long n = 4; n <= 10; ++n) {
      Grid g = named_grid(kind == 0 ? NamedGridKind::exponential
                                    : NamedGridKind::quadratic,
                          n);
      Weighting wt = weight_delta_generic(g, delta_genericity(g));
      if (!verify_weighting(g, enumerate_lines(g), wt).feasible) {
        detail("named delta kind=" + std::to_string(kind) +
               " n=" + std::to_string(n));
        return false;
      }
    }
  }
  std::set<SlopeClass> slopes{SlopeClass::horizontal, SlopeClass::vertical,
                              SlopeClass::minus_one};
  for (long n = 2; n <= 60; ++n) {
    Grid g = standard_grid(n);
    RestrictedCertificate cert = weight_restricted(n);
    if (!verify_weighting(g, restricted_lines(g, slopes),
                          cert.weighting).feasible) {
      detail("restricted n=" + std::to_string(n));
      return false;
    }
  }
  return true;
}

// c7: the large-n behavior lands in pinned windows at n = 500.
bool check_large_n_windows() {
  const long n = 500;
  const Rat span = Rat(n - 1);

  Weighting ws = weight_standard(n);
  if (ws.total != Rat(695)) {  // n-1 + t with t = 196
    detail("axis-heavy total " + rat_str(ws.total));
    return false;
  }
  if (ws.total < make_rat(136, 100) * span ||
      ws.total > make_rat(140, 100) * span) {
    detail("axis-heavy ratio outside [1.36, 1.40]");
    return false;
  }

  const long k = 1000;
  Cover c = construct_standard(n, k);
  Grid g = standard_grid(n);
  CoverReport rep = verify_cover(g, c);
  if (!rep.valid || rep.min_coverage < k) {
    detail("graded cover invalid at n=500");
    return false;
  }
  Rat size = Rat(c.size());
  if (size < make_rat(141, 100) * Rat(k) * span ||
      size > make_rat(146, 100) * Rat(k) * span) {
    detail("graded cover ratio outside [1.41, 1.46], size " +
           std::to_string(c.size()));
    return false;
  }

  RestrictedCertificate cert = weight_restricted(n);
  if (cert.t != 206) {
    detail("restricted t=" + std::to_string(cert.t));
    return false;
  }
  std::set<SlopeClass> slopes{SlopeClass::horizontal, SlopeClass::vertical,
                              SlopeClass::minus_one};
  if (!verify_weighting(g, restricted_lines(g, slopes),
                        cert.weighting).feasible) {
    detail("restricted infeasible at n=500");
    return false;
  }
  if (cert.weighting.total < make_rat(137, 100) * span ||
      cert.weighting.total > make_rat(14143, 10000) * span) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.7f",
                  Rat(cert.weighting.total / span).get_d());
    detail(std::string("restricted ratio ") + buf +
           " outside [1.37, 1.4143]");
    return false;
  }

  Weighting wc = weight_square_claim(g);
  if (wc.total < make_rat(105, 100) * span) {
    detail("square claim ratio below 1.05");
    return false;
  }
  return true;
}

// c8: the slanted-line point count bound holds across square shapes.
bool check_linesize_bound() {
  for (long n = 2; n <= 10; ++n) {
    Grid g = standard_grid(n);
    if (!linesize_bound_check(g, enumerate_lines(g)).pass) {
      detail("standard n=" + std::to_string(n));
      return false;
    }
  }
  long done = 0;
  for (long n = 4; n <= 7 && done < 12; ++n) {
    for (std::uint64_t seed = 101; seed <= 103; ++seed, ++done) {
      Grid g = generic_grid(n, n, seed);
      if (!linesize_bound_check(g, enumerate_lines(g)).pass) {
        detail("generic n=" + std::to_string(n) + " seed " +
               std::to_string(seed));
        return false;
      }
    }
  }
  for (long n = 5; n <= 8; ++n) {
    for (long shift : {1L, n / 2}) {
      std::vector<Rat> axis;
      for (long i = 0; i < n; ++i) axis.emplace_back(i - shift);
      Grid g(axis, axis);
      if (!linesize_bound_check(g, enumerate_lines(g)).pass) {
        detail("shifted n=" + std::to_string(n) + " shift " +
               std::to_string(shift));
        return false;
      }
    }
  }
  return true;
}

// c9: the restricted certificate is really restricted: against the full
// family it breaks, and only off the three covered slopes.
bool check_restricted_audit() {
  for (long n : {20L, 30L, 40L}) {
    Grid g = standard_grid(n);
    RestrictedCertificate cert = weight_restricted(n);
    AuditReport audit = audit_weighting(g, cert.weighting);
    std::string id = "n=" + std::to_string(n);
    if (audit.report.feasible) {
      const std::vector<GridPoint>& pts = g.nonzero_points();
      Rat diag = 0;
      for (size_t i = 0; i < pts.size(); ++i)
        if (pts[i].y == pts[i].x + 1) diag += cert.weighting.w[i];
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6f", diag.get_d());
      detail(id + " feasible for the full family; w(y=x+1)=" + buf);
      return false;
    }
    if (audit.violations_by_slope.count("inf") ||
        audit.violations_by_slope.count("0") ||
        audit.violations_by_slope.count("-1")) {
      detail(id + " violation on a covered slope");
      return false;
    }
    bool unit_diag = false;
    for (const WeightingViolation& v : audit.report.violations)
      if (v.line == Line{Rat(-1), Rat(1)}) unit_diag = true;
    if (!unit_diag) {
      detail(id + " y = x+1 not among the violations");
      return false;
    }
  }
  return true;
}

// --- c10 support: minimum over all basic feasible points, found by brute
// force over variable-count subsets of the constraint rows.

std::optional<std::vector<Rat>> gauss_solve(std::vector<std::vector<Rat>> M,
                                            std::vector<Rat> rhs) {
  const long n = static_cast<long>(M.size());
  for (long col = 0; col < n; ++col) {
    long piv = -1;
    for (long r = col; r < n; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return std::nullopt;
    std::swap(M[col], M[piv]);
    std::swap(rhs[col], rhs[piv]);
    Rat d = M[col][col];
    for (long j = col; j < n; ++j) M[col][j] /= d;
    rhs[col] /= d;
    for (long r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      Rat f = M[r][col];
      for (long j = col; j < n; ++j) M[r][j] -= f * M[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

std::optional<Rat> vertex_minimum(const LinearProgram& p) {
  const long nv = static_cast<long>(p.objective.size());
  // All constraints as rows >= rhs: the inputs, then x_j >= 0, then
  // -x_j >= -u_j.
  std::vector<std::vector<Rat>> rows = p.rows;
  std::vector<Rat> rhs = p.rhs;
  for (long j = 0; j < nv; ++j) {
    std::vector<Rat> r(nv, Rat(0));
    r[j] = 1;
    rows.push_back(r);
    rhs.push_back(Rat(0));
  }
  for (long j = 0; j < static_cast<long>(p.upper_bounds.size()); ++j) {
    if (!p.upper_bounds[j]) continue;
    std::vector<Rat> r(nv, Rat(0));
    r[j] = -1;
    rows.push_back(r);
    rhs.push_back(-*p.upper_bounds[j]);
  }
  const long nr = static_cast<long>(rows.size());
  std::optional<Rat> best;
  std::vector<long> pick(nv);
  std::function<void(long, long)> rec = [&](long from, long depth) {
    if (depth == nv) {
      std::vector<std::vector<Rat>> M(nv, std::vector<Rat>(nv));
      std::vector<Rat> b(nv);
      for (long i = 0; i < nv; ++i) {
        M[i] = rows[pick[i]];
        b[i] = rhs[pick[i]];
      }
      auto x = gauss_solve(std::move(M), std::move(b));
      if (!x) return;
      for (long i = 0; i < nr; ++i) {
        Rat dot = 0;
        for (long j = 0; j < nv; ++j) dot += rows[i][j] * (*x)[j];
        if (dot < rhs[i]) return;
      }
      Rat val = 0;
      for (long j = 0; j < nv; ++j) val += p.objective[j] * (*x)[j];
      if (!best || val < *best) best = val;
      return;
    }
    for (long i = from; i < nr; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return best;
}

// c10: 200 random feasible bounded programs; the simplex value must match
// the vertex scan and carry a verifiable optimality certificate.
bool check_lp_against_vertices() {
  std::mt19937_64 eng(4242);
  auto ri = [&](long lo, long hi) {
    return lo + static_cast<long>(eng() %
                                  static_cast<unsigned long>(hi - lo + 1));
  };
  for (int trial = 0; trial < 200; ++trial) {
    bool bounded_vars = trial >= 140;
    long nv = bounded_vars ? ri(1, 4) : ri(1, 5);
    long nr = bounded_vars ? ri(1, 4) : ri(1, 6);
    LinearProgram p;
    for (long j = 0; j < nv; ++j) p.objective.push_back(Rat(ri(0, 4)));
    std::vector<Rat> x0;
    for (long j = 0; j < nv; ++j) x0.push_back(Rat(ri(0, 3)));
    for (long i = 0; i < nr; ++i) {
      std::vector<Rat> row;
      Rat dot = 0;
      for (long j = 0; j < nv; ++j) {
        row.push_back(Rat(ri(-3, 3)));
        dot += row.back() * x0[j];
      }
      p.rows.push_back(std::move(row));
      p.rhs.push_back(dot - Rat(ri(0, 2)));
    }
    if (bounded_vars) {
      // Keeping x0 under the bound keeps the program feasible.
      for (long j = 0; j < nv; ++j)
        if (ri(0, 1))
          p.upper_bounds.push_back(x0[j] + Rat(ri(0, 2)));
        else
          p.upper_bounds.push_back(std::nullopt);
    }
    LPSolution s = solve_lp(p);
    std::optional<Rat> want = vertex_minimum(p);
    if (s.status != LPStatus::optimal || !want || s.value != *want ||
        !verify_solution(p, s)) {
      detail("trial " + std::to_string(trial));
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*fn)();
  };
  const Criterion criteria[] = {
      {"c1 wide grids: cov_k = k(n-1)+(m-1), construction attains it",
       check_wide_tightness},
      {"c2 generic grids: phi certified both sides, cov_k = k*phi",
       check_generic_tightness},
      {"c3 even k squares: cov_k = 3k(n-1)/2", check_even_square_tightness},
      {"c4 branch and bound matches exhaustive search",
       check_exhaustive_agreement},
      {"c5 restricted family is optimal at desk scale",
       check_restricted_suffices},
      {"c6 produced weightings are feasible for their families",
       check_certificate_feasibility},
      {"c7 n=500 totals land in the pinned windows", check_large_n_windows},
      {"c8 slanted line size bound holds on squares", check_linesize_bound},
      {"c9 restricted certificate breaks off-family, on slope 1 lines",
       check_restricted_audit},
      {"c10 simplex agrees with the vertex oracle on 200 programs",
       check_lp_against_vertices},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    g_detail.clear();
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string err;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      err = e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::string note = ok ? "" : (g_detail.empty() ? err : g_detail);
    std::printf("%s  %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", c.name, secs,
                note.empty() ? "" : " -- ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d of 10 criteria failed\n", failures);
  else std::printf("all 10 criteria passed\n");
  return failures ? 1 : 0;
}
