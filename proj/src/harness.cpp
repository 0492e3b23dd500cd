#include "gridcover/harness.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "gridcover/error.hpp"
#include "gridcover/io.hpp"

namespace gridcover {

std::string to_string(GridKind k) {
  switch (k) {
    case GridKind::standard: return "standard";
    case GridKind::exponential: return "exponential";
    case GridKind::quadratic: return "quadratic";
    case GridKind::generic: return "generic";
  }
  return "?";
}

bool ResultRow::operator==(const ResultRow& o) const {
  return experiment == o.experiment && kind == o.kind && n == o.n &&
         m == o.m && seed == o.seed && k == o.k && family == o.family &&
         phi == o.phi && ilp == o.ilp && ilp_status == o.ilp_status &&
         cert_name == o.cert_name && cert_total == o.cert_total &&
         constr_name == o.constr_name && constr_size == o.constr_size &&
         trivial_lb == o.trivial_lb && trivial_ub == o.trivial_ub &&
         ball_serra == o.ball_serra;
}

Grid build_grid(const CellSpec& cell) {
  switch (cell.kind) {
    case GridKind::standard: {
      std::vector<Rat> s1, s2;
      for (long i = 0; i < cell.n; ++i) s1.emplace_back(i);
      for (long j = 0; j < cell.m; ++j) s2.emplace_back(j);
      return Grid(std::move(s1), std::move(s2));
    }
    case GridKind::exponential:
      return named_grid(NamedGridKind::exponential, cell.n);
    case GridKind::quadratic:
      return named_grid(NamedGridKind::quadratic, cell.n);
    case GridKind::generic:
      if (!cell.seed)
        throw Error(ErrorKind::BadParameter, "generic cell needs a seed");
      return generic_grid(cell.n, cell.m, *cell.seed);
  }
  throw Error(ErrorKind::BadParameter, "unknown grid kind");
}

LineFamily build_family(const Grid& g, const std::string& family) {
  if (family == "full") return enumerate_lines(g);
  if (family == "restricted")
    return restricted_lines(g, {SlopeClass::horizontal, SlopeClass::vertical,
                                SlopeClass::minus_one});
  throw Error(ErrorKind::BadParameter, "family must be full or restricted");
}

namespace {

bool is_standard_square(const Grid& g) {
  if (g.n() != g.m()) return false;
  for (long i = 0; i < g.n(); ++i)
    if (g.s1()[i] != i || g.s2()[i] != i) return false;
  return true;
}

Cover named_construction(const std::string& name, const Grid& g, long k) {
  if (name == "wide") return construct_wide(g, k);
  if (name == "biregular") return construct_biregular(g, k);
  if (name == "square32") return construct_square_threehalves(g, k);
  if (name == "standard") return construct_standard(g.n(), k);
  throw Error(ErrorKind::BadParameter, "unknown construction " + name);
}

Weighting named_certificate(const std::string& name, const Grid& g) {
  if (name == "generic") return weight_generic(g);
  if (name == "square") return weight_square_claim(g);
  if (name == "delta") return weight_delta_generic(g, delta_genericity(g));
  if (name == "standard") return weight_standard(g.n());
  if (name == "restricted") return weight_restricted(g.n()).weighting;
  throw Error(ErrorKind::BadParameter, "unknown certificate " + name);
}

// Best valid cover usable as a warm start for (g, family, k): candidate
// constructions whose lines live inside the family, and for the full family
// on a standard square the restricted optimum, solved first on the small
// subfamily. Deterministic.
std::optional<Cover> warm_cover(const Grid& g, const std::string& family,
                                long k, const IlpOptions& opts) {
  std::vector<Cover> cands;
  auto consider = [&](Cover c) {
    if (verify_cover(g, c).valid) cands.push_back(std::move(c));
  };
  if (is_standard_square(g)) {
    consider(construct_standard(g.n(), k));
    consider(construct_square_threehalves(g, k));
  } else if (family == "full") {
    if (g.n() >= (k - 1) * (g.m() - 1) + 1) consider(construct_wide(g, k));
    long gg = std::gcd(g.n() - 1, g.m() - 1);
    if (k % ((g.n() - 1) / gg + (g.m() - 1) / gg) == 0)
      consider(construct_biregular(g, k));
  }
  if (family == "full" && is_standard_square(g)) {
    CoverInstance sub{g, build_family(g, "restricted"), k};
    std::optional<Cover> warm;
    if (!cands.empty())
      warm = *std::min_element(cands.begin(), cands.end(),
                               [](const Cover& a, const Cover& b) {
                                 return a.size() < b.size();
                               });
    IlpResult sub_res = solve_ilp(sub, warm, opts);
    if (sub_res.optimal) cands.push_back(sub_res.cover);
  }
  if (cands.empty()) return std::nullopt;
  return *std::min_element(cands.begin(), cands.end(),
                           [](const Cover& a, const Cover& b) {
                             return a.size() < b.size();
                           });
}

std::vector<ResultRow> run_cell(const std::string& experiment,
                                const CellSpec& cell,
                                const IlpOptions& opts) {
  Grid g = build_grid(cell);
  ResultRow base;
  base.experiment = experiment;
  base.kind = to_string(cell.kind);
  base.n = cell.n;
  base.m = cell.m;
  base.seed = cell.seed;
  base.k = cell.k;
  base.family = cell.family;

  if (cell.tasks.count("bounds")) {
    ReferenceBounds rb = reference_bounds(g, cell.k);
    base.trivial_lb = rb.trivial_lower;
    base.trivial_ub = rb.trivial_upper;
    base.ball_serra = rb.ball_serra;
  }

  bool need_family = cell.tasks.count("phi") || cell.tasks.count("ilp");
  std::optional<LineFamily> fam;
  if (need_family) fam = build_family(g, cell.family);

  if (cell.tasks.count("phi")) {
    CoverInstance inst{g, *fam, cell.k};
    base.phi = phi(inst);
  }
  if (cell.tasks.count("ilp")) {
    CoverInstance inst{g, *fam, cell.k};
    IlpResult res = solve_ilp(inst, warm_cover(g, cell.family, cell.k, opts),
                              opts);
    base.ilp = res.optimum;
    base.ilp_status = res.optimal ? "optimal" : "timeout";
  }

  // Artifact queues; the first of each rides on the base row.
  std::vector<std::pair<std::string, Rat>> certs;
  for (const std::string& t : cell.tasks) {
    if (t.rfind("cert:", 0) != 0) continue;
    std::string name = t.substr(5);
    Weighting wt = named_certificate(name, g);
    certs.emplace_back(name, wt.total);
  }
  if (cell.tasks.count("audit:restricted")) {
    if (!is_standard_square(g))
      throw Error(ErrorKind::BadParameter,
                  "audit:restricted needs a standard square cell");
    RestrictedCertificate cert = weight_restricted(g.n());
    AuditReport audit = audit_weighting(g, cert.weighting);
    certs.emplace_back("restricted", cert.weighting.total);
    if (audit.report.feasible) {
      certs.emplace_back("audit:clean", Rat(0));
    } else {
      for (const auto& [slope, count] : audit.violations_by_slope)
        certs.emplace_back("audit:slope=" + slope, Rat(count));
    }
  }
  std::vector<std::pair<std::string, long>> constrs;
  for (const std::string& t : cell.tasks) {
    if (t.rfind("constr:", 0) != 0) continue;
    std::string name = t.substr(7);
    Cover c = named_construction(name, g, cell.k);
    CoverReport rep = verify_cover(g, c);
    if (!rep.valid)
      throw Error(ErrorKind::HypothesisViolated,
                  "construction " + name + " failed verification");
    constrs.emplace_back(name, c.size());
  }

  std::vector<ResultRow> rows;
  rows.push_back(base);
  std::size_t extra = std::max(certs.size(), constrs.size());
  for (std::size_t i = 1; i < std::max<std::size_t>(extra, 1); ++i) {
    ResultRow r;
    r.experiment = base.experiment;
    r.kind = base.kind;
    r.n = base.n;
    r.m = base.m;
    r.seed = base.seed;
    r.k = base.k;
    r.family = base.family;
    rows.push_back(r);
  }
  for (std::size_t i = 0; i < certs.size(); ++i) {
    rows[i].cert_name = certs[i].first;
    rows[i].cert_total = certs[i].second;
  }
  for (std::size_t i = 0; i < constrs.size(); ++i) {
    rows[i].constr_name = constrs[i].first;
    rows[i].constr_size = constrs[i].second;
  }
  return rows;
}

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec, int jobs) {
  const std::size_t nc = spec.cells.size();
  std::vector<std::vector<ResultRow>> per_cell(nc);
  if (jobs <= 1) {
    for (std::size_t i = 0; i < nc; ++i)
      per_cell[i] = run_cell(spec.id, spec.cells[i], spec.budgets);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (int w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = next++; i < nc; i = next++)
            per_cell[i] = run_cell(spec.id, spec.cells[i], spec.budgets);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  std::vector<ResultRow> rows;
  for (auto& rs : per_cell)
    rows.insert(rows.end(), rs.begin(), rs.end());
  return rows;
}

std::vector<ExperimentSpec> experiment_suite() {
  std::vector<ExperimentSpec> suite;

  {
    ExperimentSpec e;
    e.id = "E1";
    e.description = "wide rectangles: cover optimum meets k(n-1)+(m-1)";
    e.budgets.time_budget_secs = 300;
    for (long m = 2; m <= 4; ++m)
      for (long k = 1; k <= 4; ++k) {
        long base = std::max(2L, (k - 1) * (m - 1) + 1);
        for (long n : {base, base + 1}) {
          CellSpec c;
          c.kind = GridKind::standard;
          c.n = n;
          c.m = m;
          c.k = k;
          c.family = "full";
          c.tasks = {"ilp", "constr:wide", "bounds"};
          e.cells.push_back(c);
        }
      }
    suite.push_back(std::move(e));
  }

  {
    ExperimentSpec e;
    e.id = "E2";
    e.description = "generic grids at the smallest balanced k";
    e.budgets.time_budget_secs = 120;
    for (long m = 2; m <= 6; ++m)
      for (long n = m; n <= 6; ++n) {
        long gg = std::gcd(n - 1, m - 1);
        CellSpec c;
        c.kind = GridKind::generic;
        c.n = n;
        c.m = m;
        c.seed = 40000 + 100 * static_cast<std::uint64_t>(n) + m;
        c.k = (n + m - 2) / gg;
        c.family = "full";
        c.tasks = {"phi", "ilp", "cert:generic", "constr:biregular", "bounds"};
        e.cells.push_back(c);
      }
    suite.push_back(std::move(e));
  }

  {
    ExperimentSpec e;
    e.id = "E3";
    e.description = "reference lower bound gap tabulated across grid kinds";
    e.budgets.time_budget_secs = 300;
    auto add = [&](GridKind kind, long n, long m, long k,
                   std::optional<std::uint64_t> seed) {
      CellSpec c;
      c.kind = kind;
      c.n = n;
      c.m = m;
      c.seed = seed;
      c.k = k;
      c.family = "full";
      c.tasks = {"ilp", "bounds"};
      e.cells.push_back(c);
    };
    add(GridKind::standard, 3, 2, 2, std::nullopt);
    add(GridKind::standard, 4, 3, 2, std::nullopt);
    add(GridKind::standard, 4, 4, 2, std::nullopt);
    add(GridKind::standard, 5, 3, 3, std::nullopt);
    add(GridKind::generic, 4, 3, 2, 30403);
    add(GridKind::generic, 5, 4, 2, 30504);
    add(GridKind::exponential, 4, 4, 2, std::nullopt);
    add(GridKind::exponential, 5, 5, 2, std::nullopt);
    add(GridKind::quadratic, 4, 4, 2, std::nullopt);
    add(GridKind::quadratic, 5, 5, 2, std::nullopt);
    suite.push_back(std::move(e));
  }

  {
    ExperimentSpec e;
    e.id = "E4";
    e.description = "standard squares: exact relaxation values, certificate "
                    "and construction sandwich, restricted vs full optima";
    e.budgets.time_budget_secs = 600;
    for (long n = 2; n <= 8; ++n) {
      CellSpec c;
      c.kind = GridKind::standard;
      c.n = n;
      c.m = n;
      c.k = 1;
      c.family = "full";
      c.tasks = {"phi", "bounds"};
      e.cells.push_back(c);
    }
    for (long n = 4; n <= 6; ++n)
      for (long k : {2L, 3L}) {
        CellSpec c;
        c.kind = GridKind::standard;
        c.n = n;
        c.m = n;
        c.k = k;
        c.family = "full";
        c.tasks = {"ilp", "cert:standard", "constr:standard", "bounds"};
        e.cells.push_back(c);
      }
    for (long n = 2; n <= 6; ++n)
      for (long k = 1; k <= 4; ++k)
        for (const char* family : {"restricted", "full"}) {
          CellSpec c;
          c.kind = GridKind::standard;
          c.n = n;
          c.m = n;
          c.k = k;
          c.family = family;
          c.tasks = {"ilp"};
          e.cells.push_back(c);
        }
    suite.push_back(std::move(e));
  }

  {
    ExperimentSpec e;
    e.id = "E5";
    e.description = "defect-driven certificates on exponential and quadratic "
                    "grids";
    e.budgets.time_budget_secs = 120;
    for (auto kind : {GridKind::exponential, GridKind::quadratic}) {
      for (long n : {4L, 5L, 6L}) {
        CellSpec c;
        c.kind = kind;
        c.n = n;
        c.m = n;
        c.k = 1;
        c.family = "full";
        c.tasks = {"phi", "cert:delta", "bounds"};
        e.cells.push_back(c);
      }
      for (long n : {8L, 10L}) {
        CellSpec c;
        c.kind = kind;
        c.n = n;
        c.m = n;
        c.k = 1;
        c.family = "full";
        c.tasks = {"cert:delta", "bounds"};
        e.cells.push_back(c);
      }
    }
    suite.push_back(std::move(e));
  }

  {
    ExperimentSpec e;
    e.id = "E6";
    e.description = "restricted weighting audited against every line";
    e.budgets.time_budget_secs = 120;
    for (long n = 5; n <= 40; n += 5) {
      CellSpec c;
      c.kind = GridKind::standard;
      c.n = n;
      c.m = n;
      c.k = 1;
      c.family = "full";
      c.tasks = {"audit:restricted"};
      e.cells.push_back(c);
    }
    suite.push_back(std::move(e));
  }

  return suite;
}

std::optional<long> oracle_exhaustive_cov(const Grid& g,
                                          const LineFamily& fam, long k,
                                          long size_cap) {
  if (k < 1 || size_cap < 0)
    throw Error(ErrorKind::BadParameter, "k >= 1, size_cap >= 0 required");
  const long np = static_cast<long>(g.nonzero_points().size());
  std::vector<std::vector<long>> through(np);
  long max_pts = 1;
  for (long li = 0; li < fam.size(); ++li) {
    max_pts = std::max(max_pts, static_cast<long>(fam.incidence[li].size()));
    for (long pi : fam.incidence[li]) through[pi].push_back(li);
  }

  long best = size_cap + 1;
  std::vector<long> cov(np, 0);
  long nodes = 0;

  auto lower_bound_extra = [&]() {
    long max_def = 0, sum_def = 0;
    for (long p = 0; p < np; ++p) {
      long d = std::max(0L, k - cov[p]);
      max_def = std::max(max_def, d);
      sum_def += d;
    }
    return std::max(max_def, (sum_def + max_pts - 1) / max_pts);
  };

  auto dfs = [&](auto&& self, long total) -> void {
    if (++nodes > 20'000'000)
      throw Error(ErrorKind::BudgetExceeded, "oracle search too large");
    long p = -1;
    for (long q = 0; q < np; ++q)
      if (cov[q] < k) {
        p = q;
        break;
      }
    if (p < 0) {
      best = std::min(best, total);
      return;
    }
    if (total + lower_bound_extra() >= best) return;
    for (long li : through[p]) {
      for (long q : fam.incidence[li]) ++cov[q];
      self(self, total + 1);
      for (long q : fam.incidence[li]) --cov[q];
    }
  };
  dfs(dfs, 0);

  if (best > size_cap) return std::nullopt;
  return best;
}

namespace {

std::string opt_str(const std::optional<long>& v) {
  return v ? std::to_string(*v) : "";
}

}  // namespace

std::string results_csv(const std::vector<ResultRow>& rows) {
  std::string out =
      "experiment,kind,n,m,seed,k,family,phi,ilp,ilp_status,cert_name,"
      "cert_total,constr_name,constr_size,trivial_lb,trivial_ub,ball_serra\n";
  for (const ResultRow& r : rows) {
    out += r.experiment + ',' + r.kind + ',' + std::to_string(r.n) + ',' +
           std::to_string(r.m) + ',';
    out += r.seed ? std::to_string(*r.seed) : "";
    out += ',' + std::to_string(r.k) + ',' + r.family + ',';
    out += r.phi ? rat_str(*r.phi) : "";
    out += ',' + opt_str(r.ilp) + ',' + r.ilp_status + ',';
    out += r.cert_name.value_or("");
    out += ',';
    out += r.cert_total ? rat_str(*r.cert_total) : "";
    out += ',' + r.constr_name.value_or("") + ',' + opt_str(r.constr_size);
    out += ',' + opt_str(r.trivial_lb) + ',' + opt_str(r.trivial_ub) + ',' +
           opt_str(r.ball_serra) + '\n';
  }
  return out;
}

namespace {

nlohmann::json row_json(const ResultRow& r) {
  nlohmann::json j;
  j["experiment"] = r.experiment;
  j["kind"] = r.kind;
  j["n"] = r.n;
  j["m"] = r.m;
  j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json();
  j["k"] = r.k;
  j["family"] = r.family;
  j["phi"] = r.phi ? nlohmann::json(rat_str(*r.phi)) : nlohmann::json();
  j["ilp"] = r.ilp ? nlohmann::json(*r.ilp) : nlohmann::json();
  j["ilp_status"] = r.ilp_status;
  j["cert_name"] =
      r.cert_name ? nlohmann::json(*r.cert_name) : nlohmann::json();
  j["cert_total"] =
      r.cert_total ? nlohmann::json(rat_str(*r.cert_total)) : nlohmann::json();
  j["constr_name"] =
      r.constr_name ? nlohmann::json(*r.constr_name) : nlohmann::json();
  j["constr_size"] =
      r.constr_size ? nlohmann::json(*r.constr_size) : nlohmann::json();
  j["trivial_lb"] =
      r.trivial_lb ? nlohmann::json(*r.trivial_lb) : nlohmann::json();
  j["trivial_ub"] =
      r.trivial_ub ? nlohmann::json(*r.trivial_ub) : nlohmann::json();
  j["ball_serra"] =
      r.ball_serra ? nlohmann::json(*r.ball_serra) : nlohmann::json();
  return j;
}

ResultRow row_from_json(const nlohmann::json& j) {
  ResultRow r;
  r.experiment = j.at("experiment").get<std::string>();
  r.kind = j.at("kind").get<std::string>();
  r.n = j.at("n").get<long>();
  r.m = j.at("m").get<long>();
  if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  r.k = j.at("k").get<long>();
  r.family = j.at("family").get<std::string>();
  if (!j.at("phi").is_null())
    r.phi = parse_rat(j.at("phi").get<std::string>());
  if (!j.at("ilp").is_null()) r.ilp = j.at("ilp").get<long>();
  r.ilp_status = j.at("ilp_status").get<std::string>();
  if (!j.at("cert_name").is_null())
    r.cert_name = j.at("cert_name").get<std::string>();
  if (!j.at("cert_total").is_null())
    r.cert_total = parse_rat(j.at("cert_total").get<std::string>());
  if (!j.at("constr_name").is_null())
    r.constr_name = j.at("constr_name").get<std::string>();
  if (!j.at("constr_size").is_null())
    r.constr_size = j.at("constr_size").get<long>();
  if (!j.at("trivial_lb").is_null())
    r.trivial_lb = j.at("trivial_lb").get<long>();
  if (!j.at("trivial_ub").is_null())
    r.trivial_ub = j.at("trivial_ub").get<long>();
  if (!j.at("ball_serra").is_null())
    r.ball_serra = j.at("ball_serra").get<long>();
  return r;
}

}  // namespace

void export_results(const std::vector<ResultRow>& rows,
                    const std::string& format, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::IoError, "cannot write " + path);
  if (format == "csv") {
    f << results_csv(rows);
  } else if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const ResultRow& r : rows) arr.push_back(row_json(r));
    f << arr.dump(2) << '\n';
  } else {
    throw Error(ErrorKind::BadParameter, "format must be csv or json");
  }
}

std::vector<ResultRow> import_results_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::IoError, "cannot read " + path);
  nlohmann::json arr;
  try {
    f >> arr;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::IoError, std::string("bad results json: ") + e.what());
  }
  std::vector<ResultRow> rows;
  for (const auto& j : arr) rows.push_back(row_from_json(j));
  return rows;
}

}  // namespace gridcover
