#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "gridcover/error.hpp"
#include "gridcover/harness.hpp"
#include "gridcover/io.hpp"

namespace gc = gridcover;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;   // a check came back negative
constexpr int kUsage = 2;     // bad invocation or input
constexpr int kBudget = 3;    // ran out of nodes or time

// Grid selection shared by most subcommands; exactly one source.
struct GridArgs {
  long standard_n = 0;
  long exp_n = 0;
  long quad_n = 0;
  std::vector<long> generic_nm;
  std::uint64_t seed = 1;
  std::string file;

  void attach(CLI::App* cmd) {
    auto* grp = cmd->add_option_group("grid", "grid selection");
    grp->add_option("--standard", standard_n, "axes {0..n-1} x {0..n-1}");
    grp->add_option("--exp", exp_n, "axes {0,1,2,4,...,2^(n-2)}");
    grp->add_option("--quad", quad_n, "axes {0,1,4,...,(n-1)^2}");
    grp->add_option("--generic", generic_nm, "seeded generic n m")
        ->expected(2);
    grp->require_option(0, 1);
    cmd->add_option("--seed", seed, "seed for --generic");
    cmd->add_option("--file", file, "grid json file");
  }

  bool any() const {
    return standard_n || exp_n || quad_n || !generic_nm.empty() ||
           !file.empty();
  }

  gc::Grid build() const {
    int sources = (standard_n != 0) + (exp_n != 0) + (quad_n != 0) +
                  (!generic_nm.empty()) + (!file.empty());
    if (sources != 1)
      throw gc::Error(gc::ErrorKind::BadParameter,
                      "pick exactly one grid source");
    if (standard_n) return gc::standard_grid(standard_n);
    if (exp_n) return gc::named_grid(gc::NamedGridKind::exponential, exp_n);
    if (quad_n) return gc::named_grid(gc::NamedGridKind::quadratic, quad_n);
    if (!generic_nm.empty())
      return gc::generic_grid(generic_nm[0], generic_nm[1], seed);
    return gc::load_grid(file);
  }
};

gc::LineFamily family_for(const gc::Grid& g, bool restricted) {
  return gc::build_family(g, restricted ? "restricted" : "full");
}

double budget_secs(double fallback) {
  const char* env = std::getenv("GRIDCOVER_BUDGET_SECS");
  if (!env) return fallback;
  char* end = nullptr;
  double v = std::strtod(env, &end);
  if (end == env || v <= 0)
    throw gc::Error(gc::ErrorKind::BadParameter,
                    "GRIDCOVER_BUDGET_SECS must be a positive number");
  return v;
}

std::string maybe_float(const gc::Rat& r, bool want) {
  std::string s = gc::rat_str(r);
  if (want) s += " (" + std::to_string(gc::to_double(r)) + ")";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact minimum line covers of rational grids"};
  app.require_subcommand(1);

  GridArgs grid_args;
  bool restricted = false;
  bool want_float = false;
  long k = 1;
  std::string out_path;

  auto* c_lines = app.add_subcommand("lines", "enumerate the line family");
  grid_args.attach(c_lines);
  c_lines->add_flag("--restricted", restricted,
                    "verticals, horizontals, slope -1 only");
  c_lines->add_option("--out", out_path, "also write the listing here");

  auto* c_phi = app.add_subcommand("phi", "fractional cover optimum");
  grid_args.attach(c_phi);
  c_phi->add_flag("--restricted", restricted, "restricted family");
  c_phi->add_flag("--float", want_float, "append a decimal approximation");

  auto* c_cov = app.add_subcommand("cov", "minimum k-cover size");
  grid_args.attach(c_cov);
  c_cov->add_option("-k,--k", k, "coverage multiplicity")->required();
  c_cov->add_flag("--restricted", restricted, "restricted family");

  auto* c_construct =
      app.add_subcommand("construct", "build a named cover and verify it");
  std::string constr_name;
  std::optional<long> t_param;
  c_construct->add_option("name", constr_name,
                          "wide | biregular | square32 | standard")
      ->required();
  grid_args.attach(c_construct);
  c_construct->add_option("-k,--k", k, "coverage multiplicity")->required();
  long t_raw = -1;
  c_construct->add_option("--t", t_raw, "window parameter for standard");
  c_construct->add_option("--out", out_path, "write the cover file here");

  auto* c_certify =
      app.add_subcommand("certify", "build a weighting and verify it");
  std::string cert_name;
  long cert_n = 0;
  long delta_param = -1;
  c_certify->add_option("name", cert_name,
                        "generic | square | delta | standard | restricted")
      ->required();
  c_certify->add_option("n", cert_n, "standard grid size shorthand");
  grid_args.attach(c_certify);
  c_certify->add_option("--t", t_raw, "window parameter for square");
  c_certify->add_option("--delta", delta_param,
                        "defect bound for the delta weighting");
  c_certify->add_flag("--float", want_float, "append decimal approximations");
  bool audit_full = false;
  c_certify->add_flag("--audit-full", audit_full,
                      "also audit the weighting against the full line family");
  c_certify->add_option("--out", out_path, "write the weighting json here");

  auto* c_delta = app.add_subcommand("delta", "genericity defect of a grid");
  grid_args.attach(c_delta);

  auto* c_bounds = app.add_subcommand("bounds", "reference cover bounds");
  grid_args.attach(c_bounds);
  c_bounds->add_option("-k,--k", k, "coverage multiplicity")->required();

  auto* c_exp = app.add_subcommand("experiment", "run an experiment suite");
  std::string exp_id;
  std::string exp_dir = ".";
  std::string exp_format = "both";
  int jobs = 1;
  c_exp->add_option("id", exp_id, "E1..E6 or all")->required();
  c_exp->add_option("--out", exp_dir, "output directory");
  c_exp->add_option("--format", exp_format, "csv | json | both");
  c_exp->add_option("--jobs", jobs, "worker threads")
      ->check(CLI::Range(1, 64));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_lines) {
      gc::Grid g = grid_args.build();
      gc::LineFamily fam = family_for(g, restricted);
      std::string text = std::to_string(fam.size()) + "\n";
      for (const gc::Line& ln : fam.lines) text += gc::line_str(ln) + "\n";
      std::cout << text;
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f)
          throw gc::Error(gc::ErrorKind::IoError, "cannot write " + out_path);
        f << text;
      }
      return kOk;
    }

    if (*c_phi) {
      gc::Grid g = grid_args.build();
      gc::CoverInstance inst{g, family_for(g, restricted), 1};
      std::cout << maybe_float(gc::phi(inst), want_float) << "\n";
      return kOk;
    }

    if (*c_cov) {
      gc::Grid g = grid_args.build();
      gc::CoverInstance inst{g, family_for(g, restricted), k};
      gc::IlpOptions opts;
      opts.time_budget_secs = budget_secs(opts.time_budget_secs);
      gc::IlpResult res = gc::solve_ilp(inst, std::nullopt, opts);
      std::cout << res.optimum << "\n";
      if (!res.optimal) {
        std::cerr << "status=timeout lower_bound=" << res.lower_bound
                  << " nodes=" << res.nodes_explored << "\n";
        return kBudget;
      }
      return kOk;
    }

    if (*c_construct) {
      gc::Grid g = grid_args.build();
      if (t_raw >= 0) t_param = t_raw;
      gc::Cover cov;
      if (constr_name == "wide")
        cov = gc::construct_wide(g, k);
      else if (constr_name == "biregular")
        cov = gc::construct_biregular(g, k);
      else if (constr_name == "square32")
        cov = gc::construct_square_threehalves(g, k);
      else if (constr_name == "standard")
        cov = gc::construct_standard(g.n(), k, t_param);
      else
        throw gc::Error(gc::ErrorKind::BadParameter,
                        "unknown construction " + constr_name);
      gc::CoverReport rep = gc::verify_cover(g, cov);
      std::cout << "size=" << cov.size() << " valid="
                << (rep.valid ? "true" : "false") << "\n";
      if (!out_path.empty()) gc::save_cover(cov, g, out_path);
      return rep.valid ? kOk : kInvalid;
    }

    if (*c_certify) {
      gc::Grid g = cert_n > 0 ? gc::standard_grid(cert_n) : grid_args.build();
      if (t_raw >= 0) t_param = t_raw;
      bool feasible = false;
      auto print_full_audit = [&](const gc::Weighting& wt) {
        gc::AuditReport rep = gc::audit_weighting(g, wt);
        std::cout << "audit_full="
                  << (rep.report.feasible ? "feasible" : "infeasible")
                  << " violations=" << rep.report.violations.size();
        std::string slopes;
        for (const auto& [slope, count] : rep.violations_by_slope)
          slopes += (slopes.empty() ? "" : ",") + slope + ":" +
                    std::to_string(count);
        if (!slopes.empty()) std::cout << " slopes=" << slopes;
        std::cout << "\n";
      };
      if (cert_name == "restricted") {
        gc::RestrictedCertificate cert = gc::weight_restricted(g.n());
        gc::WeightingReport rep = gc::verify_weighting(
            g, gc::build_family(g, "restricted"), cert.weighting);
        feasible = rep.feasible;
        std::cout << "t=" << cert.t << " z=" << gc::rat_str(cert.z)
                  << " total=" << maybe_float(cert.weighting.total, want_float)
                  << " feasible=" << (feasible ? "true" : "false") << "\n";
        if (audit_full) print_full_audit(cert.weighting);
        if (!out_path.empty())
          gc::save_weighting(g, cert.weighting, out_path);
      } else {
        gc::Weighting wt;
        if (cert_name == "generic")
          wt = gc::weight_generic(g);
        else if (cert_name == "square")
          wt = gc::weight_square_claim(g, t_param);
        else if (cert_name == "delta")
          wt = gc::weight_delta_generic(
              g, delta_param >= 0 ? delta_param : gc::delta_genericity(g));
        else if (cert_name == "standard")
          wt = gc::weight_standard(g.n());
        else
          throw gc::Error(gc::ErrorKind::BadParameter,
                          "unknown certificate " + cert_name);
        gc::WeightingReport rep =
            gc::verify_weighting(g, gc::build_family(g, "full"), wt);
        feasible = rep.feasible;
        std::cout << "total=" << maybe_float(wt.total, want_float)
                  << " feasible=" << (feasible ? "true" : "false") << "\n";
        if (audit_full) print_full_audit(wt);
        if (!out_path.empty()) gc::save_weighting(g, wt, out_path);
      }
      return feasible ? kOk : kInvalid;
    }

    if (*c_delta) {
      gc::Grid g = grid_args.build();
      std::cout << gc::delta_genericity(g) << "\n";
      return kOk;
    }

    if (*c_bounds) {
      gc::Grid g = grid_args.build();
      gc::ReferenceBounds rb = gc::reference_bounds(g, k);
      std::cout << "trivial_lower=" << rb.trivial_lower
                << " trivial_upper=" << rb.trivial_upper
                << " ball_serra=" << rb.ball_serra << "\n";
      return kOk;
    }

    if (*c_exp) {
      std::vector<gc::ExperimentSpec> suite = gc::experiment_suite();
      std::vector<gc::ResultRow> rows;
      bool found = false;
      for (const auto& spec : suite) {
        if (exp_id != "all" && spec.id != exp_id) continue;
        found = true;
        gc::ExperimentSpec run = spec;
        run.budgets.time_budget_secs =
            budget_secs(run.budgets.time_budget_secs);
        std::vector<gc::ResultRow> rs = gc::run_experiment(run, jobs);
        rows.insert(rows.end(), rs.begin(), rs.end());
        std::cerr << spec.id << ": " << rs.size() << " rows\n";
      }
      if (!found)
        throw gc::Error(gc::ErrorKind::BadParameter,
                        "unknown experiment " + exp_id);
      if (exp_format == "csv" || exp_format == "both")
        gc::export_results(rows, "csv", exp_dir + "/results.csv");
      if (exp_format == "json" || exp_format == "both")
        gc::export_results(rows, "json", exp_dir + "/results.json");
      if (exp_format != "csv" && exp_format != "json" && exp_format != "both")
        throw gc::Error(gc::ErrorKind::BadParameter,
                        "format must be csv, json or both");
      bool timed_out = false;
      for (const auto& r : rows)
        if (r.ilp_status == "timeout") timed_out = true;
      std::cout << rows.size() << " rows -> " << exp_dir << "\n";
      return timed_out ? kBudget : kOk;
    }
  } catch (const gc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case gc::ErrorKind::BudgetExceeded:
        return kBudget;
      case gc::ErrorKind::IoError:
      case gc::ErrorKind::BadParameter:
      case gc::ErrorKind::MissingOrigin:
      case gc::ErrorKind::TooSmall:
      case gc::ErrorKind::DuplicateEntry:
      case gc::ErrorKind::NotStandardGrid:
      case gc::ErrorKind::NotSquare:
      case gc::ErrorKind::DimensionMismatch:
        return kUsage;
      default:
        return kInvalid;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  }
  return kUsage;
}
