#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "gridcover/certificates.hpp"
#include "gridcover/constructions.hpp"
#include "gridcover/cover.hpp"

namespace gridcover {

enum class GridKind { standard, exponential, quadratic, generic };

std::string to_string(GridKind k);

// One (grid, k) computation. tasks come from a small vocabulary: "phi",
// "ilp", "bounds", "cert:generic", "cert:square", "cert:standard",
// "cert:restricted", "cert:delta", "constr:wide", "constr:biregular",
// "constr:square32", "constr:standard", "audit:restricted" (standard squares
// only; emits the restricted total plus per-slope violation rows). kind
// standard means axes {0..n-1} x {0..m-1}.
struct CellSpec {
  GridKind kind = GridKind::standard;
  long n = 2;
  long m = 2;
  std::optional<std::uint64_t> seed;
  long k = 1;
  std::string family = "full";  // "full" | "restricted"
  std::set<std::string> tasks;
};

struct ExperimentSpec {
  std::string id;
  std::string description;
  std::vector<CellSpec> cells;
  IlpOptions budgets;
};

// Flat result record, one or more per cell: the first row of a cell carries
// phi/ilp/bounds plus the first certificate and construction; extra
// artifacts repeat the identity columns on their own rows.
struct ResultRow {
  std::string experiment;
  std::string kind;
  long n = 0;
  long m = 0;
  std::optional<std::uint64_t> seed;
  long k = 1;
  std::string family;
  std::optional<Rat> phi;
  std::optional<long> ilp;
  std::string ilp_status;  // "optimal" | "timeout" | ""
  std::optional<std::string> cert_name;
  std::optional<Rat> cert_total;
  std::optional<std::string> constr_name;
  std::optional<long> constr_size;
  std::optional<long> trivial_lb;
  std::optional<long> trivial_ub;
  std::optional<long> ball_serra;

  bool operator==(const ResultRow& o) const;
};

Grid build_grid(const CellSpec& cell);
LineFamily build_family(const Grid& g, const std::string& family);

// Runs every cell, optionally across jobs threads. Row order is the cell
// order regardless of thread count; everything inside is deterministic.
std::vector<ResultRow> run_experiment(const ExperimentSpec& spec,
                                      int jobs = 1);

// The fixed suite E1..E6.
std::vector<ExperimentSpec> experiment_suite();

// Smallest k-cover by depth-first search over the family, branching on the
// first under-covered point. Independent of the LP machinery; meant for
// small instances. nullopt when nothing of size <= size_cap exists.
std::optional<long> oracle_exhaustive_cov(const Grid& g,
                                          const LineFamily& fam, long k,
                                          long size_cap);

std::string results_csv(const std::vector<ResultRow>& rows);
// format: "csv" or "json".
void export_results(const std::vector<ResultRow>& rows,
                    const std::string& format, const std::string& path);
std::vector<ResultRow> import_results_json(const std::string& path);

}  // namespace gridcover
