#include "gridcover/cover.hpp"

#include <algorithm>
#include <chrono>

#include "gridcover/error.hpp"

namespace gridcover {

LinearProgram build_primal(const CoverInstance& inst) {
  const long nl = inst.family.size();
  const long np = static_cast<long>(inst.grid.nonzero_points().size());
  LinearProgram p;
  p.objective.assign(nl, Rat(1));
  p.rows.assign(np, std::vector<Rat>(nl, Rat(0)));
  p.rhs.assign(np, Rat(1));
  for (long li = 0; li < nl; ++li)
    for (long pi : inst.family.incidence[li]) p.rows[pi][li] = 1;
  return p;
}

LinearProgram build_dual(const CoverInstance& inst) {
  const long nl = inst.family.size();
  const long np = static_cast<long>(inst.grid.nonzero_points().size());
  LinearProgram p;
  p.objective.assign(np, Rat(-1));
  p.rows.assign(nl, std::vector<Rat>(np, Rat(0)));
  p.rhs.assign(nl, Rat(-1));
  for (long li = 0; li < nl; ++li)
    for (long pi : inst.family.incidence[li]) p.rows[li][pi] = -1;
  return p;
}

Rat phi(const CoverInstance& inst) {
  LPSolution s = solve_lp(build_primal(inst));
  if (s.status != LPStatus::optimal)
    throw Error(ErrorKind::BadParameter, "coverage LP did not solve");
  return s.value;
}

Cover round_lp_to_cover(const CoverInstance& inst, const LPSolution& lp,
                        long k) {
  if (lp.status != LPStatus::optimal ||
      lp.primal.size() != static_cast<std::size_t>(inst.family.size()))
    throw Error(ErrorKind::DimensionMismatch, "solution does not fit family");
  Cover c;
  c.k = k;
  for (long li = 0; li < inst.family.size(); ++li) {
    if (lp.primal[li] <= 0) continue;
    long mult = ceil_long(Rat(k) * lp.primal[li]);
    if (mult > 0) c.entries[inst.family.lines[li]] = mult;
  }
  return c;
}

ReferenceBounds reference_bounds(const Grid& g, long k) {
  if (k < 1) throw Error(ErrorKind::BadParameter, "k >= 1 required");
  const long n = g.n(), m = g.m();
  return ReferenceBounds{
      (n - 1) + (m - 1) + k - 1,
      k * ((n - 1) + (m - 1)),
      (n - 1) + (m - 1) + (k - 1) * std::max(n - 1, m - 1),
  };
}

namespace {

// Multiplicity vector -> Cover.
Cover to_cover(const CoverInstance& inst, const std::vector<long>& mult,
               long k) {
  Cover c;
  c.k = k;
  for (long li = 0; li < inst.family.size(); ++li)
    if (mult[li] > 0) c.entries[inst.family.lines[li]] = mult[li];
  return c;
}

bool covers_k(const CoverInstance& inst, const std::vector<long>& mult) {
  std::vector<long> cov(inst.grid.nonzero_points().size(), 0);
  for (long li = 0; li < inst.family.size(); ++li)
    if (mult[li] > 0)
      for (long pi : inst.family.incidence[li]) cov[pi] += mult[li];
  return std::all_of(cov.begin(), cov.end(),
                     [&](long c) { return c >= inst.k; });
}

}  // namespace

IlpResult solve_ilp(const CoverInstance& inst,
                    const std::optional<Cover>& warm_start,
                    const IlpOptions& opts) {
  if (inst.k < 1) throw Error(ErrorKind::BadParameter, "k >= 1 required");
  const long nl = inst.family.size();
  const auto t_start = std::chrono::steady_clock::now();
  auto out_of_time = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         t_start)
               .count() > opts.time_budget_secs;
  };

  // Shared program: root coverage rows with rhs k; branch rows are pushed and
  // popped along the DFS path so the root part is never copied.
  LinearProgram lp = build_primal(inst);
  for (auto& r : lp.rhs) r = inst.k;

  IlpResult res;
  LPSolution root = solve_lp(lp);
  if (root.status != LPStatus::optimal)
    throw Error(ErrorKind::BadParameter, "root relaxation did not solve");
  res.lp_root = root.value / inst.k;
  res.lower_bound = ceil_long(root.value);

  std::vector<long> incumbent;
  long inc_size = 0;
  auto adopt = [&](const std::vector<long>& mult) {
    long s = 0;
    for (long v : mult) s += v;
    if (incumbent.empty() || s < inc_size) {
      incumbent = mult;
      inc_size = s;
    }
  };
  if (warm_start) {
    if (warm_start->k != inst.k)
      throw Error(ErrorKind::BadParameter, "warm start has wrong k");
    std::vector<long> mult(nl, 0);
    std::map<Line, long> index;
    for (long li = 0; li < nl; ++li) index[inst.family.lines[li]] = li;
    for (const auto& [ln, m] : warm_start->entries) {
      auto it = index.find(ln);
      if (it == index.end())
        throw Error(ErrorKind::BadParameter, "warm start line outside family");
      mult[it->second] = m;
    }
    if (!covers_k(inst, mult))
      throw Error(ErrorKind::BadParameter, "warm start is not a k-cover");
    adopt(mult);
  } else {
    Cover c = round_lp_to_cover(inst, root, inst.k);
    std::vector<long> mult(nl, 0);
    long li = 0;
    for (const auto& [ln, m] : c.entries) {
      while (!(inst.family.lines[li] == ln)) ++li;
      mult[li] = m;
    }
    adopt(mult);
  }

  // DFS over branch decisions. Each frame appends one row x_j >= lo or
  // -x_j >= -hi to lp; unwinding pops it.
  struct Frame {
    long var;
    long bound;
    bool lower;   // x >= bound vs x <= bound
    bool second;  // both children issued
  };
  std::vector<Frame> stack;
  bool aborted = false;

  auto push_row = [&](long var, long bound, bool lower) {
    std::vector<Rat> row(nl, Rat(0));
    row[var] = lower ? 1 : -1;
    lp.rows.push_back(std::move(row));
    lp.rhs.emplace_back(lower ? bound : -bound);
  };
  auto pop_row = [&] {
    lp.rows.pop_back();
    lp.rhs.pop_back();
  };

  // Evaluate the node described by the current lp; returns the branch frame
  // to descend into, or nullopt to backtrack.
  auto evaluate = [&]() -> std::optional<Frame> {
    ++res.nodes_explored;
    LPSolution s = solve_lp(lp);
    if (s.status == LPStatus::infeasible) return std::nullopt;
    if (ceil_long(s.value) >= inc_size && !incumbent.empty())
      return std::nullopt;
    long frac_var = -1;
    Rat best_gap(1);
    for (long j = 0; j < nl; ++j) {
      if (is_integer(s.primal[j])) continue;
      Rat frac = s.primal[j] - Rat(rat_floor(s.primal[j]));
      Rat gap = abs(frac - Rat(1, 2));
      if (frac_var < 0 || gap < best_gap) {
        frac_var = j;
        best_gap = gap;
      }
    }
    if (frac_var < 0) {
      std::vector<long> mult(nl);
      for (long j = 0; j < nl; ++j) mult[j] = to_long(Int(s.primal[j].get_num()));
      adopt(mult);
      return std::nullopt;
    }
    return Frame{frac_var, ceil_long(s.primal[frac_var]), true, false};
  };

  if (auto f = evaluate()) {
    push_row(f->var, f->bound, f->lower);
    stack.push_back(*f);
  }
  while (!stack.empty()) {
    if (res.nodes_explored >= opts.node_budget || out_of_time()) {
      aborted = true;
      break;
    }
    if (auto f = evaluate()) {
      push_row(f->var, f->bound, f->lower);
      stack.push_back(*f);
      continue;
    }
    // Backtrack: flip the deepest unflipped frame to its lower child.
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      pop_row();
      if (!f.second) {
        Frame down{f.var, f.bound - 1, false, true};
        push_row(down.var, down.bound, down.lower);
        stack.push_back(down);
        break;
      }
    }
  }

  res.optimal = !aborted;
  res.optimum = inc_size;
  res.cover = to_cover(inst, incumbent, inst.k);
  if (res.optimal) res.lower_bound = res.optimum;
  return res;
}

}  // namespace gridcover
