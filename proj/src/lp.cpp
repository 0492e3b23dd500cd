#include "gridcover/lp.hpp"

#include <algorithm>

#include "gridcover/error.hpp"

namespace gridcover {

namespace {

void check_dims(const LinearProgram& p) {
  const std::size_t nv = p.objective.size();
  if (p.rows.size() != p.rhs.size())
    throw Error(ErrorKind::DimensionMismatch, "rows vs rhs");
  for (const auto& r : p.rows)
    if (r.size() != nv) throw Error(ErrorKind::DimensionMismatch, "row width");
  if (!p.upper_bounds.empty() && p.upper_bounds.size() != nv)
    throw Error(ErrorKind::DimensionMismatch, "upper_bounds width");
}

// rows . x >= rhs with each finite upper bound appended as -x_j >= -u_j, in
// ascending j. Dual entries follow the same order.
struct Expanded {
  std::vector<const std::vector<Rat>*> rows;  // nullptr marks a bound row
  std::vector<long> bound_var;                // var of each bound row
  std::vector<Rat> rhs;
};

Expanded expand(const LinearProgram& p) {
  Expanded e;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    e.rows.push_back(&p.rows[i]);
    e.bound_var.push_back(-1);
    e.rhs.push_back(p.rhs[i]);
  }
  for (std::size_t j = 0; j < p.upper_bounds.size(); ++j) {
    if (!p.upper_bounds[j]) continue;
    e.rows.push_back(nullptr);
    e.bound_var.push_back(static_cast<long>(j));
    e.rhs.push_back(-*p.upper_bounds[j]);
  }
  return e;
}

Rat row_coeff(const Expanded& e, std::size_t i, long j) {
  if (e.rows[i]) return (*e.rows[i])[j];
  return e.bound_var[i] == j ? Rat(-1) : Rat(0);
}

// Dense simplex tableau. Columns: structural | surplus (one per row) |
// artificial (rows kept in + orientation only). Rows are sign-normalized so
// b >= 0 throughout.
struct Tableau {
  long nv = 0, nr = 0, ncols = 0;
  std::vector<std::vector<Rat>> A;  // nr x ncols, current
  std::vector<Rat> b;               // nr
  std::vector<Rat> z;               // ncols, reduced costs
  Rat zval;                         // current objective
  std::vector<long> basis;          // nr
  std::vector<int> sign;            // nr, +-1 applied to each input row
  std::vector<long> art_col;        // nr, -1 if the row has no artificial
  long first_art = 0;

  bool artificial(long col) const { return col >= first_art; }

  void pivot(long r, long col) {
    Rat pv = A[r][col];
    for (long j = 0; j < ncols; ++j) A[r][j] /= pv;
    b[r] /= pv;
    for (long i = 0; i < nr; ++i) {
      if (i == r || A[i][col] == 0) continue;
      Rat f = A[i][col];
      for (long j = 0; j < ncols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    if (z[col] != 0) {
      Rat f = z[col];
      for (long j = 0; j < ncols; ++j) z[j] -= f * A[r][j];
      zval += f * b[r];  // b[r] is already the pivot ratio here
    }
    basis[r] = col;
  }

  // Reduced costs for cost vector c (indexed over all columns).
  void load_costs(const std::vector<Rat>& c) {
    z = c;
    zval = 0;
    for (long i = 0; i < nr; ++i) {
      const Rat& cb = c[basis[i]];
      if (cb == 0) continue;
      for (long j = 0; j < ncols; ++j) z[j] -= cb * A[i][j];
      zval += cb * b[i];
    }
  }
};

constexpr int kStallLimit = 32;

enum class PivotOutcome { optimal, unbounded };

// allow(j) filters entering candidates. Returns optimal when no reduced cost
// is negative among allowed columns.
template <class Allow>
PivotOutcome run_simplex(Tableau& t, Allow allow) {
  int stall = 0;
  bool bland = false;
  while (true) {
    long enter = -1;
    if (bland) {
      for (long j = 0; j < t.ncols; ++j)
        if (allow(j) && t.z[j] < 0) {
          enter = j;
          break;
        }
    } else {
      for (long j = 0; j < t.ncols; ++j)
        if (allow(j) && t.z[j] < 0 && (enter < 0 || t.z[j] < t.z[enter]))
          enter = j;
    }
    if (enter < 0) return PivotOutcome::optimal;

    long leave = -1;
    Rat best;
    for (long i = 0; i < t.nr; ++i) {
      if (t.A[i][enter] <= 0) continue;
      Rat ratio = t.b[i] / t.A[i][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && t.basis[i] < t.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return PivotOutcome::unbounded;

    bool degenerate = t.b[leave] == 0;
    t.pivot(leave, enter);
    if (degenerate) {
      if (!bland && ++stall >= kStallLimit) bland = true;
    } else {
      stall = 0;
      bland = false;
    }
  }
}

}  // namespace

LPSolution solve_lp(const LinearProgram& p) {
  check_dims(p);
  const Expanded e = expand(p);
  const long nv = static_cast<long>(p.objective.size());
  const long nr = static_cast<long>(e.rows.size());

  Tableau t;
  t.nv = nv;
  t.nr = nr;
  t.sign.assign(nr, 1);
  t.art_col.assign(nr, -1);
  long nart = 0;
  for (long i = 0; i < nr; ++i)
    if (e.rhs[i] > 0) ++nart;  // negative or zero rhs rows start on surplus
  t.first_art = nv + nr;
  t.ncols = nv + nr + nart;
  t.A.assign(nr, std::vector<Rat>(t.ncols, Rat(0)));
  t.b.resize(nr);
  t.basis.resize(nr);

  long next_art = t.first_art;
  for (long i = 0; i < nr; ++i) {
    int s = e.rhs[i] > 0 ? 1 : -1;
    t.sign[i] = s;
    for (long j = 0; j < nv; ++j) {
      Rat c = row_coeff(e, i, j);
      if (c != 0) t.A[i][j] = s > 0 ? c : -c;
    }
    t.A[i][nv + i] = -s;  // surplus
    t.b[i] = s > 0 ? e.rhs[i] : -e.rhs[i];
    if (s > 0) {
      t.art_col[i] = next_art;
      t.A[i][next_art] = 1;
      t.basis[i] = next_art;
      ++next_art;
    } else {
      t.basis[i] = nv + i;
    }
  }
  // Initial columns, kept for the dual solve after pivoting scrambles A.
  std::vector<std::vector<Rat>> A0 = t.A;

  LPSolution sol;

  // Phase 1: drive artificial variables to zero.
  if (nart > 0) {
    std::vector<Rat> c1(t.ncols, Rat(0));
    for (long j = t.first_art; j < t.ncols; ++j) c1[j] = 1;
    t.load_costs(c1);
    run_simplex(t, [](long) { return true; });
    if (t.zval != 0) {
      sol.status = LPStatus::infeasible;
      return sol;
    }
    // Basic artificials sit at zero; pivot them out where the row still has
    // structure, otherwise the row is redundant and stays frozen.
    for (long i = 0; i < nr; ++i) {
      if (!t.artificial(t.basis[i])) continue;
      for (long j = 0; j < t.first_art; ++j) {
        if (t.A[i][j] != 0) {
          t.pivot(i, j);
          break;
        }
      }
    }
  }

  // Phase 2 on the real objective; artificial columns are out of play.
  std::vector<Rat> c2(t.ncols, Rat(0));
  for (long j = 0; j < nv; ++j) c2[j] = p.objective[j];
  t.load_costs(c2);
  auto structural_only = [&t](long j) { return !t.artificial(j); };
  if (run_simplex(t, structural_only) == PivotOutcome::unbounded) {
    sol.status = LPStatus::unbounded;
    return sol;
  }

  sol.status = LPStatus::optimal;
  sol.primal.assign(nv, Rat(0));
  for (long i = 0; i < nr; ++i)
    if (t.basis[i] < nv) sol.primal[t.basis[i]] = t.b[i];
  sol.value = 0;
  for (long j = 0; j < nv; ++j) sol.value += p.objective[j] * sol.primal[j];

  // Multipliers from the final basis: solve B^T yhat = c_B on the initial
  // columns, then undo the sign normalization per row.
  std::vector<std::vector<Rat>> M(nr, std::vector<Rat>(nr + 1, Rat(0)));
  for (long r = 0; r < nr; ++r) {
    for (long i = 0; i < nr; ++i) M[r][i] = A0[i][t.basis[r]];
    M[r][nr] = c2[t.basis[r]];
  }
  std::vector<long> where(nr, -1);
  for (long col = 0, row = 0; col < nr && row < nr; ++col) {
    long pr = -1;
    for (long i = row; i < nr; ++i)
      if (M[i][col] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;  // unreachable: the basis matrix is invertible
    std::swap(M[row], M[pr]);
    Rat pv = M[row][col];
    for (long j = col; j <= nr; ++j) M[row][j] /= pv;
    for (long i = 0; i < nr; ++i) {
      if (i == row || M[i][col] == 0) continue;
      Rat f = M[i][col];
      for (long j = col; j <= nr; ++j) M[i][j] -= f * M[row][j];
    }
    where[col] = row;
    ++row;
  }
  sol.dual.assign(nr, Rat(0));
  for (long i = 0; i < nr; ++i)
    if (where[i] >= 0) sol.dual[i] = t.sign[i] * M[where[i]][nr];
  return sol;
}

bool verify_solution(const LinearProgram& p, const LPSolution& s) {
  check_dims(p);
  if (s.status != LPStatus::optimal) return false;
  const Expanded e = expand(p);
  const long nv = static_cast<long>(p.objective.size());
  const long nr = static_cast<long>(e.rows.size());
  if (static_cast<long>(s.primal.size()) != nv) return false;
  if (static_cast<long>(s.dual.size()) != nr) return false;

  for (long j = 0; j < nv; ++j)
    if (s.primal[j] < 0) return false;
  for (long i = 0; i < nr; ++i) {
    Rat lhs = 0;
    for (long j = 0; j < nv; ++j) lhs += row_coeff(e, i, j) * s.primal[j];
    if (lhs < e.rhs[i]) return false;
  }

  for (long i = 0; i < nr; ++i)
    if (s.dual[i] < 0) return false;
  for (long j = 0; j < nv; ++j) {
    Rat col = 0;
    for (long i = 0; i < nr; ++i) col += row_coeff(e, i, j) * s.dual[i];
    if (col > p.objective[j]) return false;
  }

  Rat primal_val = 0;
  for (long j = 0; j < nv; ++j) primal_val += p.objective[j] * s.primal[j];
  Rat dual_val = 0;
  for (long i = 0; i < nr; ++i) dual_val += e.rhs[i] * s.dual[i];
  return primal_val == s.value && dual_val == s.value;
}

}  // namespace gridcover
