#include "toric/simplex.hpp"

#include "toric/error.hpp"

namespace toric::lp {

namespace {

// Tableau rows: basis.size() constraint rows plus one objective row.
struct Tableau {
  int nvars = 0;
  std::vector<RatVec> rows;  // each of size nvars + 1 (rhs last)
  RatVec z;                  // reduced-cost row, size nvars + 1
  std::vector<int> basis;

  void pivot(int r, int c) {
    Rat p = rows[r][c];
    for (auto& e : rows[r]) e /= p;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (int j = 0; j <= nvars; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (z[c] != 0) {
      Rat f = z[c];
      for (int j = 0; j <= nvars; ++j) z[j] -= f * rows[r][j];
    }
    basis[r] = c;
  }

  // Bland: entering = lowest-index column with negative reduced cost;
  // leaving = min ratio, ties by lowest basis variable index.
  Status run(int active_vars) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < active_vars; ++j)
        if (z[j] < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return Status::Optimal;
      int leave = -1;
      Rat best;
      for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][enter] <= 0) continue;
        Rat ratio = rows[i][nvars] / rows[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          best = ratio;
          leave = static_cast<int>(i);
        }
      }
      if (leave < 0) return Status::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

Result solve(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c) {
  int m = static_cast<int>(a.size());
  int n = m ? static_cast<int>(a[0].size()) : static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m || static_cast<int>(c.size()) != n)
    fail("DimensionMismatch", "lp::solve shapes are inconsistent");

  Tableau t;
  t.nvars = n + m;  // structural + artificial
  t.rows.assign(m, RatVec(t.nvars + 1, Rat(0)));
  t.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    int sign = (b[i] < 0) ? -1 : 1;
    for (int j = 0; j < n; ++j) t.rows[i][j] = sign < 0 ? -a[i][j] : a[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][t.nvars] = sign < 0 ? -b[i] : b[i];
    t.basis[i] = n + i;
  }

  // Phase 1: minimize the sum of artificials.
  t.z.assign(t.nvars + 1, Rat(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= t.nvars; ++j)
      if (j < n || j == t.nvars) t.z[j] -= t.rows[i][j];
  if (t.run(t.nvars) != Status::Optimal)
    fail("Internal", "phase-1 simplex cannot be unbounded");
  if (-t.z[t.nvars] != 0) return Result{Status::Infeasible, {}, Rat(0)};

  // Drive any artificial still in the basis out of it (degenerate rows).
  for (int i = 0; i < m; ++i) {
    if (t.basis[i] < n) continue;
    int c2 = -1;
    for (int j = 0; j < n; ++j)
      if (t.rows[i][j] != 0) {
        c2 = j;
        break;
      }
    if (c2 >= 0) t.pivot(i, c2);
    // else the row is all-zero on structurals: redundant constraint, harmless.
  }

  // Phase 2.
  t.z.assign(t.nvars + 1, Rat(0));
  for (int j = 0; j < n; ++j) t.z[j] = c[j];
  for (int i = 0; i < m; ++i) {
    int bj = t.basis[i];
    if (bj < n && c[bj] != 0) {
      Rat f = c[bj];
      for (int j = 0; j <= t.nvars; ++j) t.z[j] -= f * t.rows[i][j];
    }
  }
  Status st = t.run(n);  // artificials stay out: columns beyond n are not eligible
  Result res;
  res.status = st;
  if (st == Status::Optimal) {
    res.x.assign(n, Rat(0));
    for (int i = 0; i < m; ++i)
      if (t.basis[i] < n) res.x[t.basis[i]] = t.rows[i][t.nvars];
    res.objective = Rat(0);
    for (int j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
  }
  return res;
}

bool feasible(const std::vector<RatVec>& a, const RatVec& b) {
  int n = a.empty() ? 0 : static_cast<int>(a[0].size());
  Result r = solve(a, b, RatVec(n, Rat(0)));
  return r.status == Status::Optimal;
}

}  // namespace toric::lp
