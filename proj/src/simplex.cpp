#include "radon/simplex.hpp"

#include <cassert>

#include "radon/errors.hpp"

namespace radon::lp {

namespace {

struct Tableau {
  // rows: m x (ncols), rhs: m, cost: ncols, objval (negated running value).
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> rhs;
  std::vector<Rat> cost;
  Rat objval;  // current objective value of the basic solution
  std::vector<int> basis;

  void pivot(int r, int col) {
    const Rat p = a[r][col];
    assert(p != 0);
    for (auto& v : a[r]) v /= p;
    rhs[r] /= p;
    for (size_t i = 0; i < a.size(); ++i) {
      if ((int)i == r) continue;
      const Rat f = a[i][col];
      if (f == 0) continue;
      for (size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    const Rat cf = cost[col];
    if (cf != 0) {
      for (size_t j = 0; j < cost.size(); ++j) cost[j] -= cf * a[r][j];
      objval += cf * rhs[r];
    }
    basis[r] = col;
  }

  // Bland: entering = lowest-index column with negative reduced cost among
  // columns < limit; leaving = min ratio, ties by lowest basis index.
  // Returns Optimal when no entering column exists.
  Status iterate(int limit) {
    for (;;) {
      int col = -1;
      for (int j = 0; j < limit; ++j)
        if (cost[j] < 0) {
          col = j;
          break;
        }
      if (col < 0) return Status::Optimal;
      int row = -1;
      Rat best;
      for (size_t i = 0; i < a.size(); ++i) {
        if (a[i][col] > 0) {
          Rat ratio = rhs[i] / a[i][col];
          if (row < 0 || ratio < best || (ratio == best && basis[i] < basis[row])) {
            row = (int)i;
            best = ratio;
          }
        }
      }
      if (row < 0) return Status::Unbounded;
      pivot(row, col);
    }
  }
};

}  // namespace

Result solve_min(const std::vector<Rat>& c, const std::vector<Constraint>& rows) {
  const int n = (int)c.size();
  for (const auto& r : rows)
    if ((int)r.a.size() != n) throw input_error("LP constraint arity mismatch");

  // Normalize to b >= 0 and count slack/artificial columns.
  std::vector<Constraint> cs = rows;
  for (auto& r : cs) {
    if (r.b < 0) {
      for (auto& v : r.a) v = -v;
      r.b = -r.b;
      r.rel = r.rel == Rel::Le ? Rel::Ge : (r.rel == Rel::Ge ? Rel::Le : Rel::Eq);
    }
  }
  const int m = (int)cs.size();
  int nslack = 0, nart = 0;
  for (const auto& r : cs) {
    if (r.rel != Rel::Eq) ++nslack;
    if (r.rel != Rel::Le) ++nart;
  }
  const int ncols = n + nslack + nart;
  const int art0 = n + nslack;

  Tableau t;
  t.a.assign(m, std::vector<Rat>(ncols, Rat(0)));
  t.rhs.assign(m, Rat(0));
  t.basis.assign(m, -1);
  int si = n, ai = art0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) t.a[i][j] = cs[i].a[j];
    t.rhs[i] = cs[i].b;
    if (cs[i].rel == Rel::Le) {
      t.a[i][si] = 1;
      t.basis[i] = si++;
    } else if (cs[i].rel == Rel::Ge) {
      t.a[i][si++] = -1;
      t.a[i][ai] = 1;
      t.basis[i] = ai++;
    } else {
      t.a[i][ai] = 1;
      t.basis[i] = ai++;
    }
  }

  // Phase 1: minimize the sum of artificials.
  if (nart > 0) {
    t.cost.assign(ncols, Rat(0));
    t.objval = 0;
    for (int j = art0; j < ncols; ++j) t.cost[j] = 1;
    for (int i = 0; i < m; ++i) {
      if (t.basis[i] >= art0) {  // price out the basic artificial
        for (int j = 0; j < ncols; ++j) t.cost[j] -= t.a[i][j];
        t.objval += t.rhs[i];
      }
    }
    Status st = t.iterate(ncols);
    assert(st == Status::Optimal);  // phase 1 is always bounded below by 0
    (void)st;
    if (t.objval != 0) return {Status::Infeasible, Rat(0), {}};
    // Drive any zero-valued artificials out of the basis; drop redundant rows.
    for (int i = (int)t.a.size() - 1; i >= 0; --i) {
      if (t.basis[i] < art0) continue;
      int col = -1;
      for (int j = 0; j < art0; ++j)
        if (t.a[i][j] != 0) {
          col = j;
          break;
        }
      if (col >= 0) {
        t.pivot(i, col);
      } else {
        t.a.erase(t.a.begin() + i);
        t.rhs.erase(t.rhs.begin() + i);
        t.basis.erase(t.basis.begin() + i);
      }
    }
    for (auto& row : t.a) row.resize(art0);
  } else {
    for (auto& row : t.a) row.resize(art0);
  }

  // Phase 2 with the real objective, artificial columns removed.
  t.cost.assign(art0, Rat(0));
  for (int j = 0; j < n; ++j) t.cost[j] = c[j];
  t.objval = 0;
  for (size_t i = 0; i < t.a.size(); ++i) {
    const int b = t.basis[i];
    if (b < n && c[b] != 0) {
      const Rat f = c[b];
      for (int j = 0; j < art0; ++j) t.cost[j] -= f * t.a[i][j];
      t.objval += f * t.rhs[i];
    }
  }
  Status st = t.iterate(art0);
  if (st == Status::Unbounded) return {Status::Unbounded, Rat(0), {}};

  Result res;
  res.status = Status::Optimal;
  res.objective = t.objval;
  res.x.assign(n, Rat(0));
  for (size_t i = 0; i < t.a.size(); ++i)
    if (t.basis[i] < n) res.x[t.basis[i]] = t.rhs[i];
  return res;
}

bool feasible(int nvars, const std::vector<Constraint>& rows) {
  std::vector<Rat> c(nvars, Rat(0));
  return solve_min(c, rows).status == Status::Optimal;
}

}  // namespace radon::lp
