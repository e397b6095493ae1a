#pragma once

#include <vector>

#include "radon/rational.hpp"

namespace radon::lp {

enum class Rel { Le, Ge, Eq };
enum class Status { Optimal, Infeasible, Unbounded };

struct Constraint {
  std::vector<Rat> a;
  Rel rel;
  Rat b;
};

struct Result {
  Status status = Status::Infeasible;
  Rat objective;       // valid when Optimal
  std::vector<Rat> x;  // valid when Optimal
};

/// Exact two-phase rational simplex, dense tableau, Bland's pivoting rule
/// (anti-cycling). Minimizes c.x over {x >= 0 : constraints}. Problem sizes
/// here are tiny (at most ~100 rows, <= 5 structural columns or vice versa),
/// so no sparsity or scaling tricks.
Result solve_min(const std::vector<Rat>& c, const std::vector<Constraint>& rows);

/// Feasibility of {x >= 0 : constraints} (phase 1 only).
bool feasible(int nvars, const std::vector<Constraint>& rows);

}  // namespace radon::lp
