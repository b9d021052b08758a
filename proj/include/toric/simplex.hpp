#pragma once

#include <vector>

#include "toric/numeric.hpp"

namespace toric::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  RatVec x;       // basic solution (size = number of variables)
  Rat objective;  // value of c.x at the returned solution
};

// Exact primal simplex for  min c.x  s.t.  a x = b, x >= 0, entries rational.
// Bland's rule throughout, so the run (and the returned basic solution) is
// deterministic and cycling-free. Phase 1 decides feasibility.
Result solve(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c);

bool feasible(const std::vector<RatVec>& a, const RatVec& b);

}  // namespace toric::lp
