// Internal declarations of the built-in solver backends.
#pragma once

#include "stratosar/conic/solve.hpp"

namespace stratosar::conic::detail {

/// Sparse homogeneous self-dual embedding interior-point method.
SolveResult solve_hsd(const ConvexProgram& program,
                      const SolverSettings& settings);

/// Dense infeasible-start primal-dual interior-point method.
SolveResult solve_pd_dense(const ConvexProgram& program,
                           const SolverSettings& settings);

}  // namespace stratosar::conic::detail
