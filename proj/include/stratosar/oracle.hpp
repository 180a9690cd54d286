// Exhaustive reference search over gridded altitudes and all admissible slot
// counts.  Powers come from the same closed-form minimal-power snap as the
// planner (optimal for a fixed trajectory), and feasibility is judged by the
// independent mission verifier, so the result is a true reference optimum
// restricted to the grid.
#pragma once

#include "stratosar/sca/optimize.hpp"

namespace stratosar::oracle {

struct OracleResult {
    platform::SweepPlan plan;
    sca::PowerSchedule schedule;
    double coverage = 0.0;        ///< best feasible ground coverage [m^2]
    int n_star = 0;               ///< slot count of the best combination
    long long evaluated = 0;      ///< combinations tried
    long long feasible_count = 0; ///< combinations passing the verifier
};

/// Searches grid_points^M altitude tuples x slot counts {2..n_cap}.
/// Throws ConfigError when that exceeds max_combos (the message carries the
/// estimate) and ConstraintError when no combination is feasible.
OracleResult grid_search(const sca::PlanningInputs& inputs, int grid_points,
                         long long max_combos = 1000000);

}  // namespace stratosar::oracle
