// Independent feasibility checking of a finished mission plan.
//
// Every check re-evaluates the direct physical model (trajectory recursion,
// banked-turn speed, stall band, link rate, imaging SNR, battery ledger);
// none of the planner's convex surrogates are involved.
#pragma once

#include <string>
#include <vector>

#include "stratosar/platform.hpp"
#include "stratosar/sca/optimize.hpp"

namespace stratosar::verify {

/// One checked mission-model condition.
struct CheckResult {
    std::string name;
    bool pass = false;
    /// Signed worst slack in the check's native unit; >= 0 means satisfied.
    double worst_residual = 0.0;
    /// Slot (or sweep, per `detail`) where the worst slack occurs; 0 = n/a.
    int worst_index = 0;
    std::string detail;
};

struct Report {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    /// The failing check names, comma-separated ("" when all pass).
    std::string failures() const;
};

/// Checks a trajectory and power schedule against the full mission model.
/// Throws ConfigError when the schedule length does not match the plan.
Report check_mission(const platform::SweepPlan& plan,
                     const sca::PowerSchedule& schedule,
                     const sca::PlanningInputs& inputs);

}  // namespace stratosar::verify
