// End-to-end planning run: optimize a loaded scenario, verify the result
// against the raw mission model, and package everything for export.
#pragma once

#include <string>

#include "stratosar/scenario.hpp"
#include "stratosar/sca/optimize.hpp"
#include "stratosar/verify.hpp"

namespace stratosar::run {

inline constexpr const char* kVersion = "1.0.0";

struct RunReport {
    scenario::Scenario scenario;      ///< inputs, provenance, config hash
    sca::OptimizeResult result;
    verify::Report verification;
    std::string version = kVersion;   ///< library version baked into reports
    double wall_time_s = 0.0;
    /// Planning failure message (constraint infeasibility); empty on
    /// success.  A failed run still exports header-only tables plus this
    /// message in the summary.
    std::string error;
};

/// Plans the scenario and verifies the winning candidate.  Propagates
/// ConstraintError when no feasible plan exists; a plan that fails
/// verification is still returned (verification.all_pass() tells).
RunReport run_plan(const scenario::Scenario& scenario);

}  // namespace stratosar::run
