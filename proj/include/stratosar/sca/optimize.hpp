// Two-phase mission planner: slot-count bounding (worst-case energy deficit)
// followed by per-slot-count surrogate refinement, power snapping, and
// deterministic candidate selection.
#pragma once

#include <string>
#include <vector>

#include "stratosar/platform.hpp"
#include "stratosar/sca/builders.hpp"

namespace stratosar::sca {

/// Per-slot power levels and the battery trace they induce.
struct PowerSchedule {
    std::vector<double> p_rad;       ///< radar transmit power [W]
    std::vector<double> p_com;       ///< downlink transmit power [W]
    std::vector<double> p_mot;       ///< propulsion power [W]
    std::vector<double> p_har;       ///< harvested power [W]
    std::vector<double> energy;      ///< battery energy E(n) [J]
    std::vector<double> efficiency;  ///< charge/discharge efficiency applied
};

/// One logged planner step.
struct TraceRow {
    int phase = 0;      ///< 1 = slot-count bounding, 2 = coverage refinement
    int n_slots = 0;    ///< slot count explored (phase 2) or bound (phase 1)
    int iteration = 0;  ///< loop index k, 1-based
    double objective = 0.0;  ///< phase 1: deficit [W]; phase 2: coverage [m^2]
    double xi = 0.0;         ///< relative change driving the stop rule
    std::string solver_status;
    double max_residual = 0.0;
};

/// Slot count ruled out during the search, with the reason.
struct SkippedCandidate {
    int n_slots = 0;
    std::string reason;
};

/// Result of the slot-count bounding phase.
struct BoundResult {
    double t_tilde = 0.0;  ///< minimized worst-case per-slot deficit [W]
    int n_upper = 0;       ///< admissible upper bound on slots per sweep
    std::vector<TraceRow> trace;
};

struct OptimizeResult {
    platform::SweepPlan plan;
    PowerSchedule schedule;
    double coverage = 0.0;  ///< ground coverage of the returned plan [m^2]
    int n_star = 0;         ///< chosen slots per sweep
    int n_upper = 0;        ///< slot-count bound from phase 1
    double t_tilde = 0.0;   ///< deficit behind that bound [W]
    std::vector<TraceRow> trace;
    std::vector<SkippedCandidate> skipped;
};

/// Phase 1: minimize the worst-case propulsion-vs-harvest deficit over the
/// altitude/speed box and convert it into an upper bound on slots per sweep.
BoundResult bound_slot_count(const PlanningInputs& inputs);

/// Cheapest feasible power schedule for a fixed trajectory: link and imaging
/// powers at their (margined) requirement, exact propulsion and harvest,
/// battery ledger with sign-selected efficiencies.  Honors configured power
/// pins.  Throws ConstraintError when a requirement cannot be met (including
/// a pin below it) and EnergyDepletedError when the battery cannot carry the
/// plan.
PowerSchedule minimal_power_schedule(const platform::SweepPlan& plan,
                                     const PlanningInputs& inputs);

/// Full planner: bound the slot count, refine every admissible slot count
/// with the convex surrogate loop, snap powers, and keep the best feasible
/// candidate (ties favor fewer slots).  Throws ConstraintError when no slot
/// count yields a feasible mission.
OptimizeResult optimize(const PlanningInputs& inputs);

}  // namespace stratosar::sca
