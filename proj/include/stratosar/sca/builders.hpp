// Assembly of the two convex subproblems the planner alternates between:
//   - the joint per-sweep-altitude / per-slot-power problem (fixed N),
//   - the per-sweep energy-deficit problem used to bound the slot count.
//
// Altitude is the only true trajectory unknown: flight radii, positions, and
// the banked-turn speed are affine (or fixed trigonometric multiples of
// affine) functions of the per-sweep altitudes, so the builders emit them as
// expressions instead of variables.  Nonconvex product terms enter through
// the decompositions in dc.hpp: the convex halves become cone rows, the
// subtracted squares become tangent minorants re-centered at every iterate.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "stratosar/atmosphere.hpp"
#include "stratosar/conic/program.hpp"
#include "stratosar/conic/solve.hpp"
#include "stratosar/platform.hpp"
#include "stratosar/sca/dc.hpp"
#include "stratosar/types.hpp"

namespace stratosar::sca {

/// Everything the planner needs about one mission.  `geometry.slots_per_sweep`
/// is only a default: the slot-count search passes N explicitly.
struct PlanningInputs {
    platform::MissionGeometry geometry;
    RadarSpec radar;
    CommSpec comm;
    PlatformSpec platform;
    atmosphere::Constants atmosphere;

    int n_cap = 720;           ///< hard cap on slots per sweep
    double xi1_tol = 1e-3;     ///< phase-1 relative slot-bound change threshold
    double xi2_tol = 1e-3;     ///< phase-2 relative objective change threshold
    int max_iterations = 50;   ///< iteration cap per convexified subproblem
    double energy_floor_fraction = 1e-3;  ///< battery floor as fraction of E_ini

    conic::SolverSettings solver;

    /// Pinned power schedules (benchmark modes).  Size 0 = optimize freely,
    /// 1 = one value for every slot, M = one value per sweep.
    std::vector<double> fixed_radar_power;
    std::vector<double> fixed_comm_power;

    bool parallel_sweep_search = true;
    unsigned seed = 0;  ///< recorded in reports for reproducibility

    /// Throws ConfigError on inconsistent parameters (bad caps, tolerances,
    /// pin vector sizes, or pins outside the power boxes).
    void validate() const;
};

/// One expansion point of the successive-convexification loop.
struct ScaIterate {
    std::vector<double> altitudes;     ///< z_m [m], one per sweep
    std::vector<double> start_radii;   ///< flight radii x_m [m]
    std::vector<double> speeds;        ///< V_m [m/s]
    double objective = 0.0;            ///< true coverage at this point [m^2]
    double xi = 0.0;                   ///< relative change of the step taken
    std::map<std::string, double> feasibility_residuals;
};

/// Mid-box starting point: altitudes at the band center, speeds from the
/// banked-turn relation.
ScaIterate initial_iterate(int n_slots, const PlanningInputs& inputs);

/// Per-slot slack-variable handles.
struct SlackSet {
    conic::VarId p, q, r;          ///< link-constraint slacks
    conic::VarId t, u;             ///< propulsion-constraint slacks
    conic::VarId phi_snr, psi_snr; ///< imaging-SNR chain slacks
};

/// Affine geometry of one slot inside a subproblem, plus expansion values.
struct SlotContext {
    int slot = 1;             ///< global 1-based slot index
    int n_slots = 2;          ///< N in effect
    conic::LinExpr x, y, z;   ///< slot position [m] (affine in altitudes)
    conic::LinExpr speed_sq;  ///< squared sweep speed [m^2/s^2]
    double x_ref = 0.0, y_ref = 0.0, z_ref = 0.0;  ///< expansion position
    double speed_ref = 0.0;   ///< expansion speed V^k [m/s]
};

/// Variable handles a slot's constraint rows connect to.
struct SlotVars {
    conic::VarId p_rad, p_com, p_mot;
    conic::VarId energy, energy_prev;  ///< E(n) and E(n-1)
    SlackSet slacks;
    double eta = 0.9;  ///< frozen charge/discharge efficiency for the step
};

/// Per-sweep cone epigraphs of the four propulsion factors (scaled for
/// balance) plus the affine sum of the linearized subtracted squares.
/// Shared by all slots of a sweep.
///
/// The whole block is expressed in units of the sweep's propulsion power at
/// the expansion point (`power_scale`, watts): the factor epigraphs and the
/// linearized squares are divided by sqrt(power_scale) / power_scale so all
/// cone entries are O(1) regardless of platform size. Consumers must divide
/// any raw-watt term (like the motor-power variable) by `power_scale` before
/// combining it with these expressions.
struct PropulsionEpigraph {
    conic::LinExpr density;       ///< >= balance_a * rho(z) / sqrt(scale)
    conic::LinExpr parasitic;     ///< >= parasitic(V)/balance_a/sqrt(scale)
    conic::LinExpr inv_density;   ///< >= balance_b / rho(z) / sqrt(scale)
    conic::LinExpr induced;       ///< >= induced(V)/balance_b/sqrt(scale)
    conic::LinExpr linearized_sq; ///< sum of tangent minorants, / scale
    double power_scale = 1.0;     ///< propulsion power at the expansion point
};

/// Builds the per-sweep propulsion epigraphs at one expansion point.
/// `z` / `speed_sq` are the sweep's affine altitude and squared-speed
/// expressions; `z_ref` / `speed_ref` the expansion values.
PropulsionEpigraph build_propulsion_epigraph(conic::ConvexProgram& program,
                                             const conic::LinExpr& z,
                                             const conic::LinExpr& speed_sq,
                                             double z_ref, double speed_ref,
                                             const PlanningInputs& inputs,
                                             const std::string& tag);

/// Link-rate rows for one slot: chord-bounded slack definitions
/// p >= a*g1 + gx/a (and q, r), plus the aggregated cone
/// p^2+q^2+r^2 - 3 lin(g1^2) - sum lin(gi^2) <= 2*(rho0/noise)*P_com
/// (coordinates internally in km, factors balance-scaled; the required-rate
/// margin is folded into g1, which keeps the raw constraint strictly
/// satisfied at the tight point).
void build_comm_constraints(conic::ConvexProgram& program,
                            const SlotContext& ctx, const SlotVars& vars,
                            const PlanningInputs& inputs);

/// Battery rows for one slot n >= 2: slack links t >= e_rho + e_par and
/// u >= e_inv + e_ind, the propulsion-power epigraph
/// P_mot >= 0.5(t^2+u^2) - 0.5*sum lin(gi^2), and the linear ledger row
/// E(n) <= E(n-1) + delta*eta*(P_har_lin - P_mot - P_rad - P_com).
void build_energy_constraints(conic::ConvexProgram& program,
                              const SlotContext& ctx, const SlotVars& vars,
                              const PropulsionEpigraph& propulsion,
                              const PlanningInputs& inputs);

/// Imaging-SNR rows for one slot: phi >= (z/s)^2, psi*(z/s) >= phi^2 (s = a
/// fixed altitude scale), and the linear coupling
/// con*P_rad >= (1+margin)*V^k*psi*s^3, which composes to
/// con*P_rad >= (1+margin)*z^3*V^k.
void build_snr_constraints(conic::ConvexProgram& program, const SlotContext& ctx,
                           const SlotVars& vars, const PlanningInputs& inputs);

/// Handles into an assembled joint subproblem.
struct P5Handles {
    std::vector<conic::VarId> altitude;             // M
    std::vector<conic::VarId> p_rad, p_com, p_mot;  // M*N each
    std::vector<conic::VarId> energy;               // M*N
    std::vector<SlackSet> slacks;                   // M*N
    conic::VarId coverage;                          // objective hypograph
    double coverage_scale = 1.0;  ///< multiply the variable by this for m^2
    std::vector<conic::LinExpr> radius;    // x_m(z)
    std::vector<conic::LinExpr> speed_sq;  // V_m^2(z)
};

/// Handles into an assembled sweep-bound subproblem.
struct P7Handles {
    std::vector<conic::VarId> altitude;  // M
    std::vector<conic::VarId> speed_sq;  // M, free within the speed band
    std::vector<conic::VarId> t, u;      // M
    conic::VarId deficit;                // minimized net-deficit bound
};

struct P5Problem {
    conic::ConvexProgram program;
    P5Handles handles;
};

struct P7Problem {
    conic::ConvexProgram program;
    P7Handles handles;
};

/// Coverage quadratic form: total area = scale * z'Qz with Q symmetric
/// M x M (returned flattened row-major) and scale = (2*pi/N)*(N-1)*K^2,
/// K the half-swath-per-altitude factor.  Q is indefinite from M = 3 on,
/// which is why the objective surrogate splits it by eigensign.
std::pair<std::vector<double>, double> coverage_quadratic(
    int sweep_count, int n_slots, const platform::MissionGeometry& geo);

/// Assembles the joint subproblem for fixed N at the given expansion point.
/// `frozen_eta` holds the per-slot charge/discharge efficiencies frozen for
/// this iteration (size M*N; empty = discharge efficiency everywhere).
/// Variable roles follow the canonical accounting: M altitude + 3MN power +
/// MN energy + 7MN slack variables (everything else is auxiliary).
P5Problem build_p5(const ScaIterate& iterate, int n_slots,
                   const PlanningInputs& inputs,
                   const std::vector<double>& frozen_eta = {});

/// Assembles the per-sweep energy-deficit subproblem (speed decoupled from
/// the banked-turn radius, free within its band): minimize the deficit bound
/// t~ subject to the propulsion slack rows and
/// sum_m [0.5(t_m^2+u_m^2) - P_har_lin(m) - 0.5 sum lin(gi^2)] <= t~.
P7Problem build_p7(const ScaIterate& iterate, const PlanningInputs& inputs);

/// Slot-count upper bound from the deficit: floor(E_ini/(delta*eta_b*t~))
/// capped at n_cap, or n_cap when t~ <= 0 (surplus makes the bound vacuous).
int sweep_upper_bound(double t_tilde, const PlanningInputs& inputs);

}  // namespace stratosar::sca
