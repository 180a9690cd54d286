// Circular-sweep mission geometry.
//
// The platform flies M concentric circular sweeps, each one full revolution
// discretized into N slots of duration delta_t.  Sweep radii expand outward
// so the illuminated ground annuli tile without gaps; coverage accounting
// excludes each sweep's start slot.
#pragma once

#include <array>
#include <vector>

#include "stratosar/atmosphere.hpp"
#include "stratosar/types.hpp"

namespace stratosar::platform {

/// Fixed mission geometry: antenna look angles, slot timing, sweep/slot counts.
struct MissionGeometry {
    int sweep_count = 3;      ///< number of concentric sweeps M
    int slots_per_sweep = 8;  ///< slots per revolution N
    double delta_t = 10.0;    ///< slot duration [s]
    double beta = 0.4363323129985824;   ///< beam-center off-nadir angle [rad] (25 deg)
    double alpha = 0.2617993877991494;  ///< beam width [rad] (15 deg)
    double zeta = 0.17453292519943295;  ///< banking angle [rad] (10 deg)
    double g = 9.8;           ///< gravitational acceleration [m/s^2]

    /// Outer beam-edge look angle beta + alpha/2.
    double alpha1() const { return beta + 0.5 * alpha; }
    /// Inner beam-edge look angle beta - alpha/2.
    double alpha2() const { return beta - 0.5 * alpha; }
    /// Angular velocity 2*pi/(N*delta_t): one revolution per sweep.
    double omega() const;
    /// Swath gain 0.5*(tan(alpha1) - tan(alpha2)); half-swath per unit altitude.
    double swath_factor() const;
    /// Sweep period T = N*delta_t [s].
    double period() const { return slots_per_sweep * delta_t; }
    /// Total slot count M*N.
    int total_slots() const { return sweep_count * slots_per_sweep; }

    /// Throws ConfigError unless 0 < alpha2 < alpha1 < pi/2, N >= 2, M >= 1,
    /// delta_t > 0, 0 <= zeta < pi/2, g > 0.
    void validate() const;
};

/// Partition of the global slot indices {1..M*N} by trajectory phase.
struct SlotSets {
    std::vector<int> set_a;  ///< sweep-start slots {1, N+1, ..., (M-1)N+1}
    std::vector<int> set_b;  ///< sweep-end slots {N, 2N, ..., MN}
    std::vector<int> set_c;  ///< interior slots (complement)
};

/// Splits {1..M*N} into start / end / interior slot sets.
/// Throws ConfigError when n_slots < 2 or n_sweeps < 1.
SlotSets build_slot_sets(int n_slots, int n_sweeps);

/// Azimuth [rad] of global slot n: 2*pi*(n-1)/N for sweep-start slots,
/// 2*pi*n/N otherwise (so each sweep closes its circle at slot m*N).
/// Throws ConfigError when n < 1 or n_slots < 2.
double azimuth(int n, int n_slots);

/// 1-based sweep index ceil(n/N) of global slot n.
int sweep_of_slot(int n, int n_slots);

/// Ground half-swath [m] of the beam at altitude z:
/// 0.5*z*(tan(alpha1) - tan(alpha2)).
double half_swath(double z, const MissionGeometry& geo);

/// One planned trajectory: per-sweep altitude, flight radius, ground speed.
struct SweepPlan {
    std::vector<double> altitudes;    ///< z_m [m]
    std::vector<double> start_radii;  ///< flight-circle radius x_m [m]
    std::vector<double> speeds;       ///< ground speed V_m [m/s]
    MissionGeometry geometry;
};

/// Builds the sweep plan from per-sweep altitudes:
///   x_1 = z_1*tan(beta),
///   x_m = x_{m-1} + 2*r_m + (z_m - z_{m-1})*tan(alpha2),  r_m = half_swath(z_m),
///   V_m = sqrt(x_m*g*tan(zeta)).
/// Altitudes must lie within [z_lo, z_hi] (ConstraintError otherwise) and
/// match geometry.sweep_count (ConfigError otherwise).
SweepPlan build_sweep_plan(const std::vector<double>& altitudes,
                           const MissionGeometry& geo,
                           double z_lo = 20000.0, double z_hi = 32000.0);

/// Platform position [m] at global slot n: the sweep's flight circle point
/// at azimuth(n), at the sweep altitude.
std::array<double, 3> position(int n, const SweepPlan& plan);

/// Inner radius [m] of the ground annulus newly imaged at slot n of sweep
/// m >= 2: the accumulated outer edge of all previous sweeps,
/// r~ = r_{m-1} + 2*(r_1 + ... + r_{m-2}) in per-sweep half-swaths.
/// Throws LogicError for sweep-1 slots.
double inner_radius(int n, const SweepPlan& plan);

/// Ground area [m^2] newly imaged during slot n:
/// sweep 1: omega*delta_t*r^2; sweep >= 2: 2*(r^2 + r*r~)*omega*delta_t.
/// Sweep-start slots are excluded from coverage (LogicError).
double coverage_increment(int n, const SweepPlan& plan);

/// Total imaged ground area [m^2]: sum of coverage_increment over all
/// non-start slots.
double total_coverage(const SweepPlan& plan);

/// Stall-limited minimum airspeed [m/s] at altitude z, evaluated with the
/// layer pressure as the denominator's density-like factor (kept exactly as
/// the source model states it; see README):
/// sqrt(2*W / (p(z) * wing_area * c_l_max)).
double stall_speed(double z, const PlatformSpec& plat,
                   const atmosphere::Constants& atm = {});

}  // namespace stratosar::platform
