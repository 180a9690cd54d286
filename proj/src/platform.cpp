#include "stratosar/platform.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "stratosar/errors.hpp"

namespace stratosar::platform {

namespace {

constexpr double kPi = std::numbers::pi;

void require_slot_counts(int n_slots, int n_sweeps) {
    if (n_slots < 2) {
        std::ostringstream msg;
        msg << "slots per sweep must be >= 2, got " << n_slots;
        throw ConfigError(msg.str());
    }
    if (n_sweeps < 1) {
        std::ostringstream msg;
        msg << "sweep count must be >= 1, got " << n_sweeps;
        throw ConfigError(msg.str());
    }
}

void require_slot_in_plan(int n, const SweepPlan& plan) {
    const int total = plan.geometry.total_slots();
    if (n < 1 || n > total) {
        std::ostringstream msg;
        msg << "slot index " << n << " outside plan range [1, " << total << "]";
        throw ConfigError(msg.str());
    }
}

}  // namespace

double MissionGeometry::omega() const {
    return 2.0 * kPi / (slots_per_sweep * delta_t);
}

double MissionGeometry::swath_factor() const {
    return 0.5 * (std::tan(alpha1()) - std::tan(alpha2()));
}

void MissionGeometry::validate() const {
    require_slot_counts(slots_per_sweep, sweep_count);
    if (!(delta_t > 0.0)) throw ConfigError("slot duration must be positive");
    if (!(g > 0.0)) throw ConfigError("gravitational acceleration must be positive");
    if (!(alpha > 0.0)) throw ConfigError("beam width must be positive");
    if (!(alpha2() > 0.0))
        throw ConfigError("inner beam edge beta - alpha/2 must be positive "
                          "(beam would straddle nadir)");
    if (!(alpha1() < 0.5 * kPi))
        throw ConfigError("outer beam edge beta + alpha/2 must stay below pi/2 "
                          "(beam edge must hit the ground)");
    if (!(zeta >= 0.0 && zeta < 0.5 * kPi))
        throw ConfigError("banking angle must lie in [0, pi/2)");
}

SlotSets build_slot_sets(int n_slots, int n_sweeps) {
    require_slot_counts(n_slots, n_sweeps);
    SlotSets sets;
    sets.set_a.reserve(n_sweeps);
    sets.set_b.reserve(n_sweeps);
    sets.set_c.reserve(static_cast<std::size_t>(n_sweeps) * (n_slots - 2));
    for (int n = 1; n <= n_sweeps * n_slots; ++n) {
        if ((n - 1) % n_slots == 0)
            sets.set_a.push_back(n);
        else if (n % n_slots == 0)
            sets.set_b.push_back(n);
        else
            sets.set_c.push_back(n);
    }
    return sets;
}

double azimuth(int n, int n_slots) {
    if (n_slots < 2) throw ConfigError("slots per sweep must be >= 2");
    if (n < 1) throw ConfigError("slot index must be >= 1");
    const double step = 2.0 * kPi / n_slots;
    // Sweep-start slots sit at the previous sweep's closing angle so the
    // next revolution begins where the last one ended.
    if ((n - 1) % n_slots == 0) return step * (n - 1);
    return step * n;
}

int sweep_of_slot(int n, int n_slots) {
    if (n_slots < 2) throw ConfigError("slots per sweep must be >= 2");
    if (n < 1) throw ConfigError("slot index must be >= 1");
    return (n - 1) / n_slots + 1;
}

double half_swath(double z, const MissionGeometry& geo) {
    if (!(z > 0.0)) throw ConfigError("altitude must be positive");
    return z * geo.swath_factor();
}

SweepPlan build_sweep_plan(const std::vector<double>& altitudes,
                           const MissionGeometry& geo,
                           double z_lo, double z_hi) {
    geo.validate();
    if (altitudes.empty()) throw ConfigError("altitude profile is empty");
    if (static_cast<int>(altitudes.size()) != geo.sweep_count) {
        std::ostringstream msg;
        msg << "altitude profile has " << altitudes.size()
            << " entries but geometry expects " << geo.sweep_count << " sweeps";
        throw ConfigError(msg.str());
    }
    for (std::size_t m = 0; m < altitudes.size(); ++m) {
        if (!(altitudes[m] >= z_lo && altitudes[m] <= z_hi)) {
            std::ostringstream msg;
            msg << "sweep " << (m + 1) << " altitude " << altitudes[m]
                << " m outside the operating band [" << z_lo << ", " << z_hi
                << "] m";
            throw ConstraintError(msg.str());
        }
    }

    SweepPlan plan;
    plan.geometry = geo;
    plan.altitudes = altitudes;
    plan.start_radii.resize(altitudes.size());
    plan.speeds.resize(altitudes.size());

    const double tan_a2 = std::tan(geo.alpha2());
    const double speed_gain = geo.g * std::tan(geo.zeta);
    for (std::size_t m = 0; m < altitudes.size(); ++m) {
        if (m == 0) {
            plan.start_radii[0] = altitudes[0] * std::tan(geo.beta);
        } else {
            plan.start_radii[m] = plan.start_radii[m - 1] +
                                  2.0 * half_swath(altitudes[m], geo) +
                                  (altitudes[m] - altitudes[m - 1]) * tan_a2;
        }
        plan.speeds[m] = std::sqrt(plan.start_radii[m] * speed_gain);
    }
    return plan;
}

std::array<double, 3> position(int n, const SweepPlan& plan) {
    require_slot_in_plan(n, plan);
    const int m = sweep_of_slot(n, plan.geometry.slots_per_sweep);
    const double phi = azimuth(n, plan.geometry.slots_per_sweep);
    const double radius = plan.start_radii[m - 1];
    return {radius * std::cos(phi), radius * std::sin(phi),
            plan.altitudes[m - 1]};
}

double inner_radius(int n, const SweepPlan& plan) {
    require_slot_in_plan(n, plan);
    const int m = sweep_of_slot(n, plan.geometry.slots_per_sweep);
    if (m < 2)
        throw LogicError("inner radius is undefined during the first sweep");
    // Previous sweep's half-swath plus the full widths of all sweeps before it.
    double r = half_swath(plan.altitudes[m - 2], plan.geometry);
    for (int j = 1; j <= m - 2; ++j)
        r += 2.0 * half_swath(plan.altitudes[j - 1], plan.geometry);
    return r;
}

double coverage_increment(int n, const SweepPlan& plan) {
    require_slot_in_plan(n, plan);
    const int n_slots = plan.geometry.slots_per_sweep;
    if ((n - 1) % n_slots == 0) {
        std::ostringstream msg;
        msg << "slot " << n << " is a sweep-start slot excluded from coverage";
        throw LogicError(msg.str());
    }
    const int m = sweep_of_slot(n, n_slots);
    const double arc = plan.geometry.omega() * plan.geometry.delta_t;
    const double r = half_swath(plan.altitudes[m - 1], plan.geometry);
    if (m == 1) return arc * r * r;
    return 2.0 * (r * r + r * inner_radius(n, plan)) * arc;
}

double total_coverage(const SweepPlan& plan) {
    const int n_slots = plan.geometry.slots_per_sweep;
    double area = 0.0;
    for (int n = 1; n <= plan.geometry.total_slots(); ++n) {
        if ((n - 1) % n_slots == 0) continue;
        area += coverage_increment(n, plan);
    }
    return area;
}

double stall_speed(double z, const PlatformSpec& plat,
                   const atmosphere::Constants& atm) {
    plat.validate();
    const double p = atmosphere::pressure_at(z, atm);
    return std::sqrt(2.0 * plat.weight / (p * plat.wing_area * plat.c_l_max));
}

}  // namespace stratosar::platform
