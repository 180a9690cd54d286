#include "stratosar/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "stratosar/energy.hpp"
#include "stratosar/errors.hpp"
#include "stratosar/sensing.hpp"

namespace stratosar::verify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Worst {
    double slack = kInf;
    int index = 0;
    void update(double s, int idx) {
        if (s < slack) {
            slack = s;
            index = idx;
        }
    }
};

CheckResult make_result(const std::string& name, const Worst& worst,
                        std::string detail) {
    CheckResult r;
    r.name = name;
    r.pass = worst.slack >= 0.0;
    r.worst_residual = worst.slack;
    r.worst_index = worst.index;
    r.detail = std::move(detail);
    return r;
}

}  // namespace

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

std::string Report::failures() const {
    std::string out;
    for (const auto& c : checks) {
        if (c.pass) continue;
        if (!out.empty()) out += ", ";
        out += c.name;
    }
    return out;
}

Report check_mission(const platform::SweepPlan& plan,
                     const sca::PowerSchedule& schedule,
                     const sca::PlanningInputs& inputs) {
    const auto& geo = plan.geometry;
    const auto& plat = inputs.platform;
    const int sweeps = geo.sweep_count;
    const int n_slots = geo.slots_per_sweep;
    const int total = geo.total_slots();
    const std::size_t totals = static_cast<std::size_t>(total);
    if (static_cast<int>(plan.altitudes.size()) != sweeps)
        throw ConfigError("plan altitude count does not match the geometry");
    if (schedule.p_rad.size() != totals || schedule.p_com.size() != totals ||
        schedule.p_mot.size() != totals || schedule.p_har.size() != totals ||
        schedule.energy.size() != totals)
        throw ConfigError("schedule length does not match the plan's slots");

    Report report;

    // Altitude operating band.
    {
        Worst w;
        for (int m = 0; m < sweeps; ++m) {
            const double z = plan.altitudes[static_cast<std::size_t>(m)];
            w.update(z - plat.z_min, m + 1);
            w.update(plat.z_max - z, m + 1);
        }
        report.checks.push_back(
            make_result("altitude_band", w, "slack to the nearer bound [m] per sweep"));
    }

    // Sweep radii follow the tiling recursion for these altitudes.
    {
        const auto expected = platform::build_sweep_plan(
            plan.altitudes, geo, plat.z_min, plat.z_max);
        Worst w;
        for (int m = 0; m < sweeps; ++m) {
            const std::size_t im = static_cast<std::size_t>(m);
            const double err =
                std::abs(plan.start_radii[im] - expected.start_radii[im]) /
                std::max(1.0, std::abs(expected.start_radii[im]));
            w.update(1e-9 - err, m + 1);
        }
        report.checks.push_back(make_result(
            "radius_recursion", w,
            "1e-9 minus the relative radius error per sweep"));
    }

    // Banked-turn speed V = sqrt(g tan(zeta) x).
    {
        Worst w;
        for (int m = 0; m < sweeps; ++m) {
            const std::size_t im = static_cast<std::size_t>(m);
            const double v_turn =
                std::sqrt(geo.g * std::tan(geo.zeta) * plan.start_radii[im]);
            const double err = std::abs(plan.speeds[im] - v_turn) /
                               std::max(1.0, v_turn);
            w.update(1e-9 - err, m + 1);
        }
        report.checks.push_back(make_result(
            "turn_speed", w, "1e-9 minus the relative speed error per sweep"));
    }

    // Stall floor and airspeed ceiling.
    {
        Worst w;
        for (int m = 0; m < sweeps; ++m) {
            const std::size_t im = static_cast<std::size_t>(m);
            const double v = plan.speeds[im];
            const double v_stall = platform::stall_speed(
                plan.altitudes[im], plat, inputs.atmosphere);
            w.update(v - v_stall, m + 1);
            w.update(plat.v_max - v, m + 1);
        }
        report.checks.push_back(make_result(
            "speed_band", w, "slack to stall/ceiling [m/s] per sweep"));
    }

    // Power ranges.
    {
        Worst w;
        for (int n = 1; n <= total; ++n) {
            const std::size_t i = static_cast<std::size_t>(n - 1);
            const double grace_rad = 1e-9 * std::max(1.0, inputs.radar.p_rad_max);
            const double grace_com = 1e-9 * std::max(1.0, inputs.comm.p_com_max);
            w.update(schedule.p_rad[i], n);
            w.update(inputs.radar.p_rad_max - schedule.p_rad[i] + grace_rad, n);
            w.update(schedule.p_com[i], n);
            w.update(inputs.comm.p_com_max - schedule.p_com[i] + grace_com, n);
            w.update(schedule.p_mot[i], n);
        }
        report.checks.push_back(make_result(
            "power_range", w, "slack to the power boxes [W] per slot"));
    }

    // Downlink sustains the sensing data rate (strict inequality).
    {
        Worst w;
        for (int n = 1; n <= total; ++n) {
            const std::size_t i = static_cast<std::size_t>(n - 1);
            const int m = platform::sweep_of_slot(n, n_slots);
            const double z = plan.altitudes[static_cast<std::size_t>(m - 1)];
            const auto pos = platform::position(n, plan);
            const auto [ok, slack] = sensing::link_feasible(
                schedule.p_com[i], pos, z, inputs.radar, inputs.comm, geo);
            (void)ok;
            // link_feasible already subtracts the configured rate margin;
            // raw strict feasibility needs margin + slack > 0.
            w.update(slack + inputs.comm.rate_margin, n);
        }
        report.checks.push_back(make_result(
            "link_rate", w,
            "backhaul rate minus sensing data rate [bit/s] per slot"));
    }

    // Imaging SNR threshold, passed with half the configured margin so a
    // schedule snapped to the full margin verifies robustly while the raw
    // strict threshold still holds.
    {
        Worst w;
        const double threshold =
            inputs.radar.snr_min * (1.0 + 0.5 * inputs.radar.snr_margin);
        for (int n = 1; n <= total; ++n) {
            const std::size_t i = static_cast<std::size_t>(n - 1);
            const int m = platform::sweep_of_slot(n, n_slots);
            const std::size_t im = static_cast<std::size_t>(m - 1);
            const double snr =
                sensing::radar_snr(schedule.p_rad[i], plan.altitudes[im],
                                   plan.speeds[im], inputs.radar, geo);
            w.update((snr - threshold) / inputs.radar.snr_min, n);
        }
        report.checks.push_back(make_result(
            "imaging_snr", w,
            "margined SNR slack, relative to the threshold, per slot"));
    }

    // Reported harvest matches the irradiance model.
    {
        Worst w;
        for (int n = 1; n <= total; ++n) {
            const std::size_t i = static_cast<std::size_t>(n - 1);
            const int m = platform::sweep_of_slot(n, n_slots);
            const double expected = atmosphere::harvested_power(
                plan.altitudes[static_cast<std::size_t>(m - 1)], plat.eta_h,
                plat.panel_area, inputs.atmosphere);
            const double err = std::abs(schedule.p_har[i] - expected) /
                               std::max(1.0, expected);
            w.update(1e-9 - err, n);
        }
        report.checks.push_back(make_result(
            "harvest_power", w,
            "1e-9 minus the relative harvest-power error per slot"));
    }

    // Battery ledger: the energy trace must reproduce the sign-selected
    // charge/discharge recursion from the schedule's own powers.
    {
        Worst w;
        std::string detail = "1e-9 minus the relative ledger error per slot";
        try {
            const auto ledger = energy::run_ledger(
                plat.e_ini, schedule.p_har, schedule.p_mot, schedule.p_rad,
                schedule.p_com, geo.delta_t, plat);
            for (int n = 1; n <= total; ++n) {
                const std::size_t i = static_cast<std::size_t>(n - 1);
                const double err =
                    std::abs(schedule.energy[i] - ledger.energy[i]) /
                    std::max(1.0, std::abs(ledger.energy[i]));
                w.update(1e-9 - err, n);
            }
        } catch (const EnergyDepletedError& err) {
            w.update(-1.0, err.slot());
            detail = err.what();
        }
        report.checks.push_back(make_result("battery_ledger", w, detail));
    }

    // Battery floor (and positivity) after the first slot.
    {
        Worst w;
        const double floor = inputs.energy_floor_fraction * plat.e_ini;
        const double grace = 1e-9 * std::max(1.0, floor);
        w.update(schedule.energy[0] - plat.e_ini + grace, 1);
        w.update(plat.e_ini - schedule.energy[0] + grace, 1);
        for (int n = 2; n <= total; ++n) {
            const std::size_t i = static_cast<std::size_t>(n - 1);
            w.update(schedule.energy[i] - floor + grace, n);
        }
        report.checks.push_back(make_result(
            "battery_floor", w,
            "energy slack above the reserve floor [J] per slot"));
    }

    return report;
}

}  // namespace stratosar::verify
