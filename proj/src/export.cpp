#include "stratosar/export.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "stratosar/errors.hpp"

namespace stratosar::exporter {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write output file '" + path + "'");
    out.precision(17);
    return out;
}

bool has_plan(const run::RunReport& report) {
    return !report.result.schedule.p_rad.empty() &&
           !report.result.plan.altitudes.empty();
}

}  // namespace

void write_results_csv(const run::RunReport& report, const std::string& path) {
    auto out = open_out(path);
    out << "slot,sweep,azimuth_rad,x_m,y_m,z_m,speed_mps,p_rad_w,p_com_w,"
           "p_mot_w,p_har_w,energy_j,coverage_m2\n";
    if (!has_plan(report)) return;
    const auto& plan = report.result.plan;
    const auto& s = report.result.schedule;
    const int n_slots = plan.geometry.slots_per_sweep;
    const int total = plan.geometry.total_slots();
    for (int n = 1; n <= total; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        const int m = platform::sweep_of_slot(n, n_slots);
        const auto pos = platform::position(n, plan);
        // Sweep-start slots reposition the platform and image no new ground.
        const bool sweep_start = (n - 1) % n_slots == 0;
        const double inc =
            sweep_start ? 0.0 : platform::coverage_increment(n, plan);
        out << n << ',' << m << ',' << platform::azimuth(n, n_slots) << ','
            << pos[0] << ',' << pos[1] << ',' << pos[2] << ','
            << plan.speeds[static_cast<std::size_t>(m - 1)] << ','
            << s.p_rad[i] << ',' << s.p_com[i] << ',' << s.p_mot[i] << ','
            << s.p_har[i] << ',' << s.energy[i] << ',' << inc << '\n';
    }
}

void write_energy_csv(const run::RunReport& report, const std::string& path) {
    auto out = open_out(path);
    out << "slot,energy_j,energy_ratio,net_power_w,efficiency,harvest_w,"
           "draw_w\n";
    if (!has_plan(report)) return;
    const auto& s = report.result.schedule;
    const double e_ini = report.scenario.inputs.platform.e_ini;
    for (std::size_t i = 0; i < s.energy.size(); ++i) {
        const double draw = s.p_mot[i] + s.p_rad[i] + s.p_com[i];
        out << (i + 1) << ',' << s.energy[i] << ',' << s.energy[i] / e_ini
            << ',' << (s.p_har[i] - draw) << ','
            << (i < s.efficiency.size() ? s.efficiency[i] : 1.0) << ','
            << s.p_har[i] << ',' << draw << '\n';
    }
}

void write_convergence_csv(const run::RunReport& report,
                           const std::string& path) {
    auto out = open_out(path);
    out << "phase,n_slots,iteration,objective,xi,solver_status,max_residual\n";
    for (const auto& row : report.result.trace) {
        out << row.phase << ',' << row.n_slots << ',' << row.iteration << ','
            << row.objective << ',' << row.xi << ',' << row.solver_status
            << ',' << row.max_residual << '\n';
    }
}

void write_summary_json(const run::RunReport& report, const std::string& path) {
    using nlohmann::json;
    json j;
    j["scenario"] = report.scenario.name;
    j["config_hash"] = report.scenario.config_hash;
    j["version"] = report.version;
    j["backend"] = report.scenario.inputs.solver.backend;
    j["seed"] = report.scenario.inputs.seed;
    j["wall_time_s"] = report.wall_time_s;
    j["error"] = report.error.empty() ? json() : json(report.error);

    if (has_plan(report)) {
        const auto& res = report.result;
        j["coverage_m2"] = res.coverage;
        j["coverage_km2"] = res.coverage * 1e-6;
        j["n_star"] = res.n_star;
        j["n_upper"] = res.n_upper;
        j["deficit_w"] = res.t_tilde;
        j["plan"] = {
            {"altitudes_m", res.plan.altitudes},
            {"start_radii_m", res.plan.start_radii},
            {"speeds_mps", res.plan.speeds},
            {"slots_per_sweep", res.plan.geometry.slots_per_sweep},
            {"sweep_count", res.plan.geometry.sweep_count},
            {"slot_duration_s", res.plan.geometry.delta_t},
        };
        double e_min = res.schedule.energy.empty() ? 0.0
                                                   : res.schedule.energy[0];
        for (const double e : res.schedule.energy) e_min = std::min(e_min, e);
        j["energy_min_j"] = e_min;
        j["feasible"] = report.error.empty() && report.verification.all_pass();
    } else {
        j["coverage_m2"] = json();
        j["n_star"] = json();
        j["n_upper"] = report.result.n_upper;
        j["feasible"] = false;
    }

    json checks = json::array();
    for (const auto& c : report.verification.checks) {
        checks.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"worst_residual", c.worst_residual},
                          {"worst_index", c.worst_index},
                          {"detail", c.detail}});
    }
    j["checks"] = checks;

    json skipped = json::array();
    for (const auto& s : report.result.skipped)
        skipped.push_back({{"n_slots", s.n_slots}, {"reason", s.reason}});
    j["skipped_slot_counts"] = skipped;

    json prov = json::object();
    for (const auto& [key, source] : report.scenario.provenance)
        prov[key] = scenario::to_string(source);
    j["provenance"] = prov;

    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

void write_plot_scripts(const std::string& dir) {
    const auto path = [&dir](const char* name) {
        return (std::filesystem::path(dir) / name).string();
    };

    open_out(path("plot_trajectory.py")) << R"PY(#!/usr/bin/env python3
"""3-D sweep trajectory from results.csv (written next to this script)."""
import csv
import os
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, "results.csv"), newline="") as fh:
    rows = list(csv.DictReader(fh))
if not rows:
    print("results.csv has no rows; nothing to plot")
    sys.exit(0)

fig = plt.figure(figsize=(7, 6))
ax = fig.add_subplot(projection="3d")
sweeps = sorted({int(r["sweep"]) for r in rows})
for m in sweeps:
    pts = [r for r in rows if int(r["sweep"]) == m]
    ax.plot(
        [float(r["x_m"]) / 1e3 for r in pts],
        [float(r["y_m"]) / 1e3 for r in pts],
        [float(r["z_m"]) / 1e3 for r in pts],
        marker="o", markersize=2.5, linewidth=1.0, label=f"sweep {m}",
    )
ax.set_xlabel("x [km]")
ax.set_ylabel("y [km]")
ax.set_zlabel("z [km]")
ax.set_title("Flight path")
ax.legend(loc="upper left", fontsize=8)
out = os.path.join(here, "trajectory.png")
fig.savefig(out, dpi=160, bbox_inches="tight")
print(f"wrote {out}")
)PY";

    open_out(path("plot_power.py")) << R"PY(#!/usr/bin/env python3
"""Per-slot power allocation curves from results.csv."""
import csv
import os
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, "results.csv"), newline="") as fh:
    rows = list(csv.DictReader(fh))
if not rows:
    print("results.csv has no rows; nothing to plot")
    sys.exit(0)

slots = [int(r["slot"]) for r in rows]
fig, ax = plt.subplots(figsize=(8, 4.5))
for key, label in [
    ("p_mot_w", "propulsion"),
    ("p_har_w", "harvested"),
    ("p_rad_w", "radar"),
    ("p_com_w", "downlink"),
]:
    ax.plot(slots, [float(r[key]) for r in rows], label=label)
ax.set_xlabel("slot")
ax.set_ylabel("power [W]")
ax.set_yscale("log")
ax.set_title("Power allocation")
ax.grid(True, alpha=0.3)
ax.legend(fontsize=8)
out = os.path.join(here, "power.png")
fig.savefig(out, dpi=160, bbox_inches="tight")
print(f"wrote {out}")
)PY";

    open_out(path("plot_energy.py")) << R"PY(#!/usr/bin/env python3
"""Battery energy ratio over the mission from energy.csv."""
import csv
import os
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, "energy.csv"), newline="") as fh:
    rows = list(csv.DictReader(fh))
if not rows:
    print("energy.csv has no rows; nothing to plot")
    sys.exit(0)

slots = [int(r["slot"]) for r in rows]
ratio = [float(r["energy_ratio"]) for r in rows]
fig, ax = plt.subplots(figsize=(8, 4.5))
ax.plot(slots, ratio, marker="o", markersize=2.5)
ax.axhline(1.0, color="gray", linewidth=0.8, linestyle="--", label="initial")
ax.set_xlabel("slot")
ax.set_ylabel("E(n) / E(1)")
ax.set_title("Battery energy ratio")
ax.grid(True, alpha=0.3)
ax.legend(fontsize=8)
out = os.path.join(here, "energy.png")
fig.savefig(out, dpi=160, bbox_inches="tight")
print(f"wrote {out}")
)PY";
}

void write_all(const run::RunReport& report, const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw ConfigError("cannot create output directory '" + dir +
                          "': " + ec.message());
    const auto path = [&dir](const char* name) {
        return (std::filesystem::path(dir) / name).string();
    };
    write_results_csv(report, path("results.csv"));
    write_energy_csv(report, path("energy.csv"));
    write_convergence_csv(report, path("convergence.csv"));
    write_summary_json(report, path("summary.json"));
    write_plot_scripts(dir);
}

}  // namespace stratosar::exporter
