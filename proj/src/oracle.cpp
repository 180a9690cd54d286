#include "stratosar/oracle.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "stratosar/errors.hpp"
#include "stratosar/verify.hpp"

namespace stratosar::oracle {

OracleResult grid_search(const sca::PlanningInputs& inputs, int grid_points,
                         long long max_combos) {
    inputs.validate();
    if (grid_points < 2)
        throw ConfigError("grid search needs at least 2 points per sweep");
    const int sweeps = inputs.geometry.sweep_count;
    const auto& plat = inputs.platform;

    double estimate = static_cast<double>(inputs.n_cap - 1);
    for (int m = 0; m < sweeps; ++m) estimate *= grid_points;
    if (!(estimate <= static_cast<double>(max_combos))) {
        std::ostringstream msg;
        msg << "grid search would evaluate ~" << estimate << " combinations ("
            << grid_points << "^" << sweeps << " altitude tuples x "
            << (inputs.n_cap - 1) << " slot counts), above the limit "
            << max_combos << "; reduce the grid or the slot-count cap";
        throw ConfigError(msg.str());
    }

    std::vector<double> levels(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i)
        levels[static_cast<std::size_t>(i)] =
            plat.z_min + (plat.z_max - plat.z_min) * i / (grid_points - 1);

    OracleResult best;
    bool found = false;

    std::vector<int> idx(static_cast<std::size_t>(sweeps), 0);
    std::vector<double> altitudes(static_cast<std::size_t>(sweeps));
    for (int n = 2; n <= inputs.n_cap; ++n) {
        platform::MissionGeometry geo = inputs.geometry;
        geo.slots_per_sweep = n;
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            for (int m = 0; m < sweeps; ++m)
                altitudes[static_cast<std::size_t>(m)] =
                    levels[static_cast<std::size_t>(idx[static_cast<std::size_t>(m)])];
            ++best.evaluated;
            try {
                const auto plan = platform::build_sweep_plan(
                    altitudes, geo, plat.z_min, plat.z_max);
                const auto schedule =
                    sca::minimal_power_schedule(plan, inputs);
                const auto report =
                    verify::check_mission(plan, schedule, inputs);
                if (report.all_pass()) {
                    ++best.feasible_count;
                    const double coverage = platform::total_coverage(plan);
                    // Strict improvement keeps the first (lowest slot count,
                    // lexicographically smallest altitudes) on ties.
                    if (!found || coverage > best.coverage) {
                        found = true;
                        best.coverage = coverage;
                        best.plan = plan;
                        best.schedule = schedule;
                        best.n_star = n;
                    }
                }
            } catch (const ConstraintError&) {
                // infeasible combination; keep scanning
            }

            int carry = sweeps - 1;
            while (carry >= 0) {
                if (++idx[static_cast<std::size_t>(carry)] < grid_points) break;
                idx[static_cast<std::size_t>(carry)] = 0;
                --carry;
            }
            if (carry < 0) break;
        }
    }

    if (!found)
        throw ConstraintError(
            "grid search found no feasible altitude/slot-count combination");
    return best;
}

}  // namespace stratosar::oracle
