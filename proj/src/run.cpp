#include "stratosar/run.hpp"

#include <chrono>

namespace stratosar::run {

RunReport run_plan(const scenario::Scenario& scenario) {
    const auto t0 = std::chrono::steady_clock::now();
    RunReport report;
    report.scenario = scenario;
    report.result = sca::optimize(scenario.inputs);
    report.verification = verify::check_mission(
        report.result.plan, report.result.schedule, scenario.inputs);
    const auto t1 = std::chrono::steady_clock::now();
    report.wall_time_s = std::chrono::duration<double>(t1 - t0).count();
    return report;
}

}  // namespace stratosar::run
