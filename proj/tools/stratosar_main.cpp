// Command-line front end: plan / bound / oracle / validate.
//
// Exit codes: 0 success, 2 mission infeasible, 3 verification failure,
// 4 configuration error (bad file, bad parameters, bad usage).
#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "stratosar/errors.hpp"
#include "stratosar/export.hpp"
#include "stratosar/oracle.hpp"
#include "stratosar/run.hpp"
#include "stratosar/scenario.hpp"
#include "stratosar/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerification = 3;
constexpr int kExitConfig = 4;

struct PlanOptions {
    std::string scenario_file;
    std::string out_dir = "stratosar_out";
    int n_cap = 0;          // 0 = keep scenario value
    double tol = 0.0;       // 0 = keep scenario values
    std::string fix_radar_file;
    std::string fix_comm_file;
    bool dump_program = false;
};

void apply_overrides(stratosar::scenario::Scenario& sc, const PlanOptions& opt) {
    auto& in = sc.inputs;
    if (opt.n_cap > 0) in.n_cap = opt.n_cap;
    if (opt.tol > 0.0) {
        in.xi1_tol = opt.tol;
        in.xi2_tol = opt.tol;
    }
    if (!opt.fix_radar_file.empty())
        in.fixed_radar_power = stratosar::scenario::load_power_pins(opt.fix_radar_file);
    if (!opt.fix_comm_file.empty())
        in.fixed_comm_power = stratosar::scenario::load_power_pins(opt.fix_comm_file);
    in.validate();
    sc.config_hash = stratosar::scenario::config_digest(in);
}

void print_verification(const stratosar::verify::Report& report) {
    for (const auto& c : report.checks) {
        std::cout << (c.pass ? "  PASS  " : "  FAIL  ") << c.name
                  << " (worst slack " << c.worst_residual;
        if (c.worst_index > 0) std::cout << " at index " << c.worst_index;
        std::cout << ")\n";
    }
}

int cmd_plan(const PlanOptions& opt) {
    auto sc = stratosar::scenario::load_scenario(opt.scenario_file);
    apply_overrides(sc, opt);

    if (opt.dump_program) {
        const auto it = stratosar::sca::initial_iterate(
            sc.inputs.geometry.slots_per_sweep, sc.inputs);
        const auto p5 = stratosar::sca::build_p5(
            it, sc.inputs.geometry.slots_per_sweep, sc.inputs, {});
        std::error_code ec;
        std::filesystem::create_directories(opt.out_dir, ec);
        const auto path =
            (std::filesystem::path(opt.out_dir) / "program.txt").string();
        std::ofstream out(path);
        if (!out)
            throw stratosar::ConfigError("cannot write '" + path + "'");
        out << p5.program.dump();
        std::cout << "surrogate program (initial iterate, N="
                  << sc.inputs.geometry.slots_per_sweep << ") -> " << path
                  << "\n";
    }

    stratosar::run::RunReport report;
    report.scenario = sc;
    bool infeasible = false;
    try {
        report = stratosar::run::run_plan(sc);
    } catch (const stratosar::ConstraintError& err) {
        report.error = err.what();
        infeasible = true;
    }
    stratosar::exporter::write_all(report, opt.out_dir);

    std::cout << "scenario        " << sc.name << "\n";
    std::cout << "config hash     " << sc.config_hash << "\n";
    if (infeasible) {
        std::cout << "result          infeasible: " << report.error << "\n";
        std::cout << "outputs         " << opt.out_dir << "\n";
        return kExitInfeasible;
    }
    const auto& res = report.result;
    std::cout << "slots per sweep " << res.n_star << " (bound " << res.n_upper
              << ", deficit " << res.t_tilde << " W)\n";
    std::cout << "coverage        " << res.coverage * 1e-6 << " km^2\n";
    std::cout << "altitudes [m]  ";
    for (const double z : res.plan.altitudes) std::cout << ' ' << z;
    std::cout << "\n";
    std::cout << "verification    "
              << (report.verification.all_pass() ? "pass" : "FAIL") << "\n";
    print_verification(report.verification);
    std::cout << "outputs         " << opt.out_dir << "\n";
    if (!report.verification.all_pass()) return kExitVerification;
    return kExitOk;
}

int cmd_bound(const std::string& scenario_file) {
    const auto sc = stratosar::scenario::load_scenario(scenario_file);
    const auto bound = stratosar::sca::bound_slot_count(sc.inputs);
    std::cout << "scenario   " << sc.name << "\n";
    std::cout << "deficit_w  " << bound.t_tilde << "\n";
    std::cout << "n_upper    " << bound.n_upper << "\n";
    for (const auto& row : bound.trace)
        std::cout << "  iter " << row.iteration << ": deficit "
                  << row.objective << " W, bound " << row.n_slots << " ("
                  << row.solver_status << ")\n";
    return kExitOk;
}

int cmd_oracle(const std::string& scenario_file, int grid,
               const std::string& out_dir) {
    const auto sc = stratosar::scenario::load_scenario(scenario_file);
    const auto best = stratosar::oracle::grid_search(sc.inputs, grid);
    std::cout << "scenario        " << sc.name << "\n";
    std::cout << "evaluated       " << best.evaluated << " combinations ("
              << best.feasible_count << " feasible)\n";
    std::cout << "slots per sweep " << best.n_star << "\n";
    std::cout << "coverage        " << best.coverage * 1e-6 << " km^2\n";
    std::cout << "altitudes [m]  ";
    for (const double z : best.plan.altitudes) std::cout << ' ' << z;
    std::cout << "\n";
    if (!out_dir.empty()) {
        stratosar::run::RunReport report;
        report.scenario = sc;
        report.result.plan = best.plan;
        report.result.schedule = best.schedule;
        report.result.coverage = best.coverage;
        report.result.n_star = best.n_star;
        report.verification = stratosar::verify::check_mission(
            best.plan, best.schedule, sc.inputs);
        stratosar::exporter::write_all(report, out_dir);
        std::cout << "outputs         " << out_dir << "\n";
    }
    return kExitOk;
}

/// Reads an exported results.csv back into a plan + schedule.
std::pair<stratosar::platform::SweepPlan, stratosar::sca::PowerSchedule>
load_plan_csv(const std::string& path,
              const stratosar::sca::PlanningInputs& inputs) {
    std::ifstream in(path);
    if (!in)
        throw stratosar::ConfigError("cannot open plan file '" + path + "'");
    std::string line;
    if (!std::getline(in, line))
        throw stratosar::ConfigError("plan file '" + path + "' is empty");

    auto split = [](const std::string& text) {
        std::vector<std::string> cells;
        std::stringstream ss(text);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        return cells;
    };
    const auto header = split(line);
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
    for (const char* need :
         {"slot", "sweep", "x_m", "y_m", "z_m", "speed_mps", "p_rad_w",
          "p_com_w", "p_mot_w", "p_har_w", "energy_j"})
        if (col.find(need) == col.end())
            throw stratosar::ConfigError("plan file '" + path +
                                         "' lacks column '" + need + "'");

    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto cells = split(line);
        if (cells.size() < header.size())
            throw stratosar::ConfigError("plan file '" + path +
                                         "' has a short row");
        rows.push_back(std::move(cells));
    }
    if (rows.empty())
        throw stratosar::ConfigError("plan file '" + path + "' has no slots");

    auto num = [&](const std::vector<std::string>& cells, const char* name) {
        try {
            return std::stod(cells[col.at(name)]);
        } catch (const std::exception&) {
            throw stratosar::ConfigError(std::string("plan file value for '") +
                                         name + "' is not numeric");
        }
    };

    int sweeps = 0;
    for (const auto& cells : rows)
        sweeps = std::max(sweeps, static_cast<int>(num(cells, "sweep")));
    if (sweeps < 1 || static_cast<int>(rows.size()) % sweeps != 0)
        throw stratosar::ConfigError(
            "plan file slot count is not a multiple of the sweep count");
    const int n_slots = static_cast<int>(rows.size()) / sweeps;

    stratosar::platform::SweepPlan plan;
    plan.geometry = inputs.geometry;
    plan.geometry.sweep_count = sweeps;
    plan.geometry.slots_per_sweep = n_slots;
    plan.geometry.validate();
    plan.altitudes.resize(static_cast<std::size_t>(sweeps));
    plan.start_radii.resize(static_cast<std::size_t>(sweeps));
    plan.speeds.resize(static_cast<std::size_t>(sweeps));

    stratosar::sca::PowerSchedule sched;
    const std::size_t total = rows.size();
    sched.p_rad.resize(total);
    sched.p_com.resize(total);
    sched.p_mot.resize(total);
    sched.p_har.resize(total);
    sched.energy.resize(total);

    for (const auto& cells : rows) {
        const int slot = static_cast<int>(num(cells, "slot"));
        if (slot < 1 || slot > static_cast<int>(total))
            throw stratosar::ConfigError("plan file slot index out of range");
        const std::size_t i = static_cast<std::size_t>(slot - 1);
        const int m = static_cast<int>(num(cells, "sweep"));
        const std::size_t im = static_cast<std::size_t>(m - 1);
        plan.altitudes[im] = num(cells, "z_m");
        plan.start_radii[im] =
            std::hypot(num(cells, "x_m"), num(cells, "y_m"));
        plan.speeds[im] = num(cells, "speed_mps");
        sched.p_rad[i] = num(cells, "p_rad_w");
        sched.p_com[i] = num(cells, "p_com_w");
        sched.p_mot[i] = num(cells, "p_mot_w");
        sched.p_har[i] = num(cells, "p_har_w");
        sched.energy[i] = num(cells, "energy_j");
    }
    return {std::move(plan), std::move(sched)};
}

int cmd_validate(const std::string& scenario_file, const std::string& plan_file) {
    const auto sc = stratosar::scenario::load_scenario(scenario_file);
    const auto [plan, schedule] = load_plan_csv(plan_file, sc.inputs);
    const auto report = stratosar::verify::check_mission(plan, schedule, sc.inputs);
    std::cout << "scenario     " << sc.name << "\n";
    std::cout << "plan         " << plan_file << " (" << plan.geometry.sweep_count
              << " sweeps x " << plan.geometry.slots_per_sweep << " slots)\n";
    print_verification(report);
    if (!report.all_pass()) {
        std::cout << "verification FAIL: " << report.failures() << "\n";
        return kExitVerification;
    }
    std::cout << "verification pass\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "stratosar - joint sweep-trajectory and power planning for a "
        "solar-powered stratospheric SAR platform"};
    app.require_subcommand(1);

    PlanOptions plan_opt;
    auto* plan = app.add_subcommand(
        "plan", "Optimize a mission plan and export report tables");
    plan->add_option("--scenario", plan_opt.scenario_file,
                     "scenario YAML file")->required();
    plan->add_option("--out", plan_opt.out_dir,
                     "output directory (default: stratosar_out)");
    plan->add_option("--n-cap", plan_opt.n_cap,
                     "override the slot-count cap");
    plan->add_option("--tol", plan_opt.tol,
                     "override both convergence tolerances");
    auto* fix_radar = plan->add_option(
        "--fix-radar-power", plan_opt.fix_radar_file,
        "benchmark mode: pin radar power to the value(s) in this file [W]");
    auto* fix_comm = plan->add_option(
        "--fix-comm-power", plan_opt.fix_comm_file,
        "benchmark mode: pin comm power to the value(s) in this file [W]");
    fix_radar->excludes(fix_comm);
    fix_comm->excludes(fix_radar);
    plan->add_flag("--dump-program", plan_opt.dump_program,
                   "also write the initial surrogate program to program.txt");

    std::string bound_scenario;
    auto* bound = app.add_subcommand(
        "bound", "Slot-count upper bound from the energy-deficit phase");
    bound->add_option("--scenario", bound_scenario, "scenario YAML file")
        ->required();

    std::string oracle_scenario;
    std::string oracle_out;
    int oracle_grid = 0;
    auto* oracle = app.add_subcommand(
        "oracle", "Exhaustive gridded reference search (small cases)");
    oracle->add_option("--scenario", oracle_scenario, "scenario YAML file")
        ->required();
    oracle->add_option("--grid", oracle_grid,
                       "altitude grid points per sweep")->required();
    oracle->add_option("--out", oracle_out,
                       "optionally export the oracle plan here");

    std::string validate_scenario;
    std::string validate_plan;
    auto* validate = app.add_subcommand(
        "validate", "Re-check an exported plan against the mission model");
    validate->add_option("--scenario", validate_scenario,
                         "scenario YAML file")->required();
    validate->add_option("--plan", validate_plan,
                         "results.csv from a previous run")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (plan->parsed()) return cmd_plan(plan_opt);
        if (bound->parsed()) return cmd_bound(bound_scenario);
        if (oracle->parsed())
            return cmd_oracle(oracle_scenario, oracle_grid, oracle_out);
        if (validate->parsed())
            return cmd_validate(validate_scenario, validate_plan);
    } catch (const stratosar::ConfigError& err) {
        std::cerr << "configuration error: " << err.what() << "\n";
        return kExitConfig;
    } catch (const stratosar::DomainError& err) {
        std::cerr << "configuration error: " << err.what() << "\n";
        return kExitConfig;
    } catch (const stratosar::ConstraintError& err) {
        std::cerr << "infeasible: " << err.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return kExitConfig;
}
