// Python bindings for the planning library's main operations:
// scenario loading, mission optimization, slot-count bounding, the
// minimal-power snap, verification, the grid oracle, and the underlying
// physical model evaluators.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stratosar/atmosphere.hpp"
#include "stratosar/energy.hpp"
#include "stratosar/errors.hpp"
#include "stratosar/export.hpp"
#include "stratosar/oracle.hpp"
#include "stratosar/platform.hpp"
#include "stratosar/run.hpp"
#include "stratosar/scenario.hpp"
#include "stratosar/sensing.hpp"
#include "stratosar/verify.hpp"

namespace py = pybind11;
using namespace stratosar;

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Joint sweep-trajectory and power planning for a solar-powered "
        "stratospheric SAR platform";
    m.attr("__version__") = run::kVersion;

    // Registration order matters: translators are tried last-first, so the
    // derived depletion error still lands on ConstraintError.
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<LogicError>(m, "LogicError", PyExc_RuntimeError);
    py::register_exception<ConstraintError>(m, "ConstraintError",
                                            PyExc_RuntimeError);

    // ---- parameter records -------------------------------------------------
    py::class_<atmosphere::Constants>(m, "AtmosphereConstants")
        .def(py::init<>())
        .def_readwrite("p_b1", &atmosphere::Constants::p_b1)
        .def_readwrite("T_b", &atmosphere::Constants::T_b)
        .def_readwrite("L_b", &atmosphere::Constants::L_b)
        .def_readwrite("H1", &atmosphere::Constants::H1)
        .def_readwrite("H2", &atmosphere::Constants::H2)
        .def_readwrite("p_0", &atmosphere::Constants::p_0)
        .def_readwrite("I_0", &atmosphere::Constants::I_0)
        .def_readwrite("alpha_ext", &atmosphere::Constants::alpha_ext)
        .def("pressure_exponent", &atmosphere::Constants::pressure_exponent);

    py::class_<platform::MissionGeometry>(m, "MissionGeometry")
        .def(py::init<>())
        .def_readwrite("sweep_count", &platform::MissionGeometry::sweep_count)
        .def_readwrite("slots_per_sweep",
                       &platform::MissionGeometry::slots_per_sweep)
        .def_readwrite("delta_t", &platform::MissionGeometry::delta_t)
        .def_readwrite("beta", &platform::MissionGeometry::beta)
        .def_readwrite("alpha", &platform::MissionGeometry::alpha)
        .def_readwrite("zeta", &platform::MissionGeometry::zeta)
        .def_readwrite("g", &platform::MissionGeometry::g)
        .def("alpha1", &platform::MissionGeometry::alpha1)
        .def("alpha2", &platform::MissionGeometry::alpha2)
        .def("omega", &platform::MissionGeometry::omega)
        .def("swath_factor", &platform::MissionGeometry::swath_factor)
        .def("period", &platform::MissionGeometry::period)
        .def("total_slots", &platform::MissionGeometry::total_slots)
        .def("validate", &platform::MissionGeometry::validate);

    py::class_<PlatformSpec>(m, "PlatformSpec")
        .def(py::init<>())
        .def_readwrite("eta_p", &PlatformSpec::eta_p)
        .def_readwrite("eta_e", &PlatformSpec::eta_e)
        .def_readwrite("zeta", &PlatformSpec::zeta)
        .def_readwrite("wing_area", &PlatformSpec::wing_area)
        .def_readwrite("c_d0", &PlatformSpec::c_d0)
        .def_readwrite("weight", &PlatformSpec::weight)
        .def_readwrite("e_osw", &PlatformSpec::e_osw)
        .def_readwrite("aspect_ratio", &PlatformSpec::aspect_ratio)
        .def_readwrite("c_l_max", &PlatformSpec::c_l_max)
        .def_readwrite("eta_b", &PlatformSpec::eta_b)
        .def_readwrite("eta_c", &PlatformSpec::eta_c)
        .def_readwrite("e_ini", &PlatformSpec::e_ini)
        .def_readwrite("eta_h", &PlatformSpec::eta_h)
        .def_readwrite("panel_area", &PlatformSpec::panel_area)
        .def_readwrite("z_min", &PlatformSpec::z_min)
        .def_readwrite("z_max", &PlatformSpec::z_max)
        .def_readwrite("v_max", &PlatformSpec::v_max)
        .def("epsilon", &PlatformSpec::epsilon)
        .def("validate", &PlatformSpec::validate);

    py::class_<RadarSpec>(m, "RadarSpec")
        .def(py::init<>())
        .def_readwrite("b_w", &RadarSpec::b_w)
        .def_readwrite("t_p", &RadarSpec::t_p)
        .def_readwrite("prf", &RadarSpec::prf)
        .def_readwrite("g_t", &RadarSpec::g_t)
        .def_readwrite("g_r", &RadarSpec::g_r)
        .def_readwrite("lambda_", &RadarSpec::lambda)
        .def_readwrite("sigma_b", &RadarSpec::sigma_b)
        .def_readwrite("t_sys", &RadarSpec::t_sys)
        .def_readwrite("f_n", &RadarSpec::f_n)
        .def_readwrite("l_s", &RadarSpec::l_s)
        .def_readwrite("snr_min", &RadarSpec::snr_min)
        .def_readwrite("p_rad_max", &RadarSpec::p_rad_max)
        .def_readwrite("snr_margin", &RadarSpec::snr_margin)
        .def("validate", &RadarSpec::validate);

    py::class_<CommSpec>(m, "CommSpec")
        .def(py::init<>())
        .def_readwrite("b_c", &CommSpec::b_c)
        .def_readwrite("rho_0", &CommSpec::rho_0)
        .def_readwrite("noise_power", &CommSpec::noise_power)
        .def_readwrite("bs_position", &CommSpec::bs_position)
        .def_readwrite("p_com_max", &CommSpec::p_com_max)
        .def_readwrite("rate_margin", &CommSpec::rate_margin)
        .def("validate", &CommSpec::validate);

    py::class_<conic::SolverSettings>(m, "SolverSettings")
        .def(py::init<>())
        .def_readwrite("backend", &conic::SolverSettings::backend)
        .def_readwrite("feas_tol", &conic::SolverSettings::feas_tol)
        .def_readwrite("gap_tol", &conic::SolverSettings::gap_tol)
        .def_readwrite("max_iterations", &conic::SolverSettings::max_iterations)
        .def_readwrite("verbose", &conic::SolverSettings::verbose);

    py::class_<sca::PlanningInputs>(m, "PlanningInputs")
        .def(py::init<>())
        .def_readwrite("geometry", &sca::PlanningInputs::geometry)
        .def_readwrite("radar", &sca::PlanningInputs::radar)
        .def_readwrite("comm", &sca::PlanningInputs::comm)
        .def_readwrite("platform", &sca::PlanningInputs::platform)
        .def_readwrite("atmosphere", &sca::PlanningInputs::atmosphere)
        .def_readwrite("n_cap", &sca::PlanningInputs::n_cap)
        .def_readwrite("xi1_tol", &sca::PlanningInputs::xi1_tol)
        .def_readwrite("xi2_tol", &sca::PlanningInputs::xi2_tol)
        .def_readwrite("max_iterations", &sca::PlanningInputs::max_iterations)
        .def_readwrite("energy_floor_fraction",
                       &sca::PlanningInputs::energy_floor_fraction)
        .def_readwrite("solver", &sca::PlanningInputs::solver)
        .def_readwrite("fixed_radar_power",
                       &sca::PlanningInputs::fixed_radar_power)
        .def_readwrite("fixed_comm_power",
                       &sca::PlanningInputs::fixed_comm_power)
        .def_readwrite("parallel_sweep_search",
                       &sca::PlanningInputs::parallel_sweep_search)
        .def_readwrite("seed", &sca::PlanningInputs::seed)
        .def("validate", &sca::PlanningInputs::validate);

    // ---- plan / schedule / reports -----------------------------------------
    py::class_<platform::SweepPlan>(m, "SweepPlan")
        .def(py::init<>())
        .def_readwrite("altitudes", &platform::SweepPlan::altitudes)
        .def_readwrite("start_radii", &platform::SweepPlan::start_radii)
        .def_readwrite("speeds", &platform::SweepPlan::speeds)
        .def_readwrite("geometry", &platform::SweepPlan::geometry);

    py::class_<sca::PowerSchedule>(m, "PowerSchedule")
        .def(py::init<>())
        .def_readwrite("p_rad", &sca::PowerSchedule::p_rad)
        .def_readwrite("p_com", &sca::PowerSchedule::p_com)
        .def_readwrite("p_mot", &sca::PowerSchedule::p_mot)
        .def_readwrite("p_har", &sca::PowerSchedule::p_har)
        .def_readwrite("energy", &sca::PowerSchedule::energy)
        .def_readwrite("efficiency", &sca::PowerSchedule::efficiency);

    py::class_<sca::TraceRow>(m, "TraceRow")
        .def_readonly("phase", &sca::TraceRow::phase)
        .def_readonly("n_slots", &sca::TraceRow::n_slots)
        .def_readonly("iteration", &sca::TraceRow::iteration)
        .def_readonly("objective", &sca::TraceRow::objective)
        .def_readonly("xi", &sca::TraceRow::xi)
        .def_readonly("solver_status", &sca::TraceRow::solver_status)
        .def_readonly("max_residual", &sca::TraceRow::max_residual);

    py::class_<sca::SkippedCandidate>(m, "SkippedCandidate")
        .def_readonly("n_slots", &sca::SkippedCandidate::n_slots)
        .def_readonly("reason", &sca::SkippedCandidate::reason);

    py::class_<sca::BoundResult>(m, "BoundResult")
        .def_readonly("t_tilde", &sca::BoundResult::t_tilde)
        .def_readonly("n_upper", &sca::BoundResult::n_upper)
        .def_readonly("trace", &sca::BoundResult::trace);

    py::class_<sca::OptimizeResult>(m, "OptimizeResult")
        .def_readonly("plan", &sca::OptimizeResult::plan)
        .def_readonly("schedule", &sca::OptimizeResult::schedule)
        .def_readonly("coverage", &sca::OptimizeResult::coverage)
        .def_readonly("n_star", &sca::OptimizeResult::n_star)
        .def_readonly("n_upper", &sca::OptimizeResult::n_upper)
        .def_readonly("t_tilde", &sca::OptimizeResult::t_tilde)
        .def_readonly("trace", &sca::OptimizeResult::trace)
        .def_readonly("skipped", &sca::OptimizeResult::skipped);

    py::class_<verify::CheckResult>(m, "CheckResult")
        .def_readonly("name", &verify::CheckResult::name)
        .def_readonly("pass_", &verify::CheckResult::pass)
        .def_readonly("worst_residual", &verify::CheckResult::worst_residual)
        .def_readonly("worst_index", &verify::CheckResult::worst_index)
        .def_readonly("detail", &verify::CheckResult::detail);

    py::class_<verify::Report>(m, "VerifyReport")
        .def_readonly("checks", &verify::Report::checks)
        .def("all_pass", &verify::Report::all_pass)
        .def("failures", &verify::Report::failures);

    py::enum_<scenario::Source>(m, "Source")
        .value("file", scenario::Source::file)
        .value("paper_default", scenario::Source::paper_default)
        .value("shipped_default", scenario::Source::shipped_default);

    py::class_<scenario::Scenario>(m, "Scenario")
        .def(py::init<>())
        .def_readwrite("name", &scenario::Scenario::name)
        .def_readwrite("inputs", &scenario::Scenario::inputs)
        .def_readonly("provenance", &scenario::Scenario::provenance)
        .def_readonly("config_hash", &scenario::Scenario::config_hash);

    py::class_<oracle::OracleResult>(m, "OracleResult")
        .def_readonly("plan", &oracle::OracleResult::plan)
        .def_readonly("schedule", &oracle::OracleResult::schedule)
        .def_readonly("coverage", &oracle::OracleResult::coverage)
        .def_readonly("n_star", &oracle::OracleResult::n_star)
        .def_readonly("evaluated", &oracle::OracleResult::evaluated)
        .def_readonly("feasible_count", &oracle::OracleResult::feasible_count);

    py::class_<run::RunReport>(m, "RunReport")
        .def_readonly("scenario", &run::RunReport::scenario)
        .def_readonly("result", &run::RunReport::result)
        .def_readonly("verification", &run::RunReport::verification)
        .def_readonly("version", &run::RunReport::version)
        .def_readonly("wall_time_s", &run::RunReport::wall_time_s)
        .def_readonly("error", &run::RunReport::error);

    py::class_<energy::EnergyLedger>(m, "EnergyLedger")
        .def_readonly("energy", &energy::EnergyLedger::energy)
        .def_readonly("net_power", &energy::EnergyLedger::net_power)
        .def_readonly("efficiency_used", &energy::EnergyLedger::efficiency_used);

    // ---- operations ---------------------------------------------------------
    m.def("load_scenario", &scenario::load_scenario, py::arg("path"),
          "Parse a YAML mission scenario (units converted to linear SI)");
    m.def("config_digest", &scenario::config_digest, py::arg("inputs"),
          "Reproducibility hash of a full planner configuration");
    m.def("optimize", &sca::optimize, py::arg("inputs"),
          py::call_guard<py::gil_scoped_release>(),
          "Run the full two-phase planner");
    m.def("bound_slot_count", &sca::bound_slot_count, py::arg("inputs"),
          py::call_guard<py::gil_scoped_release>(),
          "Phase 1 only: worst-case deficit and slot-count bound");
    m.def("minimal_power_schedule", &sca::minimal_power_schedule,
          py::arg("plan"), py::arg("inputs"),
          "Cheapest feasible powers for a fixed trajectory");
    m.def("check_mission", &verify::check_mission, py::arg("plan"),
          py::arg("schedule"), py::arg("inputs"),
          "Re-check a plan + schedule against the raw mission model");
    m.def("grid_search", &oracle::grid_search, py::arg("inputs"),
          py::arg("grid_points"), py::arg("max_combos") = 1000000,
          py::call_guard<py::gil_scoped_release>(),
          "Exhaustive gridded reference search");
    m.def("run_plan", &run::run_plan, py::arg("scenario"),
          py::call_guard<py::gil_scoped_release>(),
          "Optimize a scenario and verify the winner");
    m.def("export_report", &exporter::write_all, py::arg("report"),
          py::arg("directory"),
          "Write results/energy/convergence CSVs, summary.json, plot scripts");

    // ---- model evaluators ----------------------------------------------------
    m.def("build_sweep_plan", &platform::build_sweep_plan, py::arg("altitudes"),
          py::arg("geometry"), py::arg("z_min"), py::arg("z_max"),
          "Trajectory recursion: radii and banked-turn speeds from altitudes");
    m.def("total_coverage", &platform::total_coverage, py::arg("plan"),
          "Ground coverage of a sweep plan [m^2]");
    m.def("coverage_increment", &platform::coverage_increment, py::arg("slot"),
          py::arg("plan"), "Per-slot covered ground area [m^2]");
    m.def("position", &platform::position, py::arg("slot"), py::arg("plan"),
          "Platform position at a slot [m]");
    m.def(
        "pressure_at",
        [](double z, const atmosphere::Constants& c) {
            return atmosphere::pressure_at(z, c);
        },
        py::arg("z"), py::arg("constants") = atmosphere::Constants{},
        "Layer-model static pressure [Pa]");
    m.def(
        "temperature_at",
        [](double z, const atmosphere::Constants& c) {
            return atmosphere::temperature_at(z, c);
        },
        py::arg("z"), py::arg("constants") = atmosphere::Constants{},
        "Layer-model temperature [K]");
    m.def(
        "air_density_at",
        [](double z, const atmosphere::Constants& c) {
            return atmosphere::air_density_at(z, c);
        },
        py::arg("z"), py::arg("constants") = atmosphere::Constants{},
        "Air density [kg/m^3]");
    m.def(
        "solar_irradiance",
        [](double z, const atmosphere::Constants& c) {
            return atmosphere::solar_irradiance(z, c);
        },
        py::arg("z"), py::arg("constants") = atmosphere::Constants{},
        "Solar irradiance [W/m^2]");
    m.def(
        "propulsion_power",
        [](double z, double v, const PlatformSpec& plat,
           const atmosphere::Constants& c) {
            return energy::propulsion_power(z, v, plat, c);
        },
        py::arg("z"), py::arg("v"), py::arg("platform"),
        py::arg("constants") = atmosphere::Constants{},
        "Level banked-flight propulsion power [W]");
    m.def("run_ledger", &energy::run_ledger, py::arg("e_ini"), py::arg("p_har"),
          py::arg("p_mot"), py::arg("p_rad"), py::arg("p_com"),
          py::arg("delta_t"), py::arg("platform"),
          py::arg("discharge_divides") = false,
          "Battery ledger over a whole schedule");
    m.def("radar_snr", &sensing::radar_snr, py::arg("p_rad"), py::arg("z"),
          py::arg("v"), py::arg("radar"), py::arg("geometry"),
          "Imaging SNR of the boresight cell (linear)");
    m.def("sar_data_rate", &sensing::sar_data_rate, py::arg("z"),
          py::arg("radar"), py::arg("geometry"),
          "Sensing data acquisition rate [bit/s]");
    m.def("backhaul_rate", &sensing::backhaul_rate, py::arg("p_com"),
          py::arg("pos"), py::arg("comm"),
          "Downlink channel capacity [bit/s]");
    m.def("link_feasible", &sensing::link_feasible, py::arg("p_com"),
          py::arg("pos"), py::arg("z"), py::arg("radar"), py::arg("comm"),
          py::arg("geometry"),
          "(ok, slack) of backhaul rate vs sensing rate + margin");
}
