#include "stratosar/sca/optimize.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>
#include <utility>

#include "stratosar/conic/solve.hpp"
#include "stratosar/energy.hpp"
#include "stratosar/errors.hpp"
#include "stratosar/sca/dc.hpp"
#include "stratosar/sensing.hpp"

namespace stratosar::sca {

namespace {

struct Candidate {
    int n_slots = 0;
    bool feasible = false;
    std::string reason;
    platform::SweepPlan plan;
    PowerSchedule schedule;
    double coverage = 0.0;
    std::vector<TraceRow> trace;
};

std::vector<double> extract(const std::vector<conic::VarId>& ids,
                            const std::vector<double>& primal) {
    std::vector<double> out;
    out.reserve(ids.size());
    for (const auto id : ids)
        out.push_back(primal[static_cast<std::size_t>(id.index)]);
    return out;
}

double pin_value(const std::vector<double>& pin, int sweep) {
    return pin.size() == 1 ? pin[0] : pin[static_cast<std::size_t>(sweep - 1)];
}

/// One slot count: surrogate refinement to convergence, then power snap.
Candidate explore_slot_count(int n_slots, const PlanningInputs& inputs) {
    Candidate cand;
    cand.n_slots = n_slots;
    platform::MissionGeometry geo = inputs.geometry;
    geo.slots_per_sweep = n_slots;

    ScaIterate it = initial_iterate(n_slots, inputs);
    std::vector<double> frozen_eta;  // empty = discharge efficiency everywhere
    const ScalarFn harvest =
        make_harvest_power(inputs.platform, inputs.atmosphere);
    bool converged = false;

    for (int k = 1; k <= inputs.max_iterations; ++k) {
        const P5Problem p5 = build_p5(it, n_slots, inputs, frozen_eta);
        const conic::SolveResult res = conic::solve(p5.program, inputs.solver);
        TraceRow row;
        row.phase = 2;
        row.n_slots = n_slots;
        row.iteration = k;
        row.solver_status = conic::to_string(res.status);
        row.max_residual = res.max_residual;
        if (res.status != conic::SolveStatus::optimal) {
            row.objective = it.objective;
            row.xi = it.xi;
            cand.trace.push_back(row);
            std::ostringstream msg;
            msg << "surrogate solve ended with status '"
                << conic::to_string(res.status) << "' at iteration " << k;
            cand.reason = msg.str();
            return cand;
        }

        std::vector<double> z_new = extract(p5.handles.altitude, res.primal);
        for (double& z : z_new)
            z = std::clamp(z, inputs.platform.z_min, inputs.platform.z_max);
        const auto plan = platform::build_sweep_plan(
            z_new, geo, inputs.platform.z_min, inputs.platform.z_max);
        const double s_true = platform::total_coverage(plan);
        const double xi =
            std::abs(s_true - it.objective) / std::max(std::abs(s_true), 1e-12);
        row.objective = s_true;
        row.xi = xi;
        cand.trace.push_back(row);

        // Refreeze charge/discharge efficiencies from this solution's powers.
        const auto p_rad = extract(p5.handles.p_rad, res.primal);
        const auto p_com = extract(p5.handles.p_com, res.primal);
        const auto p_mot = extract(p5.handles.p_mot, res.primal);
        frozen_eta.assign(p_rad.size(), inputs.platform.eta_c);
        for (std::size_t i = 0; i < p_rad.size(); ++i) {
            const int m =
                platform::sweep_of_slot(static_cast<int>(i) + 1, n_slots);
            const double p_har =
                harvest.value(plan.altitudes[static_cast<std::size_t>(m - 1)]);
            const double net =
                energy::net_power(p_har, p_mot[i], p_rad[i], p_com[i]);
            frozen_eta[i] = energy::select_efficiency(net, inputs.platform);
        }

        it.altitudes = plan.altitudes;
        it.start_radii = plan.start_radii;
        it.speeds = plan.speeds;
        it.objective = s_true;
        it.xi = xi;
        if (xi <= inputs.xi2_tol) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        cand.reason = "surrogate loop did not converge within " +
                      std::to_string(inputs.max_iterations) + " iterations";
        return cand;
    }

    const auto plan = platform::build_sweep_plan(
        it.altitudes, geo, inputs.platform.z_min, inputs.platform.z_max);
    try {
        cand.schedule = minimal_power_schedule(plan, inputs);
    } catch (const ConstraintError& err) {
        // Covers battery depletion as well: the depletion error is a
        // constraint violation carrying the failing slot.
        cand.reason = err.what();
        return cand;
    }
    cand.plan = plan;
    cand.coverage = it.objective;
    cand.feasible = true;
    return cand;
}

}  // namespace

BoundResult bound_slot_count(const PlanningInputs& inputs) {
    inputs.validate();
    BoundResult out;
    ScaIterate it = initial_iterate(2, inputs);
    platform::MissionGeometry geo = inputs.geometry;
    geo.slots_per_sweep = 2;

    double t_tilde = 0.0;
    int n_up = inputs.n_cap;
    int prev_up = -1;
    bool have_bound = false;

    for (int k = 1; k <= inputs.max_iterations; ++k) {
        const P7Problem p7 = build_p7(it, inputs);
        const conic::SolveResult res = conic::solve(p7.program, inputs.solver);
        TraceRow row;
        row.phase = 1;
        row.iteration = k;
        row.solver_status = conic::to_string(res.status);
        row.max_residual = res.max_residual;
        if (res.status != conic::SolveStatus::optimal) {
            // Keep the last valid bound; with none, the cap is the honest
            // (loose) fallback since the bound only prunes the search.
            if (!have_bound) {
                t_tilde = 0.0;
                n_up = inputs.n_cap;
            }
            row.n_slots = n_up;
            row.objective = t_tilde;
            row.xi = it.xi;
            out.trace.push_back(row);
            break;
        }
        t_tilde = res.objective_value;

        const std::vector<double> z = extract(p7.handles.altitude, res.primal);
        const std::vector<double> nu = extract(p7.handles.speed_sq, res.primal);
        it.altitudes = z;
        for (double& zi : it.altitudes)
            zi = std::clamp(zi, inputs.platform.z_min, inputs.platform.z_max);
        it.speeds.resize(nu.size());
        for (std::size_t i = 0; i < nu.size(); ++i)
            it.speeds[i] = std::sqrt(std::max(nu[i], 1.0));
        it.start_radii =
            platform::build_sweep_plan(it.altitudes, geo, inputs.platform.z_min,
                                       inputs.platform.z_max)
                .start_radii;

        n_up = sweep_upper_bound(t_tilde, inputs);
        const double xi = prev_up < 0
                              ? 1.0
                              : std::abs(n_up - prev_up) /
                                    std::max(1.0, static_cast<double>(n_up));
        row.n_slots = n_up;
        row.objective = t_tilde;
        row.xi = xi;
        out.trace.push_back(row);
        it.objective = t_tilde;
        it.xi = xi;
        have_bound = true;
        if (prev_up >= 0 && xi < inputs.xi1_tol) break;
        prev_up = n_up;
    }
    out.t_tilde = t_tilde;
    out.n_upper = n_up;
    return out;
}

PowerSchedule minimal_power_schedule(const platform::SweepPlan& plan,
                                     const PlanningInputs& inputs) {
    const auto& geo = plan.geometry;
    const auto& plat = inputs.platform;
    const int n_slots = geo.slots_per_sweep;
    const int total = geo.total_slots();
    if (static_cast<int>(plan.altitudes.size()) != geo.sweep_count)
        throw ConfigError("plan altitudes do not match the sweep count");

    const double con = sensing::snr_constant(inputs.radar, geo);
    const ScalarFn req = make_link_snr_requirement(
        inputs.radar, inputs.comm, geo, inputs.comm.rate_margin);
    const ScalarFn harvest = make_harvest_power(plat, inputs.atmosphere);

    PowerSchedule s;
    s.p_rad.resize(static_cast<std::size_t>(total));
    s.p_com.resize(static_cast<std::size_t>(total));
    s.p_mot.resize(static_cast<std::size_t>(total));
    s.p_har.resize(static_cast<std::size_t>(total));

    for (int n = 1; n <= total; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        const int m = platform::sweep_of_slot(n, n_slots);
        const std::size_t im = static_cast<std::size_t>(m - 1);
        const double z = plan.altitudes[im];
        const double v = plan.speeds[im];

        // Imaging: smallest radar power meeting the margined SNR threshold.
        const double rad_req = (1.0 + inputs.radar.snr_margin) * z * z * z * v / con;
        double p_rad = rad_req;
        if (!inputs.fixed_radar_power.empty()) {
            p_rad = pin_value(inputs.fixed_radar_power, m);
            if (p_rad < rad_req * (1.0 - 1e-9)) {
                std::ostringstream msg;
                msg << "pinned radar power " << p_rad << " W at slot " << n
                    << " is below the imaging requirement " << rad_req << " W";
                throw ConstraintError(msg.str());
            }
        } else if (rad_req > inputs.radar.p_rad_max * (1.0 + 1e-12)) {
            std::ostringstream msg;
            msg << "imaging requirement " << rad_req
                << " W exceeds the radar power ceiling "
                << inputs.radar.p_rad_max << " W at slot " << n;
            throw ConstraintError(msg.str());
        }
        s.p_rad[i] = p_rad;

        // Downlink: smallest transmit power whose backhaul rate clears the
        // sensing data rate plus the configured margin.
        const auto pos = platform::position(n, plan);
        const double dx = pos[0] - inputs.comm.bs_position[0];
        const double dy = pos[1] - inputs.comm.bs_position[1];
        const double dz = pos[2] - inputs.comm.bs_position[2];
        const double d_sq = dx * dx + dy * dy + dz * dz;
        const double com_req =
            (inputs.comm.noise_power / inputs.comm.rho_0) * req.value(z) * d_sq;
        double p_com = com_req;
        if (!inputs.fixed_comm_power.empty()) {
            p_com = pin_value(inputs.fixed_comm_power, m);
            if (p_com < com_req * (1.0 - 1e-9)) {
                std::ostringstream msg;
                msg << "pinned comm power " << p_com << " W at slot " << n
                    << " is below the link requirement " << com_req << " W";
                throw ConstraintError(msg.str());
            }
        } else if (com_req > inputs.comm.p_com_max * (1.0 + 1e-12)) {
            std::ostringstream msg;
            msg << "link requirement " << com_req
                << " W exceeds the comm power ceiling " << inputs.comm.p_com_max
                << " W at slot " << n;
            throw ConstraintError(msg.str());
        }
        s.p_com[i] = p_com;

        s.p_mot[i] = energy::propulsion_power(z, v, plat, inputs.atmosphere);
        s.p_har[i] = harvest.value(z);
    }

    const energy::EnergyLedger ledger =
        energy::run_ledger(plat.e_ini, s.p_har, s.p_mot, s.p_rad, s.p_com,
                           geo.delta_t, plat);
    const double floor = inputs.energy_floor_fraction * plat.e_ini;
    for (int n = 2; n <= total; ++n) {
        const double e = ledger.energy[static_cast<std::size_t>(n - 1)];
        if (e < floor - 1e-9 * std::max(1.0, floor)) {
            std::ostringstream msg;
            msg << "battery falls to " << e << " J at slot " << n
                << ", below the floor " << floor << " J";
            throw ConstraintError(msg.str());
        }
    }
    s.energy = ledger.energy;
    s.efficiency = ledger.efficiency_used;
    return s;
}

OptimizeResult optimize(const PlanningInputs& inputs) {
    inputs.validate();
    OptimizeResult out;

    BoundResult bound = bound_slot_count(inputs);
    out.t_tilde = bound.t_tilde;
    out.n_upper = bound.n_upper;
    out.trace = std::move(bound.trace);
    if (bound.n_upper < 2) {
        std::ostringstream msg;
        msg << "energy bound admits no slot count: the worst-case per-slot "
               "deficit "
            << bound.t_tilde << " W drains the battery within "
            << bound.n_upper << " slot(s)";
        throw ConstraintError(msg.str());
    }

    const int count = bound.n_upper - 1;  // slot counts 2..n_upper
    std::vector<Candidate> cands(static_cast<std::size_t>(count));
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = inputs.parallel_sweep_search
                                 ? std::min<unsigned>(hw, static_cast<unsigned>(count))
                                 : 1u;
    if (workers > 1) {
        std::atomic<int> next{2};
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    while (true) {
                        const int n = next.fetch_add(1);
                        if (n > bound.n_upper) break;
                        cands[static_cast<std::size_t>(n - 2)] =
                            explore_slot_count(n, inputs);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& err : errors)
            if (err) std::rethrow_exception(err);
    } else {
        for (int n = 2; n <= bound.n_upper; ++n)
            cands[static_cast<std::size_t>(n - 2)] = explore_slot_count(n, inputs);
    }

    const Candidate* best = nullptr;
    for (const auto& c : cands) {
        out.trace.insert(out.trace.end(), c.trace.begin(), c.trace.end());
        if (!c.feasible) {
            out.skipped.push_back({c.n_slots, c.reason});
            continue;
        }
        // Strict improvement keeps the smaller slot count on exact ties.
        if (best == nullptr || c.coverage > best->coverage) best = &c;
    }
    if (best == nullptr) {
        std::ostringstream msg;
        msg << "no slot count in [2, " << bound.n_upper
            << "] admits a feasible mission plan";
        if (!out.skipped.empty())
            msg << " (N=" << out.skipped.front().n_slots << ": "
                << out.skipped.front().reason << ")";
        throw ConstraintError(msg.str());
    }
    out.plan = best->plan;
    out.schedule = best->schedule;
    out.coverage = best->coverage;
    out.n_star = best->n_slots;
    return out;
}

}  // namespace stratosar::sca
