#include "stratosar/sca/builders.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "stratosar/energy.hpp"
#include "stratosar/errors.hpp"
#include "stratosar/sca/lowering.hpp"
#include "stratosar/sensing.hpp"

namespace stratosar::sca {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.141592653589793238462643383279502884;

// Link rows carry squared coordinate offsets; in meters those squares reach
// 1e9-1e10 and wipe out the O(1) required-SNR factor in double arithmetic,
// so the rows work in kilometers.
constexpr double kKmPerM = 1e-3;

// The coverage variable is kept in km^2 so its magnitude stays comparable
// with the other problem quantities.
constexpr double kCoverageUnit = 1e-6;

std::string slot_tag(const char* family, int n) {
    return std::string(family) + "/n" + std::to_string(n);
}

std::string sweep_tag(const char* family, int m) {
    return std::string(family) + "/m" + std::to_string(m);
}

/// Tangent of g^2 at x0 as an affine expression in x.
conic::LinExpr linearized_square_expr(const ScalarFn& g, double x0,
                                      const conic::LinExpr& x) {
    const double g0 = g.value(x0);
    const double slope = 2.0 * g0 * g.derivative(x0);
    return conic::LinExpr(g0 * g0 - slope * x0) + slope * x;
}

/// Tangent of scale*u^4 at u_ref (u affine): scale*(4 u_ref^3 u - 3 u_ref^4).
conic::LinExpr linearized_fourth_power(const conic::LinExpr& u, double u_ref,
                                       double scale) {
    const double u3 = u_ref * u_ref * u_ref;
    return conic::LinExpr(-3.0 * scale * u3 * u_ref) + (4.0 * scale * u3) * u;
}

/// Affine flight radii x_m in the altitude variables (same recursion as the
/// trajectory module: x_1 = z_1 tan(beta), x_m = x_{m-1} + 2*K*z_m +
/// (z_m - z_{m-1}) tan(alpha2)).
std::vector<conic::LinExpr> radius_expressions(
    const std::vector<conic::VarId>& z, const platform::MissionGeometry& geo) {
    const double swath2 = 2.0 * geo.swath_factor();
    const double tan_a2 = std::tan(geo.alpha2());
    std::vector<conic::LinExpr> out;
    out.reserve(z.size());
    for (std::size_t m = 0; m < z.size(); ++m) {
        if (m == 0) {
            out.push_back(std::tan(geo.beta) * conic::LinExpr(z[0]));
        } else {
            conic::LinExpr e = out[m - 1];
            e += (swath2 + tan_a2) * conic::LinExpr(z[m]);
            e -= tan_a2 * conic::LinExpr(z[m - 1]);
            out.push_back(std::move(e));
        }
    }
    return out;
}

/// Expands a benchmark pin vector (empty, one global value, or one value per
/// sweep) to a per-slot schedule.
std::vector<double> broadcast_pin(const std::vector<double>& pin, int sweeps,
                                  int n_slots, const char* what) {
    if (pin.empty()) return {};
    std::vector<double> out(static_cast<std::size_t>(sweeps) * n_slots);
    if (pin.size() == 1) {
        std::fill(out.begin(), out.end(), pin[0]);
    } else if (static_cast<int>(pin.size()) == sweeps) {
        for (int m = 0; m < sweeps; ++m)
            for (int j = 0; j < n_slots; ++j)
                out[static_cast<std::size_t>(m) * n_slots + j] = pin[static_cast<std::size_t>(m)];
    } else {
        std::ostringstream msg;
        msg << what << " power pin must hold 1 or " << sweeps
            << " (per-sweep) values, got " << pin.size();
        throw ConfigError(msg.str());
    }
    return out;
}

conic::LinExpr harvest_tangent(const ScalarFn& harvest, double z_ref,
                               const conic::LinExpr& z) {
    const double value = harvest.value(z_ref);
    const double slope = harvest.derivative(z_ref);
    return conic::LinExpr(value - slope * z_ref) + slope * z;
}

void check_pin_values(const std::vector<double>& pin, double hi,
                      const char* what) {
    for (double v : pin) {
        if (!(v >= 0.0 && v <= hi)) {
            std::ostringstream msg;
            msg << what << " power pin value " << v
                << " W outside the allowed range [0, " << hi << "] W";
            throw ConfigError(msg.str());
        }
    }
}

}  // namespace

void PlanningInputs::validate() const {
    geometry.validate();
    radar.validate();
    comm.validate();
    platform.validate();
    atmosphere.validate();
    if (n_cap < 2) throw ConfigError("slot-count cap must be at least 2");
    if (!(xi1_tol > 0.0) || !(xi2_tol > 0.0))
        throw ConfigError("convergence tolerances must be positive");
    if (max_iterations < 1)
        throw ConfigError("iteration cap must be at least 1");
    if (!(energy_floor_fraction > 0.0 && energy_floor_fraction < 1.0))
        throw ConfigError("battery floor fraction must lie in (0, 1)");
    if (!(platform.z_min >= atmosphere.H1 && platform.z_max <= atmosphere.H2))
        throw ConfigError("operating band must lie inside the atmosphere "
                          "model's validity layer");
    if (!(fixed_radar_power.empty() || fixed_radar_power.size() == 1 ||
          static_cast<int>(fixed_radar_power.size()) == geometry.sweep_count))
        throw ConfigError("radar power pin must hold 1 or per-sweep values");
    if (!(fixed_comm_power.empty() || fixed_comm_power.size() == 1 ||
          static_cast<int>(fixed_comm_power.size()) == geometry.sweep_count))
        throw ConfigError("comm power pin must hold 1 or per-sweep values");
    check_pin_values(fixed_radar_power, radar.p_rad_max, "radar");
    check_pin_values(fixed_comm_power, comm.p_com_max, "comm");
}

ScaIterate initial_iterate(int n_slots, const PlanningInputs& inputs) {
    platform::MissionGeometry geo = inputs.geometry;
    geo.slots_per_sweep = n_slots;
    geo.validate();
    // Start every sweep at the ceiling: exponential density decay makes the
    // highest band both the coverage-greedy and the propulsion-cheapest
    // trajectory, so it is where feasibility is decided. Expanding there
    // keeps the surrogate second-order accurate around the likely optimum
    // (the linearized minorants degrade quadratically away from the
    // reference, and a mid-band start can misprice the ceiling enough to
    // strangle slot counts that are actually feasible).
    ScaIterate it;
    it.altitudes.assign(static_cast<std::size_t>(geo.sweep_count),
                        inputs.platform.z_max);
    const auto plan = platform::build_sweep_plan(it.altitudes, geo,
                                                 inputs.platform.z_min,
                                                 inputs.platform.z_max);
    it.start_radii = plan.start_radii;
    it.speeds = plan.speeds;
    it.objective = platform::total_coverage(plan);
    it.xi = 1.0;
    return it;
}

std::pair<std::vector<double>, double> coverage_quadratic(
    int sweep_count, int n_slots, const platform::MissionGeometry& geo) {
    if (sweep_count < 1) throw ConfigError("sweep count must be >= 1");
    if (n_slots < 2) throw ConfigError("slots per sweep must be >= 2");
    const double k = geo.swath_factor();
    const double scale = (2.0 * kPi / n_slots) * (n_slots - 1) * k * k;
    const std::size_t mm = static_cast<std::size_t>(sweep_count);
    std::vector<double> q(mm * mm, 0.0);
    auto at = [&](std::size_t r, std::size_t c) -> double& { return q[r * mm + c]; };
    at(0, 0) = 1.0;
    for (std::size_t m = 1; m < mm; ++m) {
        at(m, m) = 2.0;
        at(m, m - 1) = 1.0;
        at(m - 1, m) = 1.0;
        for (std::size_t j = 0; j + 1 < m; ++j) {
            at(m, j) = 2.0;
            at(j, m) = 2.0;
        }
    }
    return {std::move(q), scale};
}

PropulsionEpigraph build_propulsion_epigraph(conic::ConvexProgram& program,
                                             const conic::LinExpr& z,
                                             const conic::LinExpr& speed_sq,
                                             double z_ref, double speed_ref,
                                             const PlanningInputs& inputs,
                                             const std::string& tag) {
    const auto& atm = inputs.atmosphere;
    const auto& plat = inputs.platform;
    if (!(speed_ref > 0.0))
        throw LogicError("propulsion expansion needs a positive speed");
    const double nu_ref = speed_ref * speed_ref;

    const ScalarFn density = make_air_density(atm);
    const ScalarFn inv_density = make_inverse_density(atm);
    // The speed factors are c*V^3 and c/V; evaluating at V = 1 recovers the
    // coefficients.
    const double c_par = make_parasitic_speed(plat).value(1.0);
    const double c_ind = make_induced_speed(plat).value(1.0);

    // Balance each product's two factors to comparable magnitude at the
    // expansion point; the split h = f*g = (b f)(g/b) stays exact and keeps
    // the convex-part cross term from drowning in the squares.
    const double rho_ref = density.value(z_ref);
    const double par_ref = c_par * std::pow(nu_ref, 1.5);
    const double inv_ref = inv_density.value(z_ref);
    const double ind_ref = c_ind / std::sqrt(nu_ref);
    const double bal_a = std::sqrt(par_ref / rho_ref);
    const double bal_b = std::sqrt(ind_ref / inv_ref);

    // Everything below is divided by the propulsion power at the expansion
    // point so each cone mixes only O(1) entries. A raw-watt cone would pair
    // ~1e5 linearization constants with ~5e2 factor slacks, and interior-point
    // residuals measured on such a row can hide watt-scale violations.
    const double p_scale = rho_ref * par_ref + inv_ref * ind_ref;
    if (!(p_scale > 0.0))
        throw LogicError("propulsion power at the expansion point must be "
                         "positive");
    const double root_p = std::sqrt(p_scale);

    const double lapse = atm.L_b / atm.T_b;
    const conic::LinExpr tau = conic::LinExpr(1.0 - lapse * atm.H1) + lapse * z;
    const double p_exp = atm.pressure_exponent() + 1.0;
    const double rho_b = atm.p_b1 / (atm.R_spec * atm.T_b);
    const double v_max_sq = plat.v_max * plat.v_max;
    const conic::LinExpr nu_hat = (1.0 / v_max_sq) * speed_sq;

    const conic::VarId e_rho =
        program.add_variable(tag + ".rho", 0.0, kInf, conic::VarRole::aux);
    add_negative_power_epigraph(program, conic::LinExpr(e_rho), tau,
                                bal_a * rho_b / root_p, p_exp, tag + "/rho");

    const conic::VarId e_par =
        program.add_variable(tag + ".par", 0.0, kInf, conic::VarRole::aux);
    add_pow32_epigraph(program, conic::LinExpr(e_par), nu_hat,
                       c_par * std::pow(v_max_sq, 1.5) / (bal_a * root_p),
                       tag + "/par");

    const conic::VarId e_inv =
        program.add_variable(tag + ".inv", 0.0, kInf, conic::VarRole::aux);
    add_positive_power_epigraph(program, conic::LinExpr(e_inv), tau,
                                bal_b / (rho_b * root_p), p_exp, tag + "/inv");

    const conic::VarId e_ind =
        program.add_variable(tag + ".ind", 0.0, kInf, conic::VarRole::aux);
    add_invsqrt_epigraph(program, conic::LinExpr(e_ind), nu_hat,
                         c_ind / (bal_b * plat.v_max * root_p), tag + "/ind");

    PropulsionEpigraph out;
    out.density = conic::LinExpr(e_rho);
    out.parasitic = conic::LinExpr(e_par);
    out.inv_density = conic::LinExpr(e_inv);
    out.induced = conic::LinExpr(e_ind);

    conic::LinExpr lin = (bal_a * bal_a) * linearized_square_expr(density, z_ref, z);
    // (c_par*nu^{3/2}/bal)^2 = (c_par^2/bal^2)*nu^3, tangent at nu_ref.
    const double par_sq = c_par * c_par / (bal_a * bal_a);
    lin += (3.0 * par_sq * nu_ref * nu_ref) * speed_sq;
    lin += conic::LinExpr(-2.0 * par_sq * nu_ref * nu_ref * nu_ref);
    lin += (bal_b * bal_b) * linearized_square_expr(inv_density, z_ref, z);
    // (c_ind/(bal*V))^2 = (c_ind^2/bal^2)/nu, tangent at nu_ref.
    const double ind_sq = c_ind * c_ind / (bal_b * bal_b);
    lin += conic::LinExpr(2.0 * ind_sq / nu_ref);
    lin -= (ind_sq / (nu_ref * nu_ref)) * speed_sq;
    out.linearized_sq = (1.0 / p_scale) * std::move(lin);
    out.power_scale = p_scale;
    return out;
}

void build_comm_constraints(conic::ConvexProgram& program,
                            const SlotContext& ctx, const SlotVars& vars,
                            const PlanningInputs& inputs) {
    const auto& comm = inputs.comm;
    const auto& plat = inputs.platform;
    if (!(ctx.z_ref >= plat.z_min && ctx.z_ref <= plat.z_max))
        throw ConstraintError("link-row expansion altitude outside the "
                              "operating band");

    const ScalarFn req =
        make_link_snr_requirement(inputs.radar, comm, inputs.geometry,
                                  comm.rate_margin);
    const ScalarFn chord = make_chord(req, plat.z_min, plat.z_max);
    const double req_ref = req.value(ctx.z_ref);

    const double off_x = ctx.x_ref - comm.bs_position[0];
    const double off_y = ctx.y_ref - comm.bs_position[1];
    const double off_z = ctx.z_ref - comm.bs_position[2];
    const double d_sq_km = kKmPerM * kKmPerM *
                           (off_x * off_x + off_y * off_y + off_z * off_z);
    // Factor balance: pair (bal*g1) with (offset^2/bal) so both sit near
    // sqrt(g1*offset^2) at the expansion point.
    const double bal =
        std::sqrt(std::max(d_sq_km, 1e-2) / std::max(req_ref, 1e-12));
    const double root_bal = std::sqrt(bal);

    const double chord_slope = chord.derivative(0.0);
    const conic::LinExpr chord_expr =
        conic::LinExpr(chord.value(0.0)) + chord_slope * ctx.z;

    const int n = ctx.slot;
    const conic::LinExpr base = bal * chord_expr;
    lower_psd2(program, conic::LinExpr(vars.slacks.p) - base,
               (kKmPerM / root_bal) * (ctx.x - comm.bs_position[0]), 1.0,
               slot_tag("c8a", n));
    lower_psd2(program, conic::LinExpr(vars.slacks.q) - base,
               (kKmPerM / root_bal) * (ctx.y - comm.bs_position[1]), 1.0,
               slot_tag("c8b", n));
    lower_psd2(program, conic::LinExpr(vars.slacks.r) - base,
               (kKmPerM / root_bal) * (ctx.z - comm.bs_position[2]), 1.0,
               slot_tag("c8c", n));

    conic::LinExpr rhs = (2.0 * kKmPerM * kKmPerM * comm.rho_0 /
                          comm.noise_power) * conic::LinExpr(vars.p_com);
    rhs += (3.0 * bal * bal) * linearized_square_expr(req, ctx.z_ref, ctx.z);
    const double quartic_scale = 1.0 / (bal * bal);
    rhs += linearized_fourth_power(
        kKmPerM * (ctx.x - comm.bs_position[0]), kKmPerM * off_x, quartic_scale);
    rhs += linearized_fourth_power(
        kKmPerM * (ctx.y - comm.bs_position[1]), kKmPerM * off_y, quartic_scale);
    rhs += linearized_fourth_power(
        kKmPerM * (ctx.z - comm.bs_position[2]), kKmPerM * off_z, quartic_scale);
    conic::add_rotated_cone(program, std::move(rhs), 0.5,
                            {conic::LinExpr(vars.slacks.p),
                             conic::LinExpr(vars.slacks.q),
                             conic::LinExpr(vars.slacks.r)},
                            slot_tag("c8", n));
}

void build_snr_constraints(conic::ConvexProgram& program, const SlotContext& ctx,
                           const SlotVars& vars, const PlanningInputs& inputs) {
    const double z_scale = inputs.platform.z_max;
    const conic::LinExpr z_hat = (1.0 / z_scale) * ctx.z;
    const int n = ctx.slot;
    lower_psd2(program, conic::LinExpr(vars.slacks.phi_snr), z_hat, 1.0,
               slot_tag("c12a", n));
    lower_psd2(program, conic::LinExpr(vars.slacks.psi_snr),
               conic::LinExpr(vars.slacks.phi_snr), z_hat, slot_tag("c12b", n));
    const double con = sensing::snr_constant(inputs.radar, inputs.geometry);
    // Row scaled by 1/con so the radar-power coefficient is exactly one;
    // the raw coefficients are ~1e15 and would wreck the solver scaling.
    const double lhs_scale = (1.0 + inputs.radar.snr_margin) * ctx.speed_ref *
                             z_scale * z_scale * z_scale / con;
    program.add_inequality(
        lhs_scale * conic::LinExpr(vars.slacks.psi_snr) -
            conic::LinExpr(vars.p_rad),
        slot_tag("c12c", n));
}

void build_energy_constraints(conic::ConvexProgram& program,
                              const SlotContext& ctx, const SlotVars& vars,
                              const PropulsionEpigraph& propulsion,
                              const PlanningInputs& inputs) {
    if (ctx.slot < 2)
        throw LogicError("battery rows start at the second slot");
    const int n = ctx.slot;
    program.add_inequality(propulsion.density + propulsion.parasitic -
                               conic::LinExpr(vars.slacks.t),
                           slot_tag("c9a", n));
    program.add_inequality(propulsion.inv_density + propulsion.induced -
                               conic::LinExpr(vars.slacks.u),
                           slot_tag("c9b", n));
    // Power-normalized units: the epigraph block divides its factor slacks by
    // sqrt(power_scale), so the motor variable joins the cone as
    // P_mot / power_scale and the whole row is O(1).
    conic::add_rotated_cone(
        program,
        (1.0 / propulsion.power_scale) * conic::LinExpr(vars.p_mot) +
            0.5 * propulsion.linearized_sq,
        1.0,
        {conic::LinExpr(vars.slacks.t), conic::LinExpr(vars.slacks.u)},
        slot_tag("c9m", n));

    const ScalarFn harvest =
        make_harvest_power(inputs.platform, inputs.atmosphere);
    const conic::LinExpr p_har = harvest_tangent(harvest, ctx.z_ref, ctx.z);
    conic::LinExpr ledger =
        conic::LinExpr(vars.energy) - conic::LinExpr(vars.energy_prev);
    conic::LinExpr net = p_har;
    net -= conic::LinExpr(vars.p_mot);
    net -= conic::LinExpr(vars.p_rad);
    net -= conic::LinExpr(vars.p_com);
    ledger -= (inputs.geometry.delta_t * vars.eta) * net;
    program.add_inequality(std::move(ledger), slot_tag("c9", n));
}

P5Problem build_p5(const ScaIterate& iterate, int n_slots,
                   const PlanningInputs& inputs,
                   const std::vector<double>& frozen_eta) {
    inputs.validate();
    platform::MissionGeometry geo = inputs.geometry;
    geo.slots_per_sweep = n_slots;
    geo.validate();
    const auto& plat = inputs.platform;
    const int sweeps = geo.sweep_count;
    const int total = sweeps * n_slots;
    if (static_cast<int>(iterate.altitudes.size()) != sweeps) {
        std::ostringstream msg;
        msg << "iterate has " << iterate.altitudes.size()
            << " altitudes but the mission flies " << sweeps << " sweeps";
        throw ConfigError(msg.str());
    }
    if (!frozen_eta.empty() && static_cast<int>(frozen_eta.size()) != total)
        throw LogicError("frozen efficiency vector must have one entry per slot");

    // Expansion point re-derived from the altitudes so radii/speeds always
    // satisfy the banked-turn relation regardless of caller bookkeeping.
    const auto ref_plan = platform::build_sweep_plan(
        iterate.altitudes, geo, plat.z_min, plat.z_max);

    const auto pins_rad =
        broadcast_pin(inputs.fixed_radar_power, sweeps, n_slots, "radar");
    const auto pins_com =
        broadcast_pin(inputs.fixed_comm_power, sweeps, n_slots, "comm");

    P5Problem out;
    conic::ConvexProgram& prog = out.program;
    P5Handles& h = out.handles;

    for (int m = 0; m < sweeps; ++m) {
        h.altitude.push_back(prog.add_variable("z" + std::to_string(m + 1),
                                               plat.z_min, plat.z_max,
                                               conic::VarRole::altitude));
    }
    h.coverage = prog.add_variable("coverage", 0.0, kInf, conic::VarRole::aux);
    h.coverage_scale = 1.0 / kCoverageUnit;

    const double e_floor = inputs.energy_floor_fraction * plat.e_ini;
    for (int n = 1; n <= total; ++n) {
        const std::string s = std::to_string(n);
        const std::size_t i = static_cast<std::size_t>(n - 1);
        double rad_lo = 0.0, rad_hi = inputs.radar.p_rad_max;
        if (!pins_rad.empty()) rad_lo = rad_hi = pins_rad[i];
        double com_lo = 0.0, com_hi = inputs.comm.p_com_max;
        if (!pins_com.empty()) com_lo = com_hi = pins_com[i];
        h.p_rad.push_back(prog.add_variable("Prad" + s, rad_lo, rad_hi,
                                            conic::VarRole::power));
        h.p_com.push_back(prog.add_variable("Pcom" + s, com_lo, com_hi,
                                            conic::VarRole::power));
        h.p_mot.push_back(prog.add_variable("Pmot" + s, 0.0, kInf,
                                            conic::VarRole::power));
        h.energy.push_back(
            n == 1 ? prog.add_variable("E1", plat.e_ini, plat.e_ini,
                                       conic::VarRole::energy)
                   : prog.add_variable("E" + s, e_floor, kInf,
                                       conic::VarRole::energy));
        SlackSet sl;
        sl.p = prog.add_variable("p" + s, 0.0, kInf, conic::VarRole::slack);
        sl.q = prog.add_variable("q" + s, 0.0, kInf, conic::VarRole::slack);
        sl.r = prog.add_variable("r" + s, 0.0, kInf, conic::VarRole::slack);
        sl.t = prog.add_variable("t" + s, 0.0, kInf, conic::VarRole::slack);
        sl.u = prog.add_variable("u" + s, 0.0, kInf, conic::VarRole::slack);
        sl.phi_snr =
            prog.add_variable("phi" + s, 0.0, kInf, conic::VarRole::slack);
        sl.psi_snr =
            prog.add_variable("psi" + s, 0.0, kInf, conic::VarRole::slack);
        h.slacks.push_back(sl);
    }

    h.radius = radius_expressions(h.altitude, geo);
    const double turn_gain = geo.g * std::tan(geo.zeta);
    for (int m = 0; m < sweeps; ++m)
        h.speed_sq.push_back(turn_gain * h.radius[static_cast<std::size_t>(m)]);

    // ---- objective: hypograph of the eigensign-split coverage surrogate.
    {
        const auto [q_flat, scale] = coverage_quadratic(sweeps, n_slots, geo);
        const double row_scale = scale * kCoverageUnit;
        Eigen::MatrixXd q_mat(sweeps, sweeps);
        for (int r = 0; r < sweeps; ++r)
            for (int c = 0; c < sweeps; ++c)
                q_mat(r, c) = q_flat[static_cast<std::size_t>(r) * sweeps + c];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(q_mat);
        const Eigen::VectorXd lam = eig.eigenvalues();
        const Eigen::MatrixXd vec = eig.eigenvectors();
        const double lam_tol = 1e-12 * std::max(1.0, lam.cwiseAbs().maxCoeff());

        Eigen::VectorXd z_ref(sweeps);
        for (int m = 0; m < sweeps; ++m) z_ref[m] = iterate.altitudes[static_cast<std::size_t>(m)];
        const Eigen::MatrixXd q_pos =
            vec * lam.cwiseMax(0.0).asDiagonal() * vec.transpose();
        const Eigen::VectorXd grad = q_pos * z_ref;

        // Tangent of the convex part: 2*(Q+ z^k)'z - z^k'Q+ z^k.
        conic::LinExpr lin_plus(-z_ref.dot(grad));
        for (int m = 0; m < sweeps; ++m)
            lin_plus += (2.0 * grad[m]) * conic::LinExpr(h.altitude[static_cast<std::size_t>(m)]);

        std::vector<conic::LinExpr> neg_axes;
        for (int i = 0; i < sweeps; ++i) {
            if (lam[i] < -lam_tol) {
                conic::LinExpr axis(0.0);
                for (int m = 0; m < sweeps; ++m)
                    axis += vec(m, i) * conic::LinExpr(h.altitude[static_cast<std::size_t>(m)]);
                neg_axes.push_back(std::sqrt(row_scale * (-lam[i])) * axis);
            }
        }
        conic::LinExpr bound = row_scale * lin_plus;
        bound -= conic::LinExpr(h.coverage);
        if (neg_axes.empty()) {
            // Q is positive semidefinite: the plain tangent is the surrogate.
            prog.add_inequality(-bound, "coverage");
        } else {
            conic::add_rotated_cone(prog, std::move(bound), 0.5,
                                    std::move(neg_axes), "coverage");
        }
        prog.set_objective(conic::LinExpr(h.coverage), true);
    }

    // ---- per-sweep rows: speed band and propulsion epigraphs.
    std::vector<PropulsionEpigraph> propulsion;
    propulsion.reserve(static_cast<std::size_t>(sweeps));
    for (int m = 0; m < sweeps; ++m) {
        const std::size_t im = static_cast<std::size_t>(m);
        const double v_min =
            platform::stall_speed(ref_plan.altitudes[im], plat, inputs.atmosphere);
        prog.add_inequality(conic::LinExpr(v_min * v_min) - h.speed_sq[im],
                            sweep_tag("c16lo", m + 1));
        prog.add_inequality(h.speed_sq[im] -
                                conic::LinExpr(plat.v_max * plat.v_max),
                            sweep_tag("c16hi", m + 1));
        propulsion.push_back(build_propulsion_epigraph(
            prog, conic::LinExpr(h.altitude[im]), h.speed_sq[im],
            ref_plan.altitudes[im], ref_plan.speeds[im], inputs,
            sweep_tag("prop", m + 1)));
    }

    // ---- per-slot rows.
    for (int n = 1; n <= total; ++n) {
        const std::size_t i = static_cast<std::size_t>(n - 1);
        const int m = platform::sweep_of_slot(n, n_slots);
        const std::size_t im = static_cast<std::size_t>(m - 1);
        const double phi = platform::azimuth(n, n_slots);
        SlotContext ctx;
        ctx.slot = n;
        ctx.n_slots = n_slots;
        ctx.x = std::cos(phi) * h.radius[im];
        ctx.y = std::sin(phi) * h.radius[im];
        ctx.z = conic::LinExpr(h.altitude[im]);
        ctx.speed_sq = h.speed_sq[im];
        ctx.x_ref = std::cos(phi) * ref_plan.start_radii[im];
        ctx.y_ref = std::sin(phi) * ref_plan.start_radii[im];
        ctx.z_ref = ref_plan.altitudes[im];
        ctx.speed_ref = ref_plan.speeds[im];

        SlotVars sv;
        sv.p_rad = h.p_rad[i];
        sv.p_com = h.p_com[i];
        sv.p_mot = h.p_mot[i];
        sv.energy = h.energy[i];
        sv.energy_prev = n >= 2 ? h.energy[i - 1] : h.energy[i];
        sv.slacks = h.slacks[i];
        sv.eta = frozen_eta.empty() ? plat.eta_c : frozen_eta[i];

        build_comm_constraints(prog, ctx, sv, inputs);
        build_snr_constraints(prog, ctx, sv, inputs);
        const int sweep_first = (m - 1) * n_slots + 1;
        if (n != sweep_first) {
            prog.add_equality(
                conic::LinExpr(h.p_rad[i]) -
                    conic::LinExpr(h.p_rad[static_cast<std::size_t>(sweep_first - 1)]),
                slot_tag("c10", n));
        }
        if (n >= 2) build_energy_constraints(prog, ctx, sv, propulsion[im], inputs);
    }

    return out;
}

P7Problem build_p7(const ScaIterate& iterate, const PlanningInputs& inputs) {
    inputs.validate();
    const auto& plat = inputs.platform;
    const int sweeps = inputs.geometry.sweep_count;
    if (static_cast<int>(iterate.altitudes.size()) != sweeps ||
        static_cast<int>(iterate.speeds.size()) != sweeps)
        throw ConfigError("iterate dimensions do not match the sweep count");

    P7Problem out;
    conic::ConvexProgram& prog = out.program;
    P7Handles& h = out.handles;

    for (int m = 0; m < sweeps; ++m) {
        const std::string s = std::to_string(m + 1);
        const std::size_t im = static_cast<std::size_t>(m);
        h.altitude.push_back(prog.add_variable("z" + s, plat.z_min, plat.z_max,
                                               conic::VarRole::altitude));
        const double v_min =
            platform::stall_speed(iterate.altitudes[im], plat, inputs.atmosphere);
        h.speed_sq.push_back(prog.add_variable("nu" + s, v_min * v_min,
                                               plat.v_max * plat.v_max,
                                               conic::VarRole::aux));
        h.t.push_back(
            prog.add_variable("t" + s, 0.0, kInf, conic::VarRole::slack));
        h.u.push_back(
            prog.add_variable("u" + s, 0.0, kInf, conic::VarRole::slack));
    }
    h.deficit = prog.add_variable("deficit", -kInf, kInf, conic::VarRole::aux);

    const ScalarFn harvest = make_harvest_power(plat, inputs.atmosphere);
    std::vector<PropulsionEpigraph> props;
    props.reserve(static_cast<std::size_t>(sweeps));
    double mission_scale = 0.0;
    for (int m = 0; m < sweeps; ++m) {
        const std::size_t im = static_cast<std::size_t>(m);
        props.push_back(build_propulsion_epigraph(
            prog, conic::LinExpr(h.altitude[im]), conic::LinExpr(h.speed_sq[im]),
            iterate.altitudes[im], iterate.speeds[im], inputs,
            sweep_tag("prop", m + 1)));
        const PropulsionEpigraph& prop = props.back();
        prog.add_inequality(prop.density + prop.parasitic -
                                conic::LinExpr(h.t[im]),
                            sweep_tag("c9a", m + 1));
        prog.add_inequality(prop.inv_density + prop.induced -
                                conic::LinExpr(h.u[im]),
                            sweep_tag("c9b", m + 1));
        mission_scale += prop.power_scale;
    }
    // Aggregate budget, normalized by the mission-total reference power so
    // the cone entries stay O(1): the per-sweep slacks are already divided by
    // sqrt(power_scale_m), so they re-enter with weight
    // sqrt(power_scale_m / mission_scale).
    conic::LinExpr budget = (1.0 / mission_scale) * conic::LinExpr(h.deficit);
    std::vector<conic::LinExpr> norms;
    norms.reserve(2 * static_cast<std::size_t>(sweeps));
    for (int m = 0; m < sweeps; ++m) {
        const std::size_t im = static_cast<std::size_t>(m);
        const PropulsionEpigraph& prop = props[im];
        budget += (1.0 / mission_scale) *
                  harvest_tangent(harvest, iterate.altitudes[im],
                                  conic::LinExpr(h.altitude[im]));
        budget += (0.5 * prop.power_scale / mission_scale) * prop.linearized_sq;
        const double weight = std::sqrt(prop.power_scale / mission_scale);
        norms.push_back(weight * conic::LinExpr(h.t[im]));
        norms.push_back(weight * conic::LinExpr(h.u[im]));
    }
    conic::add_rotated_cone(prog, std::move(budget), 1.0, std::move(norms),
                            "c17");
    prog.set_objective(conic::LinExpr(h.deficit), false);
    return out;
}

int sweep_upper_bound(double t_tilde, const PlanningInputs& inputs) {
    if (!(inputs.geometry.delta_t > 0.0) || !(inputs.platform.eta_b > 0.0) ||
        !(inputs.platform.e_ini > 0.0))
        throw ConfigError("slot bound needs positive slot duration, charge "
                          "efficiency, and initial energy");
    if (!(t_tilde > 0.0)) return inputs.n_cap;
    const double raw = inputs.platform.e_ini /
                       (inputs.geometry.delta_t * inputs.platform.eta_b * t_tilde);
    if (raw >= static_cast<double>(inputs.n_cap)) return inputs.n_cap;
    return static_cast<int>(std::floor(raw));
}

}  // namespace stratosar::sca
