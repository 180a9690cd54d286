#include "stratosar/sca/dc.hpp"

#include <cmath>
#include <utility>

#include "stratosar/errors.hpp"

namespace stratosar::sca {

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

double DcPair::h(double x, double y) const { return f.value(x) * g.value(y); }

double DcPair::convex_part(double x, double y) const {
    const double s = f.value(x) + g.value(y);
    return 0.5 * s * s;
}

double DcPair::concave_part(double x, double y) const {
    const double fv = f.value(x);
    const double gv = g.value(y);
    return 0.5 * (fv * fv + gv * gv);
}

double dc_identity_check(const DcPair& pair, double x, double y) {
    const double direct = pair.h(x, y);
    const double reconstructed = pair.convex_part(x, y) - pair.concave_part(x, y);
    return std::abs(direct - reconstructed) / std::max(1.0, std::abs(direct));
}

double linearize_square(const ScalarFn& g, double x0, double x) {
    const double g0 = g.value(x0);
    return g0 * g0 + 2.0 * g0 * g.derivative(x0) * (x - x0);
}

ScalarFn make_chord(const ScalarFn& fn, double lo, double hi) {
    if (!(hi > lo)) throw ConfigError("chord interval must satisfy lo < hi");
    const double f_lo = fn.value(lo);
    const double slope = (fn.value(hi) - f_lo) / (hi - lo);
    return {[f_lo, slope, lo](double x) { return f_lo + slope * (x - lo); },
            [slope](double) { return slope; }};
}

double rate_exponent(const RadarSpec& radar, const CommSpec& comm,
                     const platform::MissionGeometry& geo) {
    const double spread = 1.0 / std::cos(geo.alpha1()) - 1.0 / std::cos(geo.alpha2());
    return 2.0 * radar.b_w * radar.prf / (radar.c * comm.b_c) * spread;
}

double rate_base(const RadarSpec& radar, const CommSpec& comm) {
    return std::exp2(radar.b_w * radar.t_p * radar.prf / comm.b_c);
}

ScalarFn make_link_snr_requirement(const RadarSpec& radar, const CommSpec& comm,
                                   const platform::MissionGeometry& geo,
                                   double extra_rate) {
    const double a = rate_exponent(radar, comm, geo);
    const double b = rate_base(radar, comm) * std::exp2(extra_rate / comm.b_c);
    return {[a, b](double z) { return b * std::exp2(a * z) - 1.0; },
            [a, b](double z) { return b * a * kLn2 * std::exp2(a * z); }};
}

ScalarFn make_square_offset(double center) {
    return {[center](double s) { return (s - center) * (s - center); },
            [center](double s) { return 2.0 * (s - center); }};
}

ScalarFn make_air_density(const atmosphere::Constants& atm) {
    const double p = atm.pressure_exponent() + 1.0;
    const double rho_b = atm.p_b1 / (atm.R_spec * atm.T_b);
    const double lapse = atm.L_b / atm.T_b;
    const double h1 = atm.H1;
    return {[=](double z) {
                return rho_b * std::pow(1.0 + lapse * (z - h1), -p);
            },
            [=](double z) {
                return -p * lapse * rho_b *
                       std::pow(1.0 + lapse * (z - h1), -p - 1.0);
            }};
}

ScalarFn make_inverse_density(const atmosphere::Constants& atm) {
    const double p = atm.pressure_exponent() + 1.0;
    const double inv_rho_b = atm.R_spec * atm.T_b / atm.p_b1;
    const double lapse = atm.L_b / atm.T_b;
    const double h1 = atm.H1;
    return {[=](double z) {
                return inv_rho_b * std::pow(1.0 + lapse * (z - h1), p);
            },
            [=](double z) {
                return p * lapse * inv_rho_b *
                       std::pow(1.0 + lapse * (z - h1), p - 1.0);
            }};
}

namespace {

double drivetrain_loss(const PlatformSpec& plat) {
    const double cz = std::cos(plat.zeta);
    return cz * cz * plat.eta_p * plat.eta_e;
}

}  // namespace

ScalarFn make_parasitic_speed(const PlatformSpec& plat) {
    const double c6 = plat.wing_area * plat.c_d0 / (2.0 * drivetrain_loss(plat));
    return {[c6](double v) { return c6 * v * v * v; },
            [c6](double v) { return 3.0 * c6 * v * v; }};
}

ScalarFn make_induced_speed(const PlatformSpec& plat) {
    const double c8 = 2.0 * plat.epsilon() * plat.weight * plat.weight /
                      (drivetrain_loss(plat) * plat.wing_area);
    return {[c8](double v) { return c8 / v; },
            [c8](double v) { return -c8 / (v * v); }};
}

ScalarFn make_harvest_power(const PlatformSpec& plat,
                            const atmosphere::Constants& atm) {
    const double gain = plat.eta_h * plat.panel_area;
    return {[=](double z) { return gain * atmosphere::solar_irradiance(z, atm); },
            [=](double z) {
                // d/dz of I0*exp(-alpha*p(z)/p0): the pressure derivative is
                // -q*(L_b/T_b)*p(z)/tau(z).
                const double irr = atmosphere::solar_irradiance(z, atm);
                const double tau = atmosphere::temperature_at(z, atm) / atm.T_b;
                const double dp = -atm.pressure_exponent() * (atm.L_b / atm.T_b) *
                                  atmosphere::pressure_at(z, atm) / tau;
                return gain * irr * (-atm.alpha_ext / atm.p_0) * dp;
            }};
}

DcPair make_link_pair(int axis, const RadarSpec& radar, const CommSpec& comm,
                      const platform::MissionGeometry& geo) {
    if (axis < 0 || axis > 2)
        throw ConfigError("link pair axis must be 0 (x), 1 (y), or 2 (z)");
    static const char* names[] = {"link_x", "link_y", "link_z"};
    return {names[axis], make_link_snr_requirement(radar, comm, geo),
            make_square_offset(comm.bs_position[static_cast<std::size_t>(axis)])};
}

DcPair make_parasitic_pair(const PlatformSpec& plat,
                           const atmosphere::Constants& atm) {
    return {"propulsion_parasitic", make_air_density(atm),
            make_parasitic_speed(plat)};
}

DcPair make_induced_pair(const PlatformSpec& plat,
                         const atmosphere::Constants& atm) {
    return {"propulsion_induced", make_inverse_density(atm),
            make_induced_speed(plat)};
}

std::vector<DcPair> make_planner_pairs(const RadarSpec& radar,
                                       const CommSpec& comm,
                                       const platform::MissionGeometry& geo,
                                       const PlatformSpec& plat,
                                       const atmosphere::Constants& atm) {
    std::vector<DcPair> pairs;
    pairs.reserve(5);
    for (int axis = 0; axis < 3; ++axis)
        pairs.push_back(make_link_pair(axis, radar, comm, geo));
    pairs.push_back(make_parasitic_pair(plat, atm));
    pairs.push_back(make_induced_pair(plat, atm));
    return pairs;
}

LinkDcTerms comm_dc_eval(double x, double y, double z, const CommSpec& comm,
                         const RadarSpec& radar,
                         const platform::MissionGeometry& geo) {
    if (!(z > 0.0)) throw ConfigError("altitude must be positive");
    const double req = make_link_snr_requirement(radar, comm, geo).value(z);
    const auto sq = [](double d) { return d * d; };
    return {req * sq(x - comm.bs_position[0]), req * sq(y - comm.bs_position[1]),
            req * sq(z - comm.bs_position[2])};
}

}  // namespace stratosar::sca
