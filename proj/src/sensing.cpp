#include "stratosar/sensing.hpp"

#include <cmath>
#include <numbers>

#include "stratosar/errors.hpp"

namespace stratosar::sensing {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::pair<double, double> unambiguous_ranges(
    double z, const platform::MissionGeometry& geo) {
    if (!(z > 0.0)) throw ConfigError("altitude must be positive");
    return {z / std::cos(geo.alpha2()), z / std::cos(geo.alpha1())};
}

double sar_data_rate(double z, const RadarSpec& radar,
                     const platform::MissionGeometry& geo) {
    const auto [near, far] = unambiguous_ranges(z, geo);
    return radar.b_w * ((2.0 / radar.c) * (far - near) + radar.t_p) * radar.prf;
}

double radar_snr(double p_rad, double z, double v, const RadarSpec& radar,
                 const platform::MissionGeometry& geo) {
    if (p_rad < 0.0) throw ConfigError("radar power must be nonnegative");
    if (!(z > 0.0 && v > 0.0))
        throw ConfigError("altitude and speed must be positive");
    const double cos_b = std::cos(geo.beta);
    const double num = p_rad * radar.g_t * radar.g_r *
                       std::pow(radar.lambda, 3) * radar.sigma_b * radar.c *
                       radar.t_p * radar.prf * cos_b * cos_b;
    const double den = 256.0 * std::pow(kPi, 3) * std::pow(z, 3) * radar.k_b *
                       radar.t_sys * radar.f_n * radar.b_w * radar.l_s * v;
    return num / den;
}

double radar_snr_slant(double p_rad, double r0, double sin_delta, double v,
                       const RadarSpec& radar) {
    if (!(r0 > 0.0 && sin_delta > 0.0 && v > 0.0))
        throw ConfigError("slant range, sin(delta), and speed must be positive");
    const double num = p_rad * radar.g_t * radar.g_r *
                       std::pow(radar.lambda, 3) * radar.sigma_b * radar.c *
                       radar.t_p * radar.prf;
    const double den = 256.0 * std::pow(kPi, 3) * std::pow(r0, 3) * radar.k_b *
                       radar.t_sys * radar.f_n * radar.b_w * radar.l_s * v *
                       sin_delta;
    return num / den;
}

double snr_constant(const RadarSpec& radar,
                    const platform::MissionGeometry& geo) {
    const double cos_b = std::cos(geo.beta);
    const double num = radar.g_t * radar.g_r * std::pow(radar.lambda, 3) *
                       radar.sigma_b * radar.c * radar.t_p * radar.prf *
                       cos_b * cos_b;
    const double den = 256.0 * std::pow(kPi, 3) * radar.k_b * radar.t_sys *
                       radar.f_n * radar.b_w * radar.l_s * radar.snr_min;
    return num / den;
}

double link_distance(const std::array<double, 3>& pos, const CommSpec& comm) {
    const double dx = pos[0] - comm.bs_position[0];
    const double dy = pos[1] - comm.bs_position[1];
    const double dz = pos[2] - comm.bs_position[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double backhaul_rate(double p_com, const std::array<double, 3>& pos,
                     const CommSpec& comm) {
    if (p_com < 0.0)
        throw ConfigError("communication power must be nonnegative");
    const double d = link_distance(pos, comm);
    if (d == 0.0)
        throw DomainError("backhaul link distance is zero: platform position "
                          "coincides with the base station");
    const double snr = p_com * comm.rho_0 / (comm.noise_power * d * d);
    return comm.b_c * std::log2(1.0 + snr);
}

std::pair<bool, double> link_feasible(double p_com,
                                      const std::array<double, 3>& pos,
                                      double z, const RadarSpec& radar,
                                      const CommSpec& comm,
                                      const platform::MissionGeometry& geo) {
    const double slack = backhaul_rate(p_com, pos, comm) -
                         sar_data_rate(z, radar, geo) - comm.rate_margin;
    return {slack > 0.0, slack};
}

}  // namespace stratosar::sensing
