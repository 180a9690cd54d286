// SAR data-rate and imaging-SNR models plus the backhaul link model.
//
// All quantities are linear SI; dB conversions happen at scenario load.
#pragma once

#include <array>
#include <utility>

#include "stratosar/platform.hpp"
#include "stratosar/types.hpp"

namespace stratosar::sensing {

/// Slant ranges [m] to the inner and outer beam edges at altitude z:
/// (z/cos(alpha2), z/cos(alpha1)); the pair is (near, far).
std::pair<double, double> unambiguous_ranges(
    double z, const platform::MissionGeometry& geo);

/// Raw SAR data rate [bit/s] generated at altitude z:
/// B_w * [ (2/c)*(R_far - R_near) + T_p ] * PRF; affine and increasing in z.
double sar_data_rate(double z, const RadarSpec& radar,
                     const platform::MissionGeometry& geo);

/// Imaging SNR (linear) of the altitude-form radar equation:
/// P_rad*G_t*G_r*lambda^3*sigma_b*c*T_p*PRF*cos^2(beta)
///   / (256*pi^3*z^3*K_B*T_sys*F_n*B_w*L_s*V).
double radar_snr(double p_rad, double z, double v, const RadarSpec& radar,
                 const platform::MissionGeometry& geo);

/// Slant-range form of the radar equation, parameterized by slant range r0
/// and depression angle delta (sin(delta) = z/r0):
/// P*G_t*G_r*lambda^3*sigma_b*c*T_p*PRF / (256*pi^3*r0^3*K*T*F_n*B_w*L_s*V*sin(delta)).
/// Equal to radar_snr when r0 = z/cos(beta) and delta = pi/2 - beta.
double radar_snr_slant(double p_rad, double r0, double sin_delta, double v,
                       const RadarSpec& radar);

/// Constant con. such that the SNR threshold is equivalent to
/// P_rad * con. > z^3 * V:
/// con. = G_t*G_r*lambda^3*sigma_b*c*T_p*PRF*cos^2(beta)
///        / (256*pi^3*K_B*T_sys*F_n*B_w*L_s*snr_min).
double snr_constant(const RadarSpec& radar,
                    const platform::MissionGeometry& geo);

/// Euclidean distance [m] from a platform position to the base station.
double link_distance(const std::array<double, 3>& pos, const CommSpec& comm);

/// Free-space backhaul throughput [bit/s]:
/// B_c * log2(1 + P_com*rho_0/(noise*d^2)).
/// Throws DomainError when the position coincides with the base station.
double backhaul_rate(double p_com, const std::array<double, 3>& pos,
                     const CommSpec& comm);

/// Link feasibility: true iff backhaul_rate exceeds sar_data_rate by at
/// least the configured margin; .second is the signed slack
/// backhaul_rate - sar_data_rate - rate_margin [bit/s].
std::pair<bool, double> link_feasible(double p_com,
                                      const std::array<double, 3>& pos,
                                      double z, const RadarSpec& radar,
                                      const CommSpec& comm,
                                      const platform::MissionGeometry& geo);

}  // namespace stratosar::sensing
