#include "stratosar/types.hpp"

#include <cmath>
#include <numbers>

#include "stratosar/errors.hpp"

namespace stratosar {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0)) throw ConfigError(std::string(name) + " must be positive");
}

void require_efficiency(double v, const char* name) {
    if (!(v > 0.0 && v <= 1.0))
        throw ConfigError(std::string(name) + " must lie in (0, 1]");
}

}  // namespace

double PlatformSpec::epsilon() const {
    return 1.0 / (std::numbers::pi * e_osw * aspect_ratio);
}

void PlatformSpec::validate() const {
    require_efficiency(eta_p, "propeller efficiency");
    require_efficiency(eta_e, "engine efficiency");
    require_efficiency(eta_b, "battery charge efficiency");
    require_efficiency(eta_c, "battery discharge efficiency");
    require_efficiency(eta_h, "solar panel efficiency");
    require_positive(wing_area, "wing area");
    require_positive(c_d0, "zero-lift drag coefficient");
    require_positive(weight, "platform weight");
    require_positive(e_osw, "Oswald efficiency factor");
    require_positive(aspect_ratio, "aspect ratio");
    require_positive(c_l_max, "maximum lift coefficient");
    require_positive(e_ini, "initial battery energy");
    require_positive(panel_area, "solar panel area");
    require_positive(v_max, "maximum airspeed");
    if (!(zeta >= 0.0 && zeta < 0.5 * std::numbers::pi))
        throw ConfigError("banking angle must lie in [0, pi/2)");
    if (!(z_min > 0.0 && z_max > z_min))
        throw ConfigError("altitude band requires 0 < z_min < z_max");
}

void RadarSpec::validate() const {
    require_positive(b_w, "radar bandwidth");
    require_positive(t_p, "pulse width");
    require_positive(prf, "pulse repetition frequency");
    require_positive(g_t, "transmit gain");
    require_positive(g_r, "receive gain");
    require_positive(c, "propagation speed");
    require_positive(lambda, "wavelength");
    require_positive(sigma_b, "backscatter coefficient");
    require_positive(k_b, "Boltzmann constant");
    require_positive(t_sys, "receiver temperature");
    require_positive(f_n, "noise figure");
    require_positive(l_s, "system loss");
    require_positive(snr_min, "minimum imaging SNR");
    require_positive(p_rad_max, "maximum radar power");
    require_positive(snr_margin, "SNR margin");
}

void CommSpec::validate() const {
    require_positive(b_c, "communication bandwidth");
    require_positive(rho_0, "reference channel gain");
    require_positive(noise_power, "receiver noise power");
    require_positive(p_com_max, "maximum communication power");
    require_positive(rate_margin, "rate margin");
}

}  // namespace stratosar
