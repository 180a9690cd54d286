#include "stratosar/atmosphere.hpp"

#include <cmath>
#include <sstream>

#include "stratosar/errors.hpp"

namespace stratosar::atmosphere {

namespace {

void require_in_layer(double z, const Constants& c) {
    if (!(z >= c.H1 && z <= c.H2)) {
        std::ostringstream msg;
        msg << "altitude " << z << " m outside the modeled layer ["
            << c.H1 << ", " << c.H2 << "] m";
        throw DomainError(msg.str());
    }
}

}  // namespace

void Constants::validate() const {
    if (!(H1 < H2)) throw ConfigError("atmosphere: H1 must be below H2");
    const double values[] = {p_b1, g,  M_air, T_b, L_b,       R_univ,
                             R_spec, H1, p_0,   I_0, alpha_ext};
    for (double v : values) {
        if (!(v > 0.0)) {
            throw ConfigError("atmosphere: all constants must be strictly positive");
        }
    }
}

double temperature_at(double z, const Constants& c) {
    require_in_layer(z, c);
    return c.T_b + c.L_b * (z - c.H1);
}

double pressure_at(double z, const Constants& c) {
    require_in_layer(z, c);
    const double T = c.T_b + c.L_b * (z - c.H1);
    return c.p_b1 * std::pow(c.T_b / T, c.pressure_exponent());
}

double air_density_at(double z, const Constants& c) {
    return pressure_at(z, c) / (c.R_spec * temperature_at(z, c));
}

double pressure_ratio(double z, const Constants& c) {
    return pressure_at(z, c) / c.p_0;
}

double solar_irradiance(double z, const Constants& c) {
    return c.I_0 * std::exp(-pressure_ratio(z, c) * c.alpha_ext);
}

double harvested_power(double z, double eta_h, double panel_area,
                       const Constants& c) {
    if (!(eta_h > 0.0 && eta_h <= 1.0)) {
        throw ConfigError("harvested_power: panel efficiency must lie in (0, 1]");
    }
    if (!(panel_area > 0.0)) {
        throw ConfigError("harvested_power: panel area must be positive");
    }
    return eta_h * panel_area * solar_irradiance(z, c);
}

}  // namespace stratosar::atmosphere
