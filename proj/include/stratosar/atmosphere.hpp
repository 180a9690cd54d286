// Stratospheric atmosphere layer model (20-32 km band) and solar irradiance.
//
// Pressure/temperature follow the standard-atmosphere layer form with an
// inverted (positive) lapse rate above the tropopause; density follows the
// ideal-gas law with the specific gas constant. Solar irradiance decays from
// the zero-air-mass solar constant with the pressure ratio to ground level.
// All quantities are SI: meters, Kelvin, Pascal, Watts.
#pragma once

namespace stratosar::atmosphere {

/// Physical constants of the stratospheric layer model.
/// Defaults describe the 20-32 km layer; the lapse rate is stored in K/m.
struct Constants {
    double p_b1 = 5474.889;      ///< static pressure at the layer base [Pa]
    double g = 9.8;              ///< gravitational acceleration [m/s^2]
    double M_air = 0.0289644;    ///< molar mass of air [kg/mol]
    double T_b = 216.65;         ///< temperature at the layer base [K]
    double L_b = 0.0067;         ///< lapse rate [K/m] (6.7 K/km)
    double R_univ = 8.31432;     ///< universal gas constant [N·m/(mol·K)]
    double R_spec = 287.052;     ///< specific gas constant of air [J/(kg·K)]
    double H1 = 20000.0;         ///< lower layer bound [m]
    double H2 = 32000.0;         ///< upper layer bound [m]
    double p_0 = 101325.0;       ///< ground-level pressure [Pa]
    double I_0 = 1367.0;         ///< solar constant at zero air mass [W/m^2]
    double alpha_ext = 0.32;     ///< clear-sky extinction coefficient [-]

    /// Exponent g·M_air/(R_univ·L_b) of the layer pressure law.
    double pressure_exponent() const { return g * M_air / (R_univ * L_b); }

    /// Throws ConfigError unless H1 < H2 and every constant is positive.
    void validate() const;
};

/// Temperature T_b + L_b·(z - H1) [K]. Throws DomainError outside [H1, H2].
double temperature_at(double z, const Constants& c = {});

/// Static pressure p_b1·(T_b/T(z))^(g·M/(R·L_b)) [Pa]; strictly decreasing.
/// Throws DomainError outside [H1, H2].
double pressure_at(double z, const Constants& c = {});

/// Air density pressure/(R_spec·temperature) [kg/m^3].
double air_density_at(double z, const Constants& c = {});

/// Pressure ratio to ground level, pressure_at(z)/p_0, in (0, 1).
double pressure_ratio(double z, const Constants& c = {});

/// Solar irradiance I_0·exp(-pressure_ratio·alpha_ext) [W/m^2];
/// strictly increasing with altitude inside the layer.
double solar_irradiance(double z, const Constants& c = {});

/// Panel output eta_h·A·solar_irradiance(z) [W].
/// Throws ConfigError for eta_h outside (0, 1] or non-positive area.
double harvested_power(double z, double eta_h, double panel_area,
                       const Constants& c = {});

}  // namespace stratosar::atmosphere
