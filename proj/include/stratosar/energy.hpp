// Propulsion power, net power, charge/discharge efficiency selection, and
// the battery-energy ledger.
#pragma once

#include <vector>

#include "stratosar/atmosphere.hpp"
#include "stratosar/types.hpp"

namespace stratosar::energy {

/// Battery-energy trace across the mission's slots.
struct EnergyLedger {
    std::vector<double> energy;           ///< E(n) [J], n = 1..MN
    std::vector<double> net_power;        ///< P_Re(n) [W]
    std::vector<double> efficiency_used;  ///< eta applied at each step
};

/// Level banked-flight propulsion power [W] at altitude z and speed V:
/// [ 0.5*rho(z)*V^3*S*C_d0 + 2*eps*W^2/(rho(z)*S*V) ] / (cos^2(zeta)*eta_p*eta_e)
/// with eps = 1/(pi*e_osw*aspect_ratio).  Strictly convex in V at fixed z.
double propulsion_power(double z, double v, const PlatformSpec& plat,
                        const atmosphere::Constants& atm = {});

/// Speed minimizing propulsion_power at fixed altitude:
/// (4*eps*W^2 / (3*rho^2*S^2*C_d0))^(1/4).
double min_power_speed(double z, const PlatformSpec& plat,
                       const atmosphere::Constants& atm = {});

/// Net power balance [W]: harvested minus all consumption.
double net_power(double p_har, double p_mot, double p_rad, double p_com);

/// Charge/discharge efficiency applied to a net-power step:
/// eta_b when charging (P_re > 0), eta_c otherwise.
double select_efficiency(double p_re, const PlatformSpec& plat);

/// One battery-ledger step: E = E_prev + eta(P_re)*P_re*delta_t.
/// With discharge_divides, drawing energy divides by eta_c instead
/// (physically conventional alternative): E = E_prev + P_re*delta_t/eta_c.
/// Throws EnergyDepletedError (carrying `slot` and the resulting energy)
/// when the step exhausts the battery.
double step_ledger(double e_prev, double p_re, double delta_t,
                   const PlatformSpec& plat, bool discharge_divides = false,
                   int slot = -1);

/// Ledger over a whole schedule: energy[0] = e_ini, then step_ledger applied
/// to net_power of each subsequent slot. Vectors must share one length >= 1.
EnergyLedger run_ledger(double e_ini, const std::vector<double>& p_har,
                        const std::vector<double>& p_mot,
                        const std::vector<double>& p_rad,
                        const std::vector<double>& p_com, double delta_t,
                        const PlatformSpec& plat,
                        bool discharge_divides = false);

}  // namespace stratosar::energy
