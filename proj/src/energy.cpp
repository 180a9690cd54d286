#include "stratosar/energy.hpp"

#include <cmath>
#include <sstream>

#include "stratosar/errors.hpp"

namespace stratosar::energy {

double propulsion_power(double z, double v, const PlatformSpec& plat,
                        const atmosphere::Constants& atm) {
    if (!(v > 0.0)) throw ConfigError("airspeed must be positive");
    const double rho = atmosphere::air_density_at(z, atm);
    const double cos_z = std::cos(plat.zeta);
    const double drive = cos_z * cos_z * plat.eta_p * plat.eta_e;
    const double parasite = 0.5 * rho * v * v * v * plat.wing_area * plat.c_d0;
    const double induced = 2.0 * plat.epsilon() * plat.weight * plat.weight /
                           (rho * plat.wing_area * v);
    return (parasite + induced) / drive;
}

double min_power_speed(double z, const PlatformSpec& plat,
                       const atmosphere::Constants& atm) {
    const double rho = atmosphere::air_density_at(z, atm);
    const double num = 4.0 * plat.epsilon() * plat.weight * plat.weight;
    const double den = 3.0 * rho * rho * plat.wing_area * plat.wing_area *
                       plat.c_d0;
    return std::pow(num / den, 0.25);
}

double net_power(double p_har, double p_mot, double p_rad, double p_com) {
    return p_har - p_mot - p_rad - p_com;
}

double select_efficiency(double p_re, const PlatformSpec& plat) {
    return p_re > 0.0 ? plat.eta_b : plat.eta_c;
}

double step_ledger(double e_prev, double p_re, double delta_t,
                   const PlatformSpec& plat, bool discharge_divides,
                   int slot) {
    if (!(e_prev > 0.0))
        throw ConfigError("ledger step requires positive previous energy");
    if (!(delta_t > 0.0)) throw ConfigError("slot duration must be positive");
    double e_next;
    if (discharge_divides && p_re <= 0.0) {
        e_next = e_prev + p_re * delta_t / plat.eta_c;
    } else {
        e_next = e_prev + select_efficiency(p_re, plat) * p_re * delta_t;
    }
    if (e_next <= 0.0) {
        std::ostringstream msg;
        msg << "battery depleted";
        if (slot >= 0) msg << " at slot " << slot;
        msg << ": energy would drop to " << e_next << " J";
        throw EnergyDepletedError(slot, e_next, msg.str());
    }
    return e_next;
}

EnergyLedger run_ledger(double e_ini, const std::vector<double>& p_har,
                        const std::vector<double>& p_mot,
                        const std::vector<double>& p_rad,
                        const std::vector<double>& p_com, double delta_t,
                        const PlatformSpec& plat, bool discharge_divides) {
    const std::size_t n = p_har.size();
    if (n == 0) throw ConfigError("ledger requires at least one slot");
    if (p_mot.size() != n || p_rad.size() != n || p_com.size() != n)
        throw ConfigError("power schedule vectors must share one length");
    if (!(e_ini > 0.0)) throw ConfigError("initial energy must be positive");

    EnergyLedger ledger;
    ledger.energy.resize(n);
    ledger.net_power.resize(n);
    ledger.efficiency_used.resize(n);
    ledger.energy[0] = e_ini;
    ledger.net_power[0] = net_power(p_har[0], p_mot[0], p_rad[0], p_com[0]);
    ledger.efficiency_used[0] = select_efficiency(ledger.net_power[0], plat);
    for (std::size_t i = 1; i < n; ++i) {
        const double p_re = net_power(p_har[i], p_mot[i], p_rad[i], p_com[i]);
        ledger.net_power[i] = p_re;
        ledger.efficiency_used[i] = select_efficiency(p_re, plat);
        ledger.energy[i] =
            step_ledger(ledger.energy[i - 1], p_re, delta_t, plat,
                        discharge_divides, static_cast<int>(i) + 1);
    }
    return ledger;
}

}  // namespace stratosar::energy
