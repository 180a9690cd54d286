// Plain parameter records shared across the physical models.
//
// Everything is stored in linear SI units; dB/dBm/degree fields in scenario
// files are converted exactly once at load (see scenario.hpp).
#pragma once

#include <array>

namespace stratosar {

/// Airframe, battery, and solar-panel parameters.
struct PlatformSpec {
    double eta_p = 0.8;        ///< propeller efficiency (0,1]
    double eta_e = 0.9;        ///< engine/motor efficiency (0,1]
    double zeta = 0.17453292519943295;  ///< banking angle [rad] (10 deg)
    double wing_area = 45.0;   ///< total wing area S [m^2]
    double c_d0 = 0.012;       ///< zero-lift drag coefficient
    double weight = 4410.0;    ///< platform weight [N]
    double e_osw = 0.9;        ///< Oswald efficiency factor
    double aspect_ratio = 20.0;///< wing aspect ratio
    double c_l_max = 1.5;      ///< maximum lift coefficient
    double eta_b = 0.95;       ///< battery charge efficiency (0,1]
    double eta_c = 0.9;        ///< battery discharge efficiency (0,1]
    double e_ini = 1.6e7;      ///< initial battery energy [J]
    double eta_h = 0.2;        ///< solar-panel conversion efficiency (0,1]
    double panel_area = 12.0;  ///< solar collection area [m^2]
    double z_min = 20000.0;    ///< minimum operating altitude [m]
    double z_max = 32000.0;    ///< maximum operating altitude [m]
    double v_max = 280.0;      ///< maximum airspeed [m/s]

    /// Induced-drag coefficient 1/(pi·e·R_w).
    double epsilon() const;

    /// Throws ConfigError on out-of-range efficiencies or non-positive sizes.
    void validate() const;
};

/// SAR transmitter/receiver parameters (linear units).
struct RadarSpec {
    double b_w = 1.0e8;          ///< pulse bandwidth [Hz]
    double t_p = 1.0e-6;         ///< pulse width [s]
    double prf = 1000.0;         ///< pulse repetition frequency [Hz]
    double g_t = 100.0;          ///< transmit antenna gain (linear, 20 dB)
    double g_r = 100.0;          ///< receive antenna gain (linear, 20 dB)
    double c = 299792458.0;      ///< propagation speed [m/s]
    double lambda = 299792458.0 / 2.0e9;  ///< wavelength [m] (2 GHz carrier)
    double sigma_b = 1.0;        ///< surface backscatter coefficient (linear)
    double k_b = 1.380649e-23;   ///< Boltzmann constant [J/K]
    double t_sys = 290.0;        ///< receiver temperature [K]
    double f_n = 3.1622776601683795;  ///< noise figure (linear, 5 dB)
    double l_s = 2.511886431509580;   ///< system loss (linear, 4 dB)
    double snr_min = 0.1;        ///< imaging SNR threshold (linear, -10 dB)
    double p_rad_max = 39.810717055349734;  ///< max radar power [W] (46 dBm)
    double snr_margin = 1.0e-6;  ///< strict-inequality margin factor - 1

    void validate() const;
};

/// Backhaul free-space link parameters (linear units).
struct CommSpec {
    double b_c = 1.0e8;          ///< channel bandwidth [Hz]
    double rho_0 = 1.0e-5;       ///< channel power gain at 1 m (linear)
    double noise_power = 1.0e-13;///< receiver noise power [W]
    std::array<double, 3> bs_position{0.0, 0.0, 0.0};  ///< base station [m]
    double p_com_max = 10.0;     ///< max communication power [W] (40 dBm)
    double rate_margin = 1.0;    ///< strict-inequality margin [bit/s]

    void validate() const;
};

}  // namespace stratosar
