// Difference-of-convex decompositions of the bilinear physics terms and the
// first-order minorants used by the successive-convexification planner.
//
// Every nonconvex constraint term the planner touches is a product of two
// single-variable factors f(x)*g(y).  The identity
//     f*g = 0.5*(f + g)^2 - 0.5*(f^2 + g^2)
// splits it into a convex part (kept as a cone row) and a concave part whose
// squares are replaced by tangent-line minorants at the current iterate.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "stratosar/atmosphere.hpp"
#include "stratosar/platform.hpp"
#include "stratosar/types.hpp"

namespace stratosar::sca {

/// Differentiable scalar function handle.
struct ScalarFn {
    std::function<double(double)> value;
    std::function<double(double)> derivative;
};

/// Product-form decomposition h(x, y) = f(x) * g(y).  The two factors may
/// read the same physical variable (the vertical link term pairs the
/// required-SNR curve with the squared altitude offset, both in z).
struct DcPair {
    std::string name;
    ScalarFn f;  ///< first factor, evaluated on the probe's first coordinate
    ScalarFn g;  ///< second factor, evaluated on the probe's second coordinate

    /// h(x, y) = f(x)*g(y), the product being decomposed.
    double h(double x, double y) const;
    /// Convex component 0.5*(f(x) + g(y))^2.
    double convex_part(double x, double y) const;
    /// Subtracted component 0.5*(f(x)^2 + g(y)^2).
    double concave_part(double x, double y) const;
};

/// |h - (convex_part - concave_part)| / max(1, |h|) at one probe point.
/// Zero up to rounding for every pair (algebraic identity).
double dc_identity_check(const DcPair& pair, double x, double y);

/// First-order expansion of g^2 about x0 evaluated at x:
///   g(x0)^2 + 2*g(x0)*g'(x0)*(x - x0).
/// A global under-estimator of g(x)^2 whenever g^2 is convex.
double linearize_square(const ScalarFn& g, double x0, double x);

/// Affine chord of `fn` over [lo, hi]: equal to fn at both endpoints, an
/// over-estimator in between when fn is convex.
ScalarFn make_chord(const ScalarFn& fn, double lo, double hi);

// --- backhaul link factors -----------------------------------------------

/// Exponential growth rate [1/m] of the required link SNR with altitude:
/// (2*B_w*PRF / (c*B_c)) * (1/cos(alpha1) - 1/cos(alpha2)); positive.
double rate_exponent(const RadarSpec& radar, const CommSpec& comm,
                     const platform::MissionGeometry& geo);

/// Altitude-free base 2^(B_w*T_p*PRF/B_c) of the required link SNR (> 1).
double rate_base(const RadarSpec& radar, const CommSpec& comm);

/// Required link SNR at altitude z, with `extra_rate` [bit/s] demanded on
/// top of the raw SAR data rate:
///   base * 2^(extra_rate/B_c) * 2^(rate_exponent * z) - 1.
/// Convex and increasing in z.
ScalarFn make_link_snr_requirement(const RadarSpec& radar, const CommSpec& comm,
                                   const platform::MissionGeometry& geo,
                                   double extra_rate = 0.0);

/// Squared coordinate offset s |-> (s - center)^2.
ScalarFn make_square_offset(double center);

// --- propulsion factors ---------------------------------------------------

/// Air density rho(z) (parasitic-drag altitude factor).
ScalarFn make_air_density(const atmosphere::Constants& atm);

/// Reciprocal air density 1/rho(z) (induced-drag altitude factor).
ScalarFn make_inverse_density(const atmosphere::Constants& atm);

/// Parasitic-drag speed factor S*C_d0*V^3 / (2*cos^2(zeta)*eta_p*eta_e).
ScalarFn make_parasitic_speed(const PlatformSpec& plat);

/// Induced-drag speed factor 2*eps*W^2 / (cos^2(zeta)*eta_p*eta_e*S*V).
ScalarFn make_induced_speed(const PlatformSpec& plat);

/// Harvested solar power eta_h*A*I(z); concave on the operating band, so its
/// tangent at an expansion point is an over-estimator.
ScalarFn make_harvest_power(const PlatformSpec& plat,
                            const atmosphere::Constants& atm);

// --- named decompositions --------------------------------------------------

/// Link-term pair for one coordinate axis (0 = x, 1 = y, 2 = z):
/// f = required link SNR in z, g = squared offset from the base station.
DcPair make_link_pair(int axis, const RadarSpec& radar, const CommSpec& comm,
                      const platform::MissionGeometry& geo);

/// Parasitic propulsion pair: f = rho(z), g = parasitic speed factor (V).
DcPair make_parasitic_pair(const PlatformSpec& plat,
                           const atmosphere::Constants& atm);

/// Induced propulsion pair: f = 1/rho(z), g = induced speed factor (V).
DcPair make_induced_pair(const PlatformSpec& plat,
                         const atmosphere::Constants& atm);

/// All five decompositions (three link axes, parasitic, induced), named.
std::vector<DcPair> make_planner_pairs(const RadarSpec& radar,
                                       const CommSpec& comm,
                                       const platform::MissionGeometry& geo,
                                       const PlatformSpec& plat,
                                       const atmosphere::Constants& atm);

/// The three link products evaluated at a platform position (x, y, z):
///   term[i] = (required SNR)(z) * (coordinate_i - bs_i)^2.
/// Their sum obeys: sum < (rho_0/noise)*P_com  <=>  the raw link-rate
/// constraint (backhaul rate > SAR data rate) holds at power P_com.
struct LinkDcTerms {
    double h_x = 0.0;
    double h_y = 0.0;
    double h_z = 0.0;
    double sum() const { return h_x + h_y + h_z; }
};

LinkDcTerms comm_dc_eval(double x, double y, double z, const CommSpec& comm,
                         const RadarSpec& radar,
                         const platform::MissionGeometry& geo);

}  // namespace stratosar::sca
