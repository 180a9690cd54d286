#include "stratosar/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "stratosar/errors.hpp"

namespace stratosar::scenario {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double deg2rad(double deg) { return deg * kPi / 180.0; }
double db2lin(double db) { return std::pow(10.0, db / 10.0); }
double dbm2watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

/// One recognized scenario key: how to read it and where the value lands.
struct KeyHandler {
    Source default_source = Source::paper_default;
    std::function<void(const YAML::Node&, sca::PlanningInputs&)> apply;
};

using KeyTable = std::map<std::string, KeyHandler>;

double as_double(const YAML::Node& node, const std::string& key) {
    try {
        return node.as<double>();
    } catch (const YAML::Exception&) {
        throw ConfigError("scenario key '" + key + "' must be a number");
    }
}

template <typename T>
T as(const YAML::Node& node, const std::string& key) {
    try {
        return node.as<T>();
    } catch (const YAML::Exception&) {
        throw ConfigError("scenario key '" + key + "' has the wrong type");
    }
}

std::vector<double> as_power_list(const YAML::Node& node,
                                  const std::string& key) {
    std::vector<double> out;
    if (node.IsScalar()) {
        out.push_back(as_double(node, key));
    } else if (node.IsSequence()) {
        for (const auto& item : node) out.push_back(as_double(item, key));
    } else {
        throw ConfigError("scenario key '" + key +
                          "' must be a number or a list of numbers");
    }
    return out;
}

/// Applies one section of the file against its key table, recording
/// provenance and rejecting unknown keys.
void apply_section(const YAML::Node& section, const std::string& section_name,
                   const KeyTable& table, sca::PlanningInputs& inputs,
                   std::map<std::string, Source>& provenance) {
    for (const auto& [key, handler] : table)
        provenance.emplace(section_name + "." + key, handler.default_source);
    if (!section) return;
    if (!section.IsMap())
        throw ConfigError("scenario section '" + section_name +
                          "' must be a mapping");
    for (const auto& entry : section) {
        const std::string key = entry.first.as<std::string>();
        const auto it = table.find(key);
        if (it == table.end())
            throw ConfigError("unknown scenario key '" + section_name + "." +
                              key + "'");
        it->second.apply(entry.second, inputs);
        provenance[section_name + "." + key] = Source::file;
    }
}

KeyTable geometry_table() {
    using In = sca::PlanningInputs;
    KeyTable t;
    t["sweep_count"] = {Source::paper_default, [](const YAML::Node& n, In& in) {
                            in.geometry.sweep_count = as<int>(n, "sweep_count");
                        }};
    t["slots_per_sweep"] = {Source::paper_default,
                            [](const YAML::Node& n, In& in) {
                                in.geometry.slots_per_sweep =
                                    as<int>(n, "slots_per_sweep");
                            }};
    t["slot_duration_s"] = {Source::paper_default,
                            [](const YAML::Node& n, In& in) {
                                in.geometry.delta_t =
                                    as_double(n, "slot_duration_s");
                            }};
    t["boresight_deg"] = {Source::paper_default,
                          [](const YAML::Node& n, In& in) {
                              in.geometry.beta =
                                  deg2rad(as_double(n, "boresight_deg"));
                          }};
    t["beam_width_deg"] = {Source::paper_default,
                           [](const YAML::Node& n, In& in) {
                               in.geometry.alpha =
                                   deg2rad(as_double(n, "beam_width_deg"));
                           }};
    t["bank_deg"] = {Source::paper_default, [](const YAML::Node& n, In& in) {
                         const double zeta = deg2rad(as_double(n, "bank_deg"));
                         // One physical banking angle drives both the turn
                         // geometry and the propulsion model.
                         in.geometry.zeta = zeta;
                         in.platform.zeta = zeta;
                     }};
    t["gravity_mps2"] = {Source::paper_default,
                         [](const YAML::Node& n, In& in) {
                             in.geometry.g = as_double(n, "gravity_mps2");
                         }};
    return t;
}

KeyTable radar_table() {
    using In = sca::PlanningInputs;
    KeyTable t;
    t["bandwidth_hz"] = {Source::paper_default,
                         [](const YAML::Node& n, In& in) {
                             in.radar.b_w = as_double(n, "bandwidth_hz");
                         }};
    t["pulse_s"] = {Source::paper_default, [](const YAML::Node& n, In& in) {
                        in.radar.t_p = as_double(n, "pulse_s");
                    }};
    t["prf_hz"] = {Source::paper_default, [](const YAML::Node& n, In& in) {
                       in.radar.prf = as_double(n, "prf_hz");
                   }};
    t["tx_gain_db"] = {Source::paper_default, [](const YAML::Node& n, In& in) {
                           in.radar.g_t = db2lin(as_double(n, "tx_gain_db"));
                       }};
    t["rx_gain_db"] = {Source::paper_default, [](const YAML::Node& n, In& in) {
                           in.radar.g_r = db2lin(as_double(n, "rx_gain_db"));
                       }};
    t["carrier_hz"] = {Source::paper_default, [](const YAML::Node& n, In& in) {
                           const double f = as_double(n, "carrier_hz");
                           if (!(f > 0.0))
                               throw ConfigError(
                                   "radar.carrier_hz must be positive");
                           in.radar.lambda = in.radar.c / f;
                       }};
    t["backscatter"] = {Source::paper_default, [](const YAML::Node& n, In& in) {
                            in.radar.sigma_b = as_double(n, "backscatter");
                        }};
    t["system_temp_k"] = {Source::paper_default,
                          [](const YAML::Node& n, In& in) {
                              in.radar.t_sys = as_double(n, "system_temp_k");
                          }};
    t["noise_figure_db"] = {Source::paper_default,
                            [](const YAML::Node& n, In& in) {
                                in.radar.f_n =
                                    db2lin(as_double(n, "noise_figure_db"));
                            }};
    t["system_loss_db"] = {Source::paper_default,
                           [](const YAML::Node& n, In& in) {
                               in.radar.l_s =
                                   db2lin(as_double(n, "system_loss_db"));
                           }};
    t["snr_min_db"] = {Source::paper_default, [](const YAML::Node& n, In& in) {
                           in.radar.snr_min = db2lin(as_double(n, "snr_min_db"));
                       }};
    t["max_power_dbm"] = {Source::paper_default,
                          [](const YAML::Node& n, In& in) {
                              in.radar.p_rad_max =
                                  dbm2watt(as_double(n, "max_power_dbm"));
                          }};
    t["snr_margin"] = {Source::shipped_default,
                       [](const YAML::Node& n, In& in) {
                           in.radar.snr_margin = as_double(n, "snr_margin");
                       }};
    return t;
}

KeyTable comm_table() {
    using In = sca::PlanningInputs;
    KeyTable t;
    t["bandwidth_hz"] = {Source::paper_default,
                         [](const YAML::Node& n, In& in) {
                             in.comm.b_c = as_double(n, "bandwidth_hz");
                         }};
    t["ref_gain"] = {Source::paper_default, [](const YAML::Node& n, In& in) {
                         in.comm.rho_0 = as_double(n, "ref_gain");
                     }};
    t["noise_w"] = {Source::paper_default, [](const YAML::Node& n, In& in) {
                        in.comm.noise_power = as_double(n, "noise_w");
                    }};
    t["bs_position_m"] = {Source::paper_default,
                          [](const YAML::Node& n, In& in) {
                              if (!n.IsSequence() || n.size() != 3)
                                  throw ConfigError(
                                      "comm.bs_position_m must be a list of "
                                      "three coordinates [m]");
                              for (int i = 0; i < 3; ++i)
                                  in.comm.bs_position[static_cast<std::size_t>(
                                      i)] = as_double(n[i], "bs_position_m");
                          }};
    t["max_power_dbm"] = {Source::paper_default,
                          [](const YAML::Node& n, In& in) {
                              in.comm.p_com_max =
                                  dbm2watt(as_double(n, "max_power_dbm"));
                          }};
    t["rate_margin_bps"] = {Source::shipped_default,
                            [](const YAML::Node& n, In& in) {
                                in.comm.rate_margin =
                                    as_double(n, "rate_margin_bps");
                            }};
    return t;
}

KeyTable platform_table() {
    using In = sca::PlanningInputs;
    KeyTable t;
    auto field = [](double PlatformSpec::*member, const char* key) {
        return KeyHandler{Source::paper_default,
                          [member, key](const YAML::Node& n, In& in) {
                              in.platform.*member = as_double(n, key);
                          }};
    };
    t["prop_efficiency"] = field(&PlatformSpec::eta_p, "prop_efficiency");
    t["motor_efficiency"] = field(&PlatformSpec::eta_e, "motor_efficiency");
    t["wing_area_m2"] = field(&PlatformSpec::wing_area, "wing_area_m2");
    t["c_d0"] = field(&PlatformSpec::c_d0, "c_d0");
    t["weight_n"] = field(&PlatformSpec::weight, "weight_n");
    t["oswald"] = field(&PlatformSpec::e_osw, "oswald");
    t["aspect_ratio"] = field(&PlatformSpec::aspect_ratio, "aspect_ratio");
    t["c_l_max"] = field(&PlatformSpec::c_l_max, "c_l_max");
    t["charge_efficiency"] = field(&PlatformSpec::eta_b, "charge_efficiency");
    t["discharge_efficiency"] =
        field(&PlatformSpec::eta_c, "discharge_efficiency");
    t["initial_energy_j"] = field(&PlatformSpec::e_ini, "initial_energy_j");
    t["harvest_efficiency"] = field(&PlatformSpec::eta_h, "harvest_efficiency");
    t["panel_area_m2"] = field(&PlatformSpec::panel_area, "panel_area_m2");
    t["z_min_m"] = field(&PlatformSpec::z_min, "z_min_m");
    t["z_max_m"] = field(&PlatformSpec::z_max, "z_max_m");
    t["v_max_mps"] = field(&PlatformSpec::v_max, "v_max_mps");
    return t;
}

KeyTable search_table() {
    using In = sca::PlanningInputs;
    KeyTable t;
    t["n_cap"] = {Source::shipped_default, [](const YAML::Node& n, In& in) {
                      in.n_cap = as<int>(n, "n_cap");
                  }};
    t["xi1_tol"] = {Source::shipped_default, [](const YAML::Node& n, In& in) {
                        in.xi1_tol = as_double(n, "xi1_tol");
                    }};
    t["xi2_tol"] = {Source::shipped_default, [](const YAML::Node& n, In& in) {
                        in.xi2_tol = as_double(n, "xi2_tol");
                    }};
    t["max_iterations"] = {Source::shipped_default,
                           [](const YAML::Node& n, In& in) {
                               in.max_iterations = as<int>(n, "max_iterations");
                           }};
    t["energy_floor_fraction"] = {Source::shipped_default,
                                  [](const YAML::Node& n, In& in) {
                                      in.energy_floor_fraction = as_double(
                                          n, "energy_floor_fraction");
                                  }};
    t["parallel"] = {Source::shipped_default, [](const YAML::Node& n, In& in) {
                         in.parallel_sweep_search = as<bool>(n, "parallel");
                     }};
    t["seed"] = {Source::shipped_default, [](const YAML::Node& n, In& in) {
                     in.seed = as<unsigned>(n, "seed");
                 }};
    return t;
}

KeyTable solver_table() {
    using In = sca::PlanningInputs;
    KeyTable t;
    t["backend"] = {Source::shipped_default, [](const YAML::Node& n, In& in) {
                        in.solver.backend = as<std::string>(n, "backend");
                    }};
    t["feas_tol"] = {Source::shipped_default, [](const YAML::Node& n, In& in) {
                         in.solver.feas_tol = as_double(n, "feas_tol");
                     }};
    t["gap_tol"] = {Source::shipped_default, [](const YAML::Node& n, In& in) {
                        in.solver.gap_tol = as_double(n, "gap_tol");
                    }};
    t["max_iterations"] = {Source::shipped_default,
                           [](const YAML::Node& n, In& in) {
                               in.solver.max_iterations =
                                   as<int>(n, "max_iterations");
                           }};
    t["verbose"] = {Source::shipped_default, [](const YAML::Node& n, In& in) {
                        in.solver.verbose = as<bool>(n, "verbose");
                    }};
    return t;
}

KeyTable pins_table() {
    using In = sca::PlanningInputs;
    KeyTable t;
    t["radar_power_w"] = {Source::shipped_default,
                          [](const YAML::Node& n, In& in) {
                              in.fixed_radar_power =
                                  as_power_list(n, "pins.radar_power_w");
                          }};
    t["comm_power_w"] = {Source::shipped_default,
                         [](const YAML::Node& n, In& in) {
                             in.fixed_comm_power =
                                 as_power_list(n, "pins.comm_power_w");
                         }};
    return t;
}

void append_kv(std::ostringstream& out, const std::string& key, double value) {
    out.precision(17);
    out << key << "=" << value << "\n";
}

}  // namespace

const char* to_string(Source source) {
    switch (source) {
        case Source::file: return "file";
        case Source::paper_default: return "paper_default";
        case Source::shipped_default: return "shipped_default";
    }
    return "shipped_default";
}

Scenario load_scenario(const std::string& path) {
    YAML::Node root;
    try {
        root = YAML::LoadFile(path);
    } catch (const YAML::Exception& err) {
        throw ConfigError("cannot parse scenario file '" + path +
                          "': " + err.what());
    }
    if (!root.IsMap())
        throw ConfigError("scenario file '" + path +
                          "' must be a YAML mapping");

    static const std::map<std::string, KeyTable> sections = {
        {"geometry", geometry_table()}, {"radar", radar_table()},
        {"comm", comm_table()},         {"platform", platform_table()},
        {"search", search_table()},     {"solver", solver_table()},
        {"pins", pins_table()},
    };

    Scenario sc;
    sc.name = std::filesystem::path(path).stem().string();
    for (const auto& entry : root) {
        const std::string key = entry.first.as<std::string>();
        if (key == "name") {
            sc.name = as<std::string>(entry.second, "name");
            continue;
        }
        if (sections.find(key) == sections.end())
            throw ConfigError("unknown scenario section '" + key + "'");
    }
    for (const auto& [section_name, table] : sections)
        apply_section(root[section_name], section_name, table, sc.inputs,
                      sc.provenance);

    try {
        sc.inputs.validate();
    } catch (const ConfigError& err) {
        throw ConfigError("scenario '" + sc.name + "': " + err.what());
    }
    sc.config_hash = config_digest(sc.inputs);
    return sc;
}

std::vector<double> load_power_pins(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open power pin file '" + path + "'");
    std::vector<double> out;
    double v = 0.0;
    while (in >> v) out.push_back(v);
    if (!in.eof())
        throw ConfigError("power pin file '" + path +
                          "' contains non-numeric content");
    if (out.empty())
        throw ConfigError("power pin file '" + path + "' is empty");
    return out;
}

std::string canonical_dump(const sca::PlanningInputs& in) {
    std::ostringstream out;
    append_kv(out, "comm.b_c", in.comm.b_c);
    append_kv(out, "comm.bs_x", in.comm.bs_position[0]);
    append_kv(out, "comm.bs_y", in.comm.bs_position[1]);
    append_kv(out, "comm.bs_z", in.comm.bs_position[2]);
    append_kv(out, "comm.noise_power", in.comm.noise_power);
    append_kv(out, "comm.p_com_max", in.comm.p_com_max);
    append_kv(out, "comm.rate_margin", in.comm.rate_margin);
    append_kv(out, "comm.rho_0", in.comm.rho_0);
    append_kv(out, "geometry.alpha", in.geometry.alpha);
    append_kv(out, "geometry.beta", in.geometry.beta);
    append_kv(out, "geometry.delta_t", in.geometry.delta_t);
    append_kv(out, "geometry.g", in.geometry.g);
    append_kv(out, "geometry.slots_per_sweep", in.geometry.slots_per_sweep);
    append_kv(out, "geometry.sweep_count", in.geometry.sweep_count);
    append_kv(out, "geometry.zeta", in.geometry.zeta);
    for (std::size_t i = 0; i < in.fixed_comm_power.size(); ++i)
        append_kv(out, "pins.comm_power[" + std::to_string(i) + "]",
                  in.fixed_comm_power[i]);
    for (std::size_t i = 0; i < in.fixed_radar_power.size(); ++i)
        append_kv(out, "pins.radar_power[" + std::to_string(i) + "]",
                  in.fixed_radar_power[i]);
    append_kv(out, "platform.aspect_ratio", in.platform.aspect_ratio);
    append_kv(out, "platform.c_d0", in.platform.c_d0);
    append_kv(out, "platform.c_l_max", in.platform.c_l_max);
    append_kv(out, "platform.e_ini", in.platform.e_ini);
    append_kv(out, "platform.e_osw", in.platform.e_osw);
    append_kv(out, "platform.eta_b", in.platform.eta_b);
    append_kv(out, "platform.eta_c", in.platform.eta_c);
    append_kv(out, "platform.eta_e", in.platform.eta_e);
    append_kv(out, "platform.eta_h", in.platform.eta_h);
    append_kv(out, "platform.eta_p", in.platform.eta_p);
    append_kv(out, "platform.panel_area", in.platform.panel_area);
    append_kv(out, "platform.v_max", in.platform.v_max);
    append_kv(out, "platform.weight", in.platform.weight);
    append_kv(out, "platform.wing_area", in.platform.wing_area);
    append_kv(out, "platform.z_max", in.platform.z_max);
    append_kv(out, "platform.z_min", in.platform.z_min);
    append_kv(out, "platform.zeta", in.platform.zeta);
    append_kv(out, "radar.b_w", in.radar.b_w);
    append_kv(out, "radar.f_n", in.radar.f_n);
    append_kv(out, "radar.g_r", in.radar.g_r);
    append_kv(out, "radar.g_t", in.radar.g_t);
    append_kv(out, "radar.l_s", in.radar.l_s);
    append_kv(out, "radar.lambda", in.radar.lambda);
    append_kv(out, "radar.p_rad_max", in.radar.p_rad_max);
    append_kv(out, "radar.prf", in.radar.prf);
    append_kv(out, "radar.sigma_b", in.radar.sigma_b);
    append_kv(out, "radar.snr_margin", in.radar.snr_margin);
    append_kv(out, "radar.snr_min", in.radar.snr_min);
    append_kv(out, "radar.t_p", in.radar.t_p);
    append_kv(out, "radar.t_sys", in.radar.t_sys);
    append_kv(out, "search.energy_floor_fraction", in.energy_floor_fraction);
    append_kv(out, "search.max_iterations", in.max_iterations);
    append_kv(out, "search.n_cap", in.n_cap);
    append_kv(out, "search.parallel", in.parallel_sweep_search ? 1.0 : 0.0);
    append_kv(out, "search.seed", in.seed);
    append_kv(out, "search.xi1_tol", in.xi1_tol);
    append_kv(out, "search.xi2_tol", in.xi2_tol);
    out << "solver.backend=" << in.solver.backend << "\n";
    append_kv(out, "solver.feas_tol", in.solver.feas_tol);
    append_kv(out, "solver.gap_tol", in.solver.gap_tol);
    append_kv(out, "solver.max_iterations", in.solver.max_iterations);
    return out.str();
}

std::string config_digest(const sca::PlanningInputs& inputs) {
    const std::string dump = canonical_dump(inputs);
    // FNV-1a, 64 bit.
    std::uint64_t hash = 14695981039346656037ull;
    for (const unsigned char ch : dump) {
        hash ^= ch;
        hash *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << hash;
    return out.str();
}

}  // namespace stratosar::scenario
