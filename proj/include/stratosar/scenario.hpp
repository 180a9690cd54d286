// Mission-scenario loading: YAML parameter files with explicit units in the
// key names (_deg, _db, _dbm, _hz, _m, ...), converted to linear SI exactly
// once at load.  Every parameter tracks whether it came from the file or a
// default, and the loaded configuration gets a reproducibility digest.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "stratosar/sca/builders.hpp"

namespace stratosar::scenario {

/// Where a parameter's value came from.
enum class Source {
    file,             ///< present in the scenario file
    paper_default,    ///< published reference system value
    shipped_default,  ///< implementation knob (tolerances, caps, margins)
};

const char* to_string(Source source);

struct Scenario {
    std::string name;
    sca::PlanningInputs inputs;
    std::map<std::string, Source> provenance;  ///< dotted key -> source
    std::string config_hash;  ///< 64-bit FNV-1a of the canonical dump, hex
};

/// Parses a YAML mission file.  Angle keys end in _deg, decibel keys in
/// _db/_dbm; both are converted to linear SI on load.  Unknown keys raise
/// ConfigError (typo protection), as do physically inconsistent values.
Scenario load_scenario(const std::string& path);

/// Whitespace-separated power values [W] from a plain text file; used for
/// the fixed-power benchmark modes (one global value or one per sweep).
std::vector<double> load_power_pins(const std::string& path);

/// Canonical sorted key=value listing of every planner input at full
/// precision; the config digest hashes exactly this string.
std::string canonical_dump(const sca::PlanningInputs& inputs);

/// Hex-encoded 64-bit FNV-1a hash of canonical_dump(inputs).
std::string config_digest(const sca::PlanningInputs& inputs);

}  // namespace stratosar::scenario
