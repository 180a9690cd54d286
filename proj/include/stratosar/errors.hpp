// Error taxonomy shared by all stratosar modules.
//
// The library distinguishes four failure classes so that callers (and the
// CLI exit-code mapping) can react without string matching:
//   ConfigError      - bad user input: parameters, files, units
//   DomainError      - a physical model evaluated outside its stated validity
//   ConstraintError  - a mission constraint cannot be met / was violated
//   LogicError       - caller broke an API precondition (a bug, not bad data)
#pragma once

#include <stdexcept>
#include <string>

namespace stratosar {

class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class ConstraintError : public std::runtime_error {
public:
    explicit ConstraintError(const std::string& what) : std::runtime_error(what) {}
};

class LogicError : public std::logic_error {
public:
    explicit LogicError(const std::string& what) : std::logic_error(what) {}
};

/// Battery ran dry while stepping the energy ledger; carries the slot index.
class EnergyDepletedError : public ConstraintError {
public:
    EnergyDepletedError(int slot, double energy_j, const std::string& what)
        : ConstraintError(what), slot_(slot), energy_j_(energy_j) {}
    int slot() const noexcept { return slot_; }
    double energy_j() const noexcept { return energy_j_; }

private:
    int slot_;
    double energy_j_;
};

}  // namespace stratosar
