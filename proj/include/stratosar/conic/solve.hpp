// Backend-facing solve interface and backend registry.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "stratosar/conic/program.hpp"

namespace stratosar::conic {

enum class SolveStatus { optimal, infeasible, unbounded, numerical_limit };

const char* to_string(SolveStatus status);

struct SolveResult {
    SolveStatus status = SolveStatus::numerical_limit;
    std::vector<double> primal;   ///< indexed by program variable
    double objective_value = 0.0; ///< in the program's native sense
    double max_residual = 0.0;    ///< worst residual at exit (scaled KKT or
                                  ///< raw audit, whichever is larger)
    int iterations = 0;
    double wall_time_s = 0.0;
    std::string message;
};

struct SolverSettings {
    std::string backend = "hsd";
    double feas_tol = 1e-8;
    double gap_tol = 1e-8;
    int max_iterations = 200;
    bool verbose = false;
    /// Raw-space feasibility audit threshold applied to claimed optima (see
    /// audit_feasibility); a claimed optimum whose worst relative violation
    /// exceeds it is downgraded to numerical_limit. Objective-active rows
    /// retain interior-point noise a few decades above the gap tolerance, so
    /// this sits well above feas_tol; garbage from scaling pathologies shows
    /// up at 1e-2 and beyond. Non-positive disables the audit.
    double audit_tol = 1e-5;
};

/// Solves the program with the backend named in settings.
/// Throws ConfigError for unknown backends, LogicError for invalid programs.
SolveResult solve(const ConvexProgram& program, const SolverSettings& settings);

using BackendFn =
    std::function<SolveResult(const ConvexProgram&, const SolverSettings&)>;

/// Registers (or replaces) a backend under the given name.
void register_backend(const std::string& name, BackendFn backend);

/// Names of all registered backends, sorted.
std::vector<std::string> backend_names();

}  // namespace stratosar::conic
