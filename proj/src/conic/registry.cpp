#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "backends.hpp"
#include "stratosar/conic/solve.hpp"
#include "stratosar/errors.hpp"

namespace stratosar::conic {

namespace {

std::mutex& registry_mutex() {
    static std::mutex mtx;
    return mtx;
}

std::map<std::string, BackendFn>& registry() {
    static std::map<std::string, BackendFn> backends;
    return backends;
}

void ensure_builtin() {
    auto& backends = registry();
    if (backends.find("hsd") == backends.end()) {
        backends.emplace("hsd", detail::solve_hsd);
    }
    if (backends.find("pd-dense") == backends.end()) {
        backends.emplace("pd-dense", detail::solve_pd_dense);
    }
}

}  // namespace

const char* to_string(SolveStatus status) {
    switch (status) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::infeasible: return "infeasible";
        case SolveStatus::unbounded: return "unbounded";
        case SolveStatus::numerical_limit: return "numerical_limit";
    }
    return "numerical_limit";
}

void register_backend(const std::string& name, BackendFn backend) {
    if (name.empty()) throw ConfigError("backend name must be non-empty");
    if (!backend) throw ConfigError("backend function must be callable");
    std::lock_guard<std::mutex> lock(registry_mutex());
    ensure_builtin();
    registry()[name] = std::move(backend);
}

std::vector<std::string> backend_names() {
    std::lock_guard<std::mutex> lock(registry_mutex());
    ensure_builtin();
    std::vector<std::string> names;
    names.reserve(registry().size());
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

SolveResult solve(const ConvexProgram& program, const SolverSettings& settings) {
    BackendFn backend;
    {
        std::lock_guard<std::mutex> lock(registry_mutex());
        ensure_builtin();
        auto it = registry().find(settings.backend);
        if (it == registry().end()) {
            std::string known;
            for (const auto& [name, fn] : registry()) {
                if (!known.empty()) known += ", ";
                known += name;
            }
            throw ConfigError("unknown solver backend '" + settings.backend +
                              "' (registered: " + known + ")");
        }
        backend = it->second;
    }
    program.validate();
    SolveResult result = backend(program, settings);
    // Backends judge convergence on equilibrated data; a model with badly
    // mixed magnitudes can pass the scaled test while the recovered point
    // violates raw rows outright. Re-check optima against the original
    // program so such points never propagate as trusted solutions.
    if (settings.audit_tol > 0.0 && result.status == SolveStatus::optimal &&
        !result.primal.empty()) {
        const FeasibilityAudit audit = audit_feasibility(program, result.primal);
        result.max_residual = std::max(result.max_residual, audit.worst);
        if (audit.worst > settings.audit_tol) {
            std::ostringstream msg;
            msg.setf(std::ios::scientific);
            msg.precision(2);
            msg << "raw feasibility audit rejected the claimed optimum: "
                << audit.where << " violated by " << audit.worst
                << " (relative), tolerance " << settings.audit_tol;
            result.status = SolveStatus::numerical_limit;
            result.message = msg.str();
        }
    }
    return result;
}

}  // namespace stratosar::conic
