// Solver-agnostic conic-program representation.
//
// A program holds a variable registry (name, bounds, role tag), one affine
// objective, and a list of rows: affine equalities/inequalities, second-order
// cones, and rotated second-order cones.  Backends consume programs through
// a standard-form conversion; 2x2 PSD conditions enter as rotated cones via
// lower_psd2.
#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace stratosar::conic {

/// Lightweight variable handle (index into the program's registry).
struct VarId {
    int index = -1;
    bool valid() const { return index >= 0; }
};

/// Coarse variable classification used by diagnostics and size accounting.
enum class VarRole { altitude, power, energy, slack, aux };

const char* to_string(VarRole role);

/// One linear term coeff * var.
struct LinTerm {
    int var = -1;
    double coeff = 0.0;
};

/// Affine expression constant + sum coeff_i * var_i.
class LinExpr {
public:
    LinExpr() = default;
    LinExpr(double constant) : constant_(constant) {}  // NOLINT(runtime/explicit)
    LinExpr(VarId v) { terms_.push_back({v.index, 1.0}); }  // NOLINT

    static LinExpr term(VarId v, double coeff);

    LinExpr& operator+=(const LinExpr& other);
    LinExpr& operator-=(const LinExpr& other);
    LinExpr& operator*=(double factor);

    friend LinExpr operator+(LinExpr lhs, const LinExpr& rhs) { return lhs += rhs; }
    friend LinExpr operator-(LinExpr lhs, const LinExpr& rhs) { return lhs -= rhs; }
    friend LinExpr operator*(LinExpr expr, double factor) { return expr *= factor; }
    friend LinExpr operator*(double factor, LinExpr expr) { return expr *= factor; }
    friend LinExpr operator-(LinExpr expr) { return expr *= -1.0; }

    double constant() const { return constant_; }
    const std::vector<LinTerm>& terms() const { return terms_; }

    /// Merges duplicate variables, drops zero coefficients, sorts by index.
    void normalize();

    /// Evaluates the expression at a primal point (indexed by variable).
    double value(const std::vector<double>& x) const;

private:
    double constant_ = 0.0;
    std::vector<LinTerm> terms_;
};

enum class RowKind {
    equality,    ///< expr == 0
    inequality,  ///< expr <= 0
    soc,         ///< exprs[0] >= || (exprs[1], ..., exprs[k]) ||_2
    rsoc         ///< 2*exprs[0]*exprs[1] >= sum exprs[2..]^2, exprs[0,1] >= 0
};

const char* to_string(RowKind kind);

struct Row {
    RowKind kind = RowKind::equality;
    std::vector<LinExpr> exprs;
    std::string tag;  ///< provenance label (constraint family, slot/sweep)
};

struct Variable {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    VarRole role = VarRole::aux;
};

class ConvexProgram {
public:
    /// Registers a variable with box bounds (use +-infinity for free sides).
    /// Names must be unique, non-empty, and whitespace-free.
    VarId add_variable(const std::string& name, double lo, double hi,
                       VarRole role);

    void set_bounds(VarId v, double lo, double hi);

    /// Sets the affine objective; maximize = false means minimize.
    void set_objective(LinExpr objective, bool maximize);

    /// expr == 0. Returns the row index.
    int add_equality(LinExpr expr, const std::string& tag);
    /// expr <= 0. Returns the row index.
    int add_inequality(LinExpr expr, const std::string& tag);
    /// exprs[0] >= ||exprs[1..]||. Returns the row index.
    int add_soc(std::vector<LinExpr> exprs, const std::string& tag);
    /// Raw rotated-cone row (prefer the add_rotated_cone free function).
    int add_rsoc(std::vector<LinExpr> exprs, const std::string& tag);

    const std::vector<Variable>& variables() const { return variables_; }
    const std::vector<Row>& rows() const { return rows_; }
    const LinExpr& objective() const { return objective_; }
    bool maximize() const { return maximize_; }

    std::size_t count_role(VarRole role) const;

    /// Throws LogicError when a row or the objective references an unknown
    /// variable, a bound pair is inverted, or a cone row is malformed.
    void validate() const;

    /// Canonical text serialization (hexfloat, bit-exact round-trip).
    std::string dump() const;
    static ConvexProgram parse(const std::string& text);

private:
    std::vector<Variable> variables_;
    std::vector<Row> rows_;
    LinExpr objective_;
    bool maximize_ = false;
};

/// Adds the rotated second-order cone 2*a*b >= sum x_i^2 (a, b >= 0 implied
/// by the cone). Returns the row index.
int add_rotated_cone(ConvexProgram& program, LinExpr a, LinExpr b,
                     std::vector<LinExpr> xs, const std::string& tag);

/// Encodes [[m11, m12], [m12, m22]] >= 0 (PSD) as m11 >= 0, m22 >= 0 and the
/// rotated cone m11*m22 >= m12^2. Returns the three row indices.
std::array<int, 3> lower_psd2(ConvexProgram& program, LinExpr m11, LinExpr m12,
                              LinExpr m22, const std::string& tag);

/// Worst raw-space violation of the program's rows and variable bounds at a
/// candidate point, each measured relative to the magnitude of the terms
/// forming it (floored at one); `where` names the offending row tag or
/// variable. Feasible points report zero. Backends judge convergence on
/// scaled data, so results should be re-checked with this audit before a
/// claimed optimum is trusted.
struct FeasibilityAudit {
    double worst = 0.0;
    std::string where;
};

FeasibilityAudit audit_feasibility(const ConvexProgram& program,
                                   const std::vector<double>& x);

}  // namespace stratosar::conic
