#include "stratosar/conic/program.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "stratosar/errors.hpp"

namespace stratosar::conic {

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%a", v);
    return buf;
}

double parse_double(const std::string& token, const char* context) {
    char* end = nullptr;
    double v = std::strtod(token.c_str(), &end);
    if (end == nullptr || *end != '\0') {
        throw ConfigError(std::string("malformed number '") + token + "' in " +
                          context);
    }
    return v;
}

long parse_int(const std::string& token, const char* context) {
    char* end = nullptr;
    long v = std::strtol(token.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') {
        throw ConfigError(std::string("malformed integer '") + token +
                          "' in " + context);
    }
    return v;
}

void write_expr(std::ostringstream& out, const LinExpr& expr) {
    out << ' ' << format_double(expr.constant()) << ' ' << expr.terms().size();
    for (const LinTerm& t : expr.terms()) {
        out << ' ' << t.var << ' ' << format_double(t.coeff);
    }
}

class TokenReader {
public:
    explicit TokenReader(const std::string& text) : in_(text) {}

    std::string next(const char* context) {
        std::string token;
        if (!(in_ >> token)) {
            throw ConfigError(std::string("unexpected end of program dump in ") +
                              context);
        }
        return token;
    }

    void expect(const char* literal) {
        std::string token = next(literal);
        if (token != literal) {
            throw ConfigError(std::string("expected '") + literal + "' but found '" +
                              token + "' in program dump");
        }
    }

    bool done() {
        std::string token;
        return !(in_ >> token);
    }

private:
    std::istringstream in_;
};

LinExpr read_expr(TokenReader& reader, const char* context) {
    LinExpr expr(parse_double(reader.next(context), context));
    long n_terms = parse_int(reader.next(context), context);
    if (n_terms < 0) throw ConfigError("negative term count in program dump");
    for (long i = 0; i < n_terms; ++i) {
        long var = parse_int(reader.next(context), context);
        double coeff = parse_double(reader.next(context), context);
        expr += LinExpr::term(VarId{static_cast<int>(var)}, coeff);
    }
    return expr;
}

VarRole role_from_string(const std::string& s) {
    if (s == "altitude") return VarRole::altitude;
    if (s == "power") return VarRole::power;
    if (s == "energy") return VarRole::energy;
    if (s == "slack") return VarRole::slack;
    if (s == "aux") return VarRole::aux;
    throw ConfigError("unknown variable role '" + s + "' in program dump");
}

RowKind kind_from_string(const std::string& s) {
    if (s == "eq") return RowKind::equality;
    if (s == "le") return RowKind::inequality;
    if (s == "soc") return RowKind::soc;
    if (s == "rsoc") return RowKind::rsoc;
    throw ConfigError("unknown row kind '" + s + "' in program dump");
}

void check_expr(const LinExpr& expr, std::size_t n_vars, const char* where) {
    for (const LinTerm& t : expr.terms()) {
        if (t.var < 0 || static_cast<std::size_t>(t.var) >= n_vars) {
            throw LogicError(std::string(where) +
                             " references unknown variable index " +
                             std::to_string(t.var));
        }
    }
}

}  // namespace

const char* to_string(VarRole role) {
    switch (role) {
        case VarRole::altitude: return "altitude";
        case VarRole::power: return "power";
        case VarRole::energy: return "energy";
        case VarRole::slack: return "slack";
        case VarRole::aux: return "aux";
    }
    return "aux";
}

const char* to_string(RowKind kind) {
    switch (kind) {
        case RowKind::equality: return "eq";
        case RowKind::inequality: return "le";
        case RowKind::soc: return "soc";
        case RowKind::rsoc: return "rsoc";
    }
    return "eq";
}

LinExpr LinExpr::term(VarId v, double coeff) {
    LinExpr expr;
    expr.terms_.push_back({v.index, coeff});
    return expr;
}

LinExpr& LinExpr::operator+=(const LinExpr& other) {
    constant_ += other.constant_;
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
}

LinExpr& LinExpr::operator-=(const LinExpr& other) {
    constant_ -= other.constant_;
    for (const LinTerm& t : other.terms_) terms_.push_back({t.var, -t.coeff});
    return *this;
}

LinExpr& LinExpr::operator*=(double factor) {
    constant_ *= factor;
    for (LinTerm& t : terms_) t.coeff *= factor;
    return *this;
}

void LinExpr::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const LinTerm& a, const LinTerm& b) { return a.var < b.var; });
    std::vector<LinTerm> merged;
    merged.reserve(terms_.size());
    for (const LinTerm& t : terms_) {
        if (!merged.empty() && merged.back().var == t.var) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(t);
        }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const LinTerm& t) { return t.coeff == 0.0; }),
                 merged.end());
    terms_ = std::move(merged);
}

double LinExpr::value(const std::vector<double>& x) const {
    double v = constant_;
    for (const LinTerm& t : terms_) {
        if (t.var < 0 || static_cast<std::size_t>(t.var) >= x.size()) {
            throw LogicError("expression evaluated against a shorter point");
        }
        v += t.coeff * x[static_cast<std::size_t>(t.var)];
    }
    return v;
}

VarId ConvexProgram::add_variable(const std::string& name, double lo, double hi,
                                  VarRole role) {
    if (name.empty()) throw LogicError("variable name must be non-empty");
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            throw LogicError("variable name '" + name + "' contains whitespace");
        }
    }
    for (const Variable& v : variables_) {
        if (v.name == name) {
            throw LogicError("duplicate variable name '" + name + "'");
        }
    }
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
        throw LogicError("variable '" + name + "' has an empty bound box");
    }
    variables_.push_back({name, lo, hi, role});
    return VarId{static_cast<int>(variables_.size()) - 1};
}

void ConvexProgram::set_bounds(VarId v, double lo, double hi) {
    if (!v.valid() || static_cast<std::size_t>(v.index) >= variables_.size()) {
        throw LogicError("set_bounds on unknown variable");
    }
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
        throw LogicError("set_bounds would make variable '" +
                         variables_[static_cast<std::size_t>(v.index)].name +
                         "' infeasible");
    }
    variables_[static_cast<std::size_t>(v.index)].lo = lo;
    variables_[static_cast<std::size_t>(v.index)].hi = hi;
}

void ConvexProgram::set_objective(LinExpr objective, bool maximize) {
    objective.normalize();
    objective_ = std::move(objective);
    maximize_ = maximize;
}

int ConvexProgram::add_equality(LinExpr expr, const std::string& tag) {
    expr.normalize();
    rows_.push_back({RowKind::equality, {std::move(expr)}, tag});
    return static_cast<int>(rows_.size()) - 1;
}

int ConvexProgram::add_inequality(LinExpr expr, const std::string& tag) {
    expr.normalize();
    rows_.push_back({RowKind::inequality, {std::move(expr)}, tag});
    return static_cast<int>(rows_.size()) - 1;
}

int ConvexProgram::add_soc(std::vector<LinExpr> exprs, const std::string& tag) {
    if (exprs.size() < 2) {
        throw LogicError("second-order cone row needs at least two expressions");
    }
    for (LinExpr& e : exprs) e.normalize();
    rows_.push_back({RowKind::soc, std::move(exprs), tag});
    return static_cast<int>(rows_.size()) - 1;
}

int ConvexProgram::add_rsoc(std::vector<LinExpr> exprs, const std::string& tag) {
    if (exprs.size() < 3) {
        throw LogicError("rotated cone row needs at least three expressions");
    }
    for (LinExpr& e : exprs) e.normalize();
    rows_.push_back({RowKind::rsoc, std::move(exprs), tag});
    return static_cast<int>(rows_.size()) - 1;
}

std::size_t ConvexProgram::count_role(VarRole role) const {
    std::size_t count = 0;
    for (const Variable& v : variables_) {
        if (v.role == role) ++count;
    }
    return count;
}

void ConvexProgram::validate() const {
    std::unordered_set<std::string> names;
    for (const Variable& v : variables_) {
        if (!names.insert(v.name).second) {
            throw LogicError("duplicate variable name '" + v.name + "'");
        }
        if (std::isnan(v.lo) || std::isnan(v.hi) || v.lo > v.hi) {
            throw LogicError("variable '" + v.name + "' has an empty bound box");
        }
    }
    check_expr(objective_, variables_.size(), "objective");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Row& row = rows_[i];
        std::string where = "row " + std::to_string(i) +
                            (row.tag.empty() ? "" : " (" + row.tag + ")");
        if (row.exprs.empty()) throw LogicError(where + " has no expressions");
        if ((row.kind == RowKind::equality || row.kind == RowKind::inequality) &&
            row.exprs.size() != 1) {
            throw LogicError(where + " affine rows carry exactly one expression");
        }
        if (row.kind == RowKind::soc && row.exprs.size() < 2) {
            throw LogicError(where + " cone needs at least two expressions");
        }
        if (row.kind == RowKind::rsoc && row.exprs.size() < 3) {
            throw LogicError(where + " rotated cone needs at least three expressions");
        }
        for (const LinExpr& e : row.exprs) {
            check_expr(e, variables_.size(), where.c_str());
        }
    }
}

std::string ConvexProgram::dump() const {
    std::ostringstream out;
    out << "stratosar-conic-program v1\n";
    out << "vars " << variables_.size() << '\n';
    for (std::size_t i = 0; i < variables_.size(); ++i) {
        const Variable& v = variables_[i];
        out << "v " << i << ' ' << to_string(v.role) << ' '
            << format_double(v.lo) << ' ' << format_double(v.hi) << ' '
            << v.name << '\n';
    }
    out << "objective " << (maximize_ ? "max" : "min");
    write_expr(out, objective_);
    out << '\n';
    out << "rows " << rows_.size() << '\n';
    for (const Row& row : rows_) {
        std::string tag = row.tag.empty() ? "-" : row.tag;
        std::replace_if(
            tag.begin(), tag.end(),
            [](char c) { return std::isspace(static_cast<unsigned char>(c)); },
            '_');
        out << "r " << to_string(row.kind) << ' ' << tag << ' '
            << row.exprs.size();
        for (const LinExpr& e : row.exprs) write_expr(out, e);
        out << '\n';
    }
    out << "end\n";
    return out.str();
}

ConvexProgram ConvexProgram::parse(const std::string& text) {
    TokenReader reader(text);
    reader.expect("stratosar-conic-program");
    reader.expect("v1");
    reader.expect("vars");
    long n_vars = parse_int(reader.next("vars"), "variable count");
    ConvexProgram program;
    for (long i = 0; i < n_vars; ++i) {
        reader.expect("v");
        long index = parse_int(reader.next("variable"), "variable index");
        if (index != i) throw ConfigError("variable indices out of order in dump");
        VarRole role = role_from_string(reader.next("variable role"));
        double lo = parse_double(reader.next("variable bound"), "variable bound");
        double hi = parse_double(reader.next("variable bound"), "variable bound");
        std::string name = reader.next("variable name");
        program.add_variable(name, lo, hi, role);
    }
    reader.expect("objective");
    std::string sense = reader.next("objective sense");
    if (sense != "min" && sense != "max") {
        throw ConfigError("objective sense must be min or max, got '" + sense + "'");
    }
    LinExpr objective = read_expr(reader, "objective");
    program.set_objective(std::move(objective), sense == "max");
    reader.expect("rows");
    long n_rows = parse_int(reader.next("rows"), "row count");
    for (long i = 0; i < n_rows; ++i) {
        reader.expect("r");
        RowKind kind = kind_from_string(reader.next("row kind"));
        std::string tag = reader.next("row tag");
        if (tag == "-") tag.clear();
        long n_exprs = parse_int(reader.next("row"), "row expression count");
        std::vector<LinExpr> exprs;
        exprs.reserve(static_cast<std::size_t>(n_exprs));
        for (long j = 0; j < n_exprs; ++j) {
            exprs.push_back(read_expr(reader, "row expression"));
        }
        switch (kind) {
            case RowKind::equality:
                if (exprs.size() != 1) throw ConfigError("equality row arity");
                program.add_equality(std::move(exprs[0]), tag);
                break;
            case RowKind::inequality:
                if (exprs.size() != 1) throw ConfigError("inequality row arity");
                program.add_inequality(std::move(exprs[0]), tag);
                break;
            case RowKind::soc:
                program.add_soc(std::move(exprs), tag);
                break;
            case RowKind::rsoc:
                program.add_rsoc(std::move(exprs), tag);
                break;
        }
    }
    reader.expect("end");
    if (!reader.done()) {
        throw ConfigError("trailing tokens after program dump end marker");
    }
    program.validate();
    return program;
}

int add_rotated_cone(ConvexProgram& program, LinExpr a, LinExpr b,
                     std::vector<LinExpr> xs, const std::string& tag) {
    std::vector<LinExpr> exprs;
    exprs.reserve(xs.size() + 2);
    exprs.push_back(std::move(a));
    exprs.push_back(std::move(b));
    for (LinExpr& x : xs) exprs.push_back(std::move(x));
    return program.add_rsoc(std::move(exprs), tag);
}

std::array<int, 3> lower_psd2(ConvexProgram& program, LinExpr m11, LinExpr m12,
                              LinExpr m22, const std::string& tag) {
    // [[m11, m12],[m12, m22]] is PSD iff m11 >= 0, m22 >= 0, m11*m22 >= m12^2.
    int r0 = program.add_inequality(-m11, tag + "/diag1");
    int r1 = program.add_inequality(-m22, tag + "/diag2");
    // 2*(m11/2)*m22 >= m12^2.
    int r2 = add_rotated_cone(program, 0.5 * m11, std::move(m22),
                              {std::move(m12)}, tag + "/det");
    return {r0, r1, r2};
}

namespace {

/// abs-magnitude of the evaluated expression: |c| + sum |a_i x_i|.
double expr_magnitude(const LinExpr& e, const std::vector<double>& x) {
    double mag = std::abs(e.constant());
    for (const LinTerm& t : e.terms())
        mag += std::abs(t.coeff * x[static_cast<std::size_t>(t.var)]);
    return mag;
}

}  // namespace

FeasibilityAudit audit_feasibility(const ConvexProgram& program,
                                   const std::vector<double>& x) {
    if (x.size() != program.variables().size())
        throw LogicError("audit point does not match the variable count");
    FeasibilityAudit out;
    auto record = [&out](double viol, double scale, const std::string& where) {
        const double rel = viol / std::max(1.0, scale);
        if (rel > out.worst) {
            out.worst = rel;
            out.where = where;
        }
    };

    const auto& vars = program.variables();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const Variable& v = vars[i];
        if (std::isfinite(v.lo))
            record(v.lo - x[i], std::abs(v.lo), "bound:" + v.name);
        if (std::isfinite(v.hi))
            record(x[i] - v.hi, std::abs(v.hi), "bound:" + v.name);
    }

    for (const Row& row : program.rows()) {
        switch (row.kind) {
            case RowKind::equality: {
                const double val = row.exprs[0].value(x);
                record(std::abs(val), expr_magnitude(row.exprs[0], x), row.tag);
                break;
            }
            case RowKind::inequality: {
                const double val = row.exprs[0].value(x);
                record(val, expr_magnitude(row.exprs[0], x), row.tag);
                break;
            }
            case RowKind::soc: {
                const double head = row.exprs[0].value(x);
                double sq = 0.0;
                for (std::size_t i = 1; i < row.exprs.size(); ++i) {
                    const double v = row.exprs[i].value(x);
                    sq += v * v;
                }
                const double tail = std::sqrt(sq);
                record(tail - head, std::abs(head) + tail, row.tag);
                break;
            }
            case RowKind::rsoc: {
                const double a = row.exprs[0].value(x);
                const double b = row.exprs[1].value(x);
                double sq = 0.0;
                for (std::size_t i = 2; i < row.exprs.size(); ++i) {
                    const double v = row.exprs[i].value(x);
                    sq += v * v;
                }
                record(-a, expr_magnitude(row.exprs[0], x), row.tag);
                record(-b, expr_magnitude(row.exprs[1], x), row.tag);
                record(sq - 2.0 * a * b, 2.0 * std::abs(a * b) + sq, row.tag);
                break;
            }
        }
    }
    return out;
}

}  // namespace stratosar::conic
