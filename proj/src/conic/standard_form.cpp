#include "stratosar/conic/standard_form.hpp"

#include <cmath>
#include <limits>

#include "stratosar/errors.hpp"

namespace stratosar::conic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const double kSqrt2 = std::sqrt(2.0);

struct TripletBuilder {
    std::vector<Eigen::Triplet<double>> entries;
    std::vector<double> rhs;

    int add_row(const LinExpr& expr, double scale) {
        int row = static_cast<int>(rhs.size());
        for (const LinTerm& t : expr.terms()) {
            entries.emplace_back(row, t.var, scale * t.coeff);
        }
        rhs.push_back(-scale * expr.constant());
        return row;
    }
};

}  // namespace

double StandardForm::objective_at(const Eigen::VectorXd& x) const {
    return obj_sign * c.dot(x) + obj_constant;
}

StandardForm to_standard_form(const ConvexProgram& program) {
    program.validate();
    const int n = static_cast<int>(program.variables().size());

    StandardForm sf;
    sf.obj_sign = program.maximize() ? -1.0 : 1.0;
    sf.obj_constant = program.objective().constant();
    sf.c = Eigen::VectorXd::Zero(n);
    for (const LinTerm& t : program.objective().terms()) {
        // minimize obj_sign * objective; the constant stays outside, so the
        // native value is obj_sign*(c'x) + obj_constant.
        sf.c[t.var] += sf.obj_sign * t.coeff;
    }

    TripletBuilder eq;
    TripletBuilder lp;

    // Bounds first: equal bounds pin the variable through an equality row,
    // finite one-sided bounds become orthant rows  h - Gx >= 0.
    for (int i = 0; i < n; ++i) {
        const Variable& v = program.variables()[static_cast<std::size_t>(i)];
        if (std::isfinite(v.lo) && std::isfinite(v.hi) && v.lo == v.hi) {
            LinExpr pin = LinExpr::term(VarId{i}, 1.0) - LinExpr(v.lo);
            pin.normalize();
            eq.add_row(pin, 1.0);
            continue;
        }
        if (std::isfinite(v.lo)) {
            // lo - x <= 0  ->  Gx = -x, h = -lo.
            LinExpr e = LinExpr(v.lo) - LinExpr::term(VarId{i}, 1.0);
            e.normalize();
            lp.add_row(e, 1.0);
        }
        if (std::isfinite(v.hi)) {
            LinExpr e = LinExpr::term(VarId{i}, 1.0) - LinExpr(v.hi);
            e.normalize();
            lp.add_row(e, 1.0);
        }
    }

    for (const Row& row : program.rows()) {
        switch (row.kind) {
            case RowKind::equality:
                eq.add_row(row.exprs[0], 1.0);
                break;
            case RowKind::inequality:
                lp.add_row(row.exprs[0], 1.0);
                break;
            default:
                break;
        }
    }

    sf.n_lp = static_cast<int>(lp.rhs.size());
    if (sf.n_lp == 0) {
        bool has_cone = false;
        for (const Row& row : program.rows()) {
            if (row.kind == RowKind::soc || row.kind == RowKind::rsoc) {
                has_cone = true;
                break;
            }
        }
        if (!has_cone) {
            // Keep the interior-point iteration well-posed: 0 <= 1.
            lp.rhs.push_back(1.0);
            sf.n_lp = 1;
        }
    }

    // Cone rows follow the orthant block.  For h - Gx in SOC we need
    // (h - Gx)_0 >= ||(h - Gx)_1..||, so G rows carry the negated
    // coefficients and h the constants.
    for (const Row& row : program.rows()) {
        if (row.kind == RowKind::soc) {
            for (const LinExpr& e : row.exprs) lp.add_row(e, -1.0);
            sf.soc_dims.push_back(static_cast<int>(row.exprs.size()));
        } else if (row.kind == RowKind::rsoc) {
            // (a, b, x) with 2ab >= ||x||^2  ->  (a+b, a-b, sqrt(2) x) in SOC.
            const LinExpr& a = row.exprs[0];
            const LinExpr& b = row.exprs[1];
            LinExpr top = a + b;
            top.normalize();
            LinExpr second = a - b;
            second.normalize();
            lp.add_row(top, -1.0);
            lp.add_row(second, -1.0);
            for (std::size_t i = 2; i < row.exprs.size(); ++i) {
                LinExpr scaled = kSqrt2 * row.exprs[i];
                scaled.normalize();
                lp.add_row(scaled, -1.0);
            }
            sf.soc_dims.push_back(static_cast<int>(row.exprs.size()));
        }
    }

    const int n_eq = static_cast<int>(eq.rhs.size());
    const int n_cone = static_cast<int>(lp.rhs.size());

    sf.A.resize(n_eq, n);
    sf.A.setFromTriplets(eq.entries.begin(), eq.entries.end());
    sf.A.makeCompressed();
    sf.b = Eigen::Map<Eigen::VectorXd>(eq.rhs.data(), n_eq);

    sf.G.resize(n_cone, n);
    sf.G.setFromTriplets(lp.entries.begin(), lp.entries.end());
    sf.G.makeCompressed();
    sf.h = Eigen::Map<Eigen::VectorXd>(lp.rhs.data(), n_cone);

    return sf;
}

}  // namespace stratosar::conic
