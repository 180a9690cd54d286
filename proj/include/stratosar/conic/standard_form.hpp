// Conversion of a ConvexProgram to the conic standard form
//
//     minimize    c'x
//     subject to  A x = b
//                 h - G x in K
//
// where K is a product of a nonnegative orthant block (first n_lp rows of G)
// followed by second-order cones of the listed dimensions.  Rotated cones are
// rewritten as plain second-order cones via the linear isometry
// (a, b, x) -> (a + b, a - b, sqrt(2) x).  Finite variable bounds become
// orthant rows; equal-bound pairs (lo == hi) become equality rows instead so
// pinned variables stay on the central path.
#pragma once

#include <Eigen/Sparse>
#include <string>
#include <vector>

#include "stratosar/conic/program.hpp"

namespace stratosar::conic {

struct StandardForm {
    Eigen::SparseMatrix<double> A;  ///< equality matrix (may have 0 rows)
    Eigen::SparseMatrix<double> G;  ///< cone matrix
    Eigen::VectorXd b;
    Eigen::VectorXd h;
    Eigen::VectorXd c;
    double obj_constant = 0.0;  ///< native objective = obj_sign*(c'x) + const
    double obj_sign = 1.0;      ///< -1 when the program maximizes
    int n_lp = 0;               ///< leading orthant rows of G
    std::vector<int> soc_dims;  ///< second-order cone sizes, in row order

    int n_vars() const { return static_cast<int>(c.size()); }
    int n_eq() const { return static_cast<int>(b.size()); }
    int n_cone() const { return static_cast<int>(h.size()); }

    /// Native-sense objective value at a primal point.
    double objective_at(const Eigen::VectorXd& x) const;
};

/// Converts a validated program.  Guarantees at least one cone row by adding
/// a vacuous orthant row when the program has none.
StandardForm to_standard_form(const ConvexProgram& program);

}  // namespace stratosar::conic
