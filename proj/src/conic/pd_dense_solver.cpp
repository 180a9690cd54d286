// Dense infeasible-start primal-dual interior-point backend with a Mehrotra
// predictor-corrector and Nesterov-Todd scaling.  Unlike the homogeneous
// self-dual backend it iterates directly on (x, y, z, s) from a unit cone
// start, factors the KKT system with dense partial-pivot LU, and reports
// numerical_limit instead of certificates when it cannot make progress.
// It exists as an independent cross-check of the sparse backend.
#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>

#include "backends.hpp"
#include "cone_utils.hpp"
#include "stratosar/conic/standard_form.hpp"

namespace stratosar::conic::detail {

namespace {

constexpr double kReg = 1e-10;       // static KKT regularization
constexpr double kFraction = 0.99;   // fraction-to-boundary
constexpr double kStepStall = 1e-9;  // below this the method has stalled

}  // namespace

SolveResult solve_pd_dense(const ConvexProgram& program,
                           const SolverSettings& settings) {
    const auto t_start = std::chrono::steady_clock::now();
    SolveResult result;
    const StandardForm sf = to_standard_form(program);
    const int n = sf.n_vars();
    const int p = sf.n_eq();
    const int m = sf.n_cone();
    if (n == 0) {
        result.status = SolveStatus::optimal;
        result.objective_value = sf.obj_constant;
        result.message = "empty program";
        return result;
    }

    const ConeLayout layout = ConeLayout::make(sf);
    const Eigen::MatrixXd A = Eigen::MatrixXd(sf.A);
    const Eigen::MatrixXd G = Eigen::MatrixXd(sf.G);
    const Eigen::VectorXd e = cone_identity(layout);

    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd y = Eigen::VectorXd::Zero(p);
    Eigen::VectorXd z = e;
    Eigen::VectorXd s = e;

    NTScaling scaling(layout);

    const int nn = n + p + m;
    Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(nn, nn);
    kkt.block(0, n, n, p) = A.transpose();
    kkt.block(n, 0, p, n) = A;
    kkt.block(0, n + p, n, m) = G.transpose();
    kkt.block(n + p, 0, m, n) = G;
    kkt.topLeftCorner(n, n).diagonal().setConstant(kReg);
    kkt.block(n, n, p, p).diagonal().setConstant(-kReg);

    const double b_scale = 1.0 + sf.b.norm();
    const double h_scale = 1.0 + sf.h.norm();
    const double c_scale = 1.0 + sf.c.norm();

    SolveStatus status = SolveStatus::numerical_limit;
    std::string message = "iteration limit reached";
    double pres = 0.0, dres = 0.0;
    int iter = 0;
    for (; iter <= settings.max_iterations; ++iter) {
        const Eigen::VectorXd rd = A.transpose() * y + G.transpose() * z + sf.c;
        const Eigen::VectorXd rp = A * x - sf.b;
        const Eigen::VectorXd rg = G * x + s - sf.h;
        const double gap = s.dot(z);
        const double mu = gap / layout.degree();
        const double pcost = sf.c.dot(x);

        pres = std::max(rp.norm() / b_scale, rg.norm() / h_scale);
        dres = rd.norm() / c_scale;
        const double gap_rel = gap / std::max(1.0, std::abs(pcost));
        if (settings.verbose) {
            std::ostringstream line;
            line.setf(std::ios::scientific);
            line.precision(3);
            line << "pd-dense iter " << iter << ": pcost=" << pcost
                 << " gap=" << gap << " pres=" << pres << " dres=" << dres;
            std::cerr << line.str() << '\n';
        }
        if (pres < settings.feas_tol && dres < settings.feas_tol &&
            (gap < settings.gap_tol || gap_rel < settings.gap_tol)) {
            status = SolveStatus::optimal;
            message = "optimal";
            break;
        }
        if (iter == settings.max_iterations) break;

        if (!scaling.update(s, z)) {
            message = "iterates left the cone interior";
            break;
        }

        // Refresh the scaled block -W^2.
        kkt.block(n + p, n + p, m, m).setZero();
        for (int i = 0; i < layout.n_lp; ++i) {
            kkt(n + p + i, n + p + i) = -scaling.lp_wsq(i) - kReg;
        }
        for (std::size_t k = 0; k < layout.dims.size(); ++k) {
            const int off = n + p + layout.starts[k];
            const int d = layout.dims[k];
            kkt.block(off, off, d, d) = -scaling.soc_wsq(k);
            kkt.block(off, off, d, d).diagonal().array() -= kReg;
        }
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(kkt);

        const Eigen::VectorXd& lambda = scaling.lambda();
        auto solve_step = [&](const Eigen::VectorXd& d_comp,
                              Eigen::VectorXd& dx, Eigen::VectorXd& dy,
                              Eigen::VectorXd& dz, Eigen::VectorXd& ds) {
            const Eigen::VectorXd lam_inv =
                conic_division(layout, lambda, d_comp);
            Eigen::VectorXd rhs(nn);
            rhs.head(n) = -rd;
            rhs.segment(n, p) = -rp;
            rhs.tail(m) = -rg - scaling.apply(lam_inv);
            Eigen::VectorXd sol = lu.solve(rhs);
            // One refinement pass against the factored matrix.
            sol += lu.solve(rhs - kkt * sol);
            dx = sol.head(n);
            dy = sol.segment(n, p);
            dz = sol.tail(m);
            ds = scaling.apply(lam_inv - scaling.apply(dz));
        };

        // Predictor.
        Eigen::VectorXd d_comp = -conic_product(layout, lambda, lambda);
        Eigen::VectorXd dx, dy, dz, ds;
        solve_step(d_comp, dx, dy, dz, ds);
        const double alpha_aff =
            std::min({max_step_to_boundary(layout, s, ds),
                      max_step_to_boundary(layout, z, dz), 1.0});
        const double gap_aff =
            (s + alpha_aff * ds).dot(z + alpha_aff * dz);
        double sigma = gap > 0.0 ? std::pow(gap_aff / gap, 3) : 1.0;
        sigma = std::clamp(sigma, 0.0, 1.0);

        // Corrector.
        d_comp -= conic_product(layout, scaling.apply_inverse(ds),
                                scaling.apply(dz));
        d_comp += sigma * mu * e;
        solve_step(d_comp, dx, dy, dz, ds);

        double alpha = kFraction * std::min({max_step_to_boundary(layout, s, ds),
                                             max_step_to_boundary(layout, z, dz)});
        alpha = std::min(alpha, 1.0);
        if (alpha < kStepStall) {
            message = "step size collapsed (possibly infeasible)";
            break;
        }
        x += alpha * dx;
        y += alpha * dy;
        z += alpha * dz;
        s += alpha * ds;
    }

    result.status = status;
    result.message = message;
    result.iterations = iter;
    result.max_residual = std::max(pres, dres);
    if (status == SolveStatus::optimal) {
        result.primal.assign(x.data(), x.data() + n);
        result.objective_value = sf.objective_at(x);
    }
    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      t_start)
            .count();
    return result;
}

}  // namespace stratosar::conic::detail
