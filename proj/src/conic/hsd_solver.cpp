// Sparse interior-point backend based on the homogeneous self-dual
// embedding with Nesterov-Todd scaling and a Mehrotra predictor-corrector,
// solving  min c'x  s.t.  Ax = b,  h - Gx in K  (orthant x second-order
// cones).  Infeasibility and unboundedness are reported through the
// embedding certificates (tau/kappa).
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <vector>

#include "backends.hpp"
#include "cone_utils.hpp"
#include "stratosar/conic/standard_form.hpp"
#include "stratosar/errors.hpp"

namespace stratosar::conic::detail {

namespace {

constexpr double kDeltaStat = 7e-8;   // static KKT regularization
constexpr double kLinsysAcc = 1e-14;  // KKT refinement target (relative)
constexpr int kMaxRefine = 9;
constexpr double kGammaStep = 0.99;  // fraction-to-boundary scaling
constexpr double kStepMin = 1e-6;
constexpr double kStepMax = 0.999;
constexpr double kSigmaMin = 1e-4;
constexpr double kSigmaMax = 0.9999;
constexpr double kSafeguard = 500.0;  // primal-residual blow-up guard
constexpr double kFeastolInacc = 1e-4;
constexpr double kAbstolInacc = 5e-5;
constexpr double kReltolInacc = 5e-5;
constexpr double kEquilTol = 1e-6;
constexpr int kEquilIters = 3;

double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

class HsdSolver {
public:
    HsdSolver(StandardForm sf, const SolverSettings& settings,
              const ConvexProgram* program)
        : sf_(std::move(sf)),
          settings_(settings),
          program_(program),
          layout_(ConeLayout::make(sf_)),
          scaling_(layout_),
          n_(sf_.n_vars()),
          p_(sf_.n_eq()),
          m_(sf_.n_cone()) {}

    SolveResult run() {
        const auto t_start = std::chrono::steady_clock::now();
        SolveResult result;
        equilibrate();
        resx0_ = std::max(1.0, sf_.c.norm());
        resy0_ = std::max(1.0, sf_.b.norm());
        resz0_ = std::max(1.0, sf_.h.norm());
        e_cone_ = cone_identity(layout_);
        build_kkt();

        std::string failure;
        if (!initialize(&failure)) {
            result.status = SolveStatus::numerical_limit;
            result.message = "initialization failed: " + failure;
            result.wall_time_s = elapsed(t_start);
            return result;
        }

        SolveStatus status = SolveStatus::numerical_limit;
        std::string message = "iteration limit reached";
        double pres_prev = std::numeric_limits<double>::infinity();
        double best_score = std::numeric_limits<double>::infinity();
        save_best();

        int iter = 0;
        for (;; ++iter) {
            compute_residuals();
            update_statistics();
            if (settings_.verbose) print_progress(iter);

            if (iter > 0 && (pres_ > kSafeguard * pres_prev || gap_ < 0.0)) {
                std::tie(status, message) =
                    finish_degraded("residuals diverged");
                break;
            }
            if (auto st = check_exit(false)) {
                // The scaled KKT tests dilute rows whose large terms cancel
                // (tangent hypographs); accept an optimum only once the
                // recovered point also passes the raw-space audit, otherwise
                // keep polishing -- the slack on objective-active cones
                // shrinks with mu.
                if (*st != SolveStatus::optimal || audit_ok()) {
                    status = *st;
                    message = describe(status, false);
                    break;
                }
            }
            const double score = std::max(pres_, dres_);
            if (score < best_score) {
                best_score = score;
                save_best();
            }
            if (iter >= settings_.max_iterations) {
                std::tie(status, message) =
                    finish_degraded("iteration limit reached");
                break;
            }
            pres_prev = pres_;

            if (!scaling_.update(s_, z_)) {
                std::tie(status, message) =
                    finish_degraded("slacks left the cone interior");
                break;
            }
            update_kkt_scaling();
            if (!factorize()) {
                std::tie(status, message) =
                    finish_degraded("KKT factorization failed");
                break;
            }

            // Common direction from the static right-hand side [-c; b; h].
            Eigen::VectorXd sol1 = solve_kkt(rhs_static_);
            const auto dx1 = sol1.head(n_);
            const auto dy1 = sol1.segment(n_, p_);
            const auto dz1 = sol1.tail(m_);
            const double dtau_denom = kappa_ / tau_ - sf_.c.dot(dx1) -
                                      sf_.b.dot(dy1) - sf_.h.dot(dz1);

            // Predictor (affine scaling) direction.
            Eigen::VectorXd rhs2(n_ + p_ + m_);
            rhs2.head(n_) = rx_;
            rhs2.segment(n_, p_) = -ry_;
            rhs2.tail(m_) = s_ - rz_;
            Eigen::VectorXd sol2 = solve_kkt(rhs2);
            double dtau_aff =
                (rt_ - kappa_ + sf_.c.dot(sol2.head(n_)) +
                 sf_.b.dot(sol2.segment(n_, p_)) + sf_.h.dot(sol2.tail(m_))) /
                dtau_denom;
            Eigen::VectorXd dz_aff = sol2.tail(m_) + dtau_aff * dz1;
            Eigen::VectorXd w_dz_aff = scaling_.apply(dz_aff);
            Eigen::VectorXd ds_aff_by_w = -w_dz_aff - scaling_.lambda();
            const double dkap_aff = -kappa_ - (kappa_ / tau_) * dtau_aff;

            const double alpha_aff =
                line_search(ds_aff_by_w, w_dz_aff, dtau_aff, dkap_aff);
            const double one_minus = 1.0 - alpha_aff;
            const double sigma = std::clamp(one_minus * one_minus * one_minus,
                                            kSigmaMin, kSigmaMax);

            // Corrector (combined) direction.
            Eigen::VectorXd ds_comb =
                conic_product(layout_, scaling_.lambda(), scaling_.lambda()) +
                conic_product(layout_, ds_aff_by_w, w_dz_aff) -
                sigma * mu_ * e_cone_;
            Eigen::VectorXd lam_inv_ds =
                conic_division(layout_, scaling_.lambda(), ds_comb);
            rhs2.head(n_ + p_) *= (1.0 - sigma);
            rhs2.tail(m_) = -(1.0 - sigma) * rz_ + scaling_.apply(lam_inv_ds);
            sol2 = solve_kkt(rhs2);
            const double bkap =
                kappa_ * tau_ + dkap_aff * dtau_aff - sigma * mu_;
            const double dtau =
                ((1.0 - sigma) * rt_ - bkap / tau_ + sf_.c.dot(sol2.head(n_)) +
                 sf_.b.dot(sol2.segment(n_, p_)) + sf_.h.dot(sol2.tail(m_))) /
                dtau_denom;
            Eigen::VectorXd dx = sol2.head(n_) + dtau * dx1;
            Eigen::VectorXd dy = sol2.segment(n_, p_) + dtau * dy1;
            Eigen::VectorXd dz = sol2.tail(m_) + dtau * dz1;
            Eigen::VectorXd w_dz = scaling_.apply(dz);
            Eigen::VectorXd ds_by_w = -(lam_inv_ds + w_dz);
            const double dkap = -(bkap + kappa_ * dtau) / tau_;

            double alpha =
                kGammaStep * line_search(ds_by_w, w_dz, dtau, dkap);
            alpha = std::min(alpha, kStepMax);
            if (alpha < kStepMin) {
                std::tie(status, message) =
                    finish_degraded("step size collapsed");
                break;
            }
            Eigen::VectorXd ds = scaling_.apply(ds_by_w);
            x_ += alpha * dx;
            y_ += alpha * dy;
            z_ += alpha * dz;
            s_ += alpha * ds;
            tau_ += alpha * dtau;
            kappa_ += alpha * dkap;
        }

        result.status = status;
        result.message = message;
        result.iterations = iter;
        result.max_residual = std::max(pres_, dres_);
        if (status == SolveStatus::optimal ||
            status == SolveStatus::numerical_limit) {
            result.primal.resize(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i) {
                result.primal[static_cast<std::size_t>(i)] =
                    x_[i] / (x_equil_[i] * tau_);
            }
        }
        result.wall_time_s = elapsed(t_start);
        return result;
    }

private:
    static double elapsed(std::chrono::steady_clock::time_point t0) {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
            .count();
    }

    // ---- problem scaling -------------------------------------------------

    void equilibrate() {
        // Ruiz equilibration on the augmented data [A b] / [G h]: the
        // right-hand sides join the row norms (their "column" scale is pinned
        // at one), so rows carrying large pinned values (battery energy,
        // altitudes) are damped to O(1) without drowning the small rows.
        x_equil_ = Eigen::VectorXd::Ones(n_);
        for (int sweep = 0; sweep < kEquilIters; ++sweep) {
            Eigen::VectorXd col = Eigen::VectorXd::Zero(n_);
            Eigen::VectorXd row_a = Eigen::VectorXd::Zero(p_);
            Eigen::VectorXd row_g = Eigen::VectorXd::Zero(m_);
            for (int j = 0; j < sf_.A.outerSize(); ++j) {
                for (Eigen::SparseMatrix<double>::InnerIterator it(sf_.A, j);
                     it; ++it) {
                    const double v = std::abs(it.value());
                    col[it.col()] = std::max(col[it.col()], v);
                    row_a[it.row()] = std::max(row_a[it.row()], v);
                }
            }
            for (int j = 0; j < sf_.G.outerSize(); ++j) {
                for (Eigen::SparseMatrix<double>::InnerIterator it(sf_.G, j);
                     it; ++it) {
                    const double v = std::abs(it.value());
                    col[it.col()] = std::max(col[it.col()], v);
                    row_g[it.row()] = std::max(row_g[it.row()], v);
                }
            }
            for (int i = 0; i < p_; ++i)
                row_a[i] = std::max(row_a[i], std::abs(sf_.b[i]));
            for (int i = 0; i < m_; ++i)
                row_g[i] = std::max(row_g[i], std::abs(sf_.h[i]));
            // Rows of one second-order cone must share a scale factor.
            for (std::size_t k = 0; k < layout_.dims.size(); ++k) {
                const int off = layout_.starts[k];
                const int d = layout_.dims[k];
                const double g = row_g.segment(off, d).maxCoeff();
                row_g.segment(off, d).setConstant(g);
            }
            auto to_scale = [](Eigen::VectorXd& v) {
                for (int i = 0; i < v.size(); ++i) {
                    v[i] = (v[i] < kEquilTol) ? 1.0 : std::sqrt(v[i]);
                }
            };
            to_scale(col);
            to_scale(row_a);
            to_scale(row_g);
            for (int j = 0; j < sf_.A.outerSize(); ++j) {
                for (Eigen::SparseMatrix<double>::InnerIterator it(sf_.A, j);
                     it; ++it) {
                    it.valueRef() /= row_a[it.row()] * col[it.col()];
                }
            }
            for (int j = 0; j < sf_.G.outerSize(); ++j) {
                for (Eigen::SparseMatrix<double>::InnerIterator it(sf_.G, j);
                     it; ++it) {
                    it.valueRef() /= row_g[it.row()] * col[it.col()];
                }
            }
            sf_.b = sf_.b.cwiseQuotient(row_a);
            sf_.h = sf_.h.cwiseQuotient(row_g);
            x_equil_ = x_equil_.cwiseProduct(col);
        }
        sf_.c = sf_.c.cwiseQuotient(x_equil_);
        at_ = sf_.A.transpose();
        gt_ = sf_.G.transpose();
    }

    // ---- KKT system ------------------------------------------------------

    void build_kkt() {
        const int nn = n_ + p_ + m_;
        std::vector<Eigen::Triplet<double>> trips;
        trips.reserve(static_cast<std::size_t>(nn) + sf_.A.nonZeros() +
                      sf_.G.nonZeros() + 16);
        for (int i = 0; i < n_; ++i) trips.emplace_back(i, i, kDeltaStat);
        for (int j = 0; j < sf_.A.outerSize(); ++j) {
            for (Eigen::SparseMatrix<double>::InnerIterator it(sf_.A, j); it;
                 ++it) {
                trips.emplace_back(n_ + static_cast<int>(it.row()),
                                   static_cast<int>(it.col()), it.value());
            }
        }
        for (int i = 0; i < p_; ++i) {
            trips.emplace_back(n_ + i, n_ + i, -kDeltaStat);
        }
        for (int j = 0; j < sf_.G.outerSize(); ++j) {
            for (Eigen::SparseMatrix<double>::InnerIterator it(sf_.G, j); it;
                 ++it) {
                trips.emplace_back(n_ + p_ + static_cast<int>(it.row()),
                                   static_cast<int>(it.col()), it.value());
            }
        }
        const int base = n_ + p_;
        for (int i = 0; i < layout_.n_lp; ++i) {
            trips.emplace_back(base + i, base + i, -1.0 - kDeltaStat);
        }
        for (std::size_t k = 0; k < layout_.dims.size(); ++k) {
            const int off = base + layout_.starts[k];
            const int d = layout_.dims[k];
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j <= i; ++j) {
                    trips.emplace_back(off + i, off + j,
                                       i == j ? -1.0 - kDeltaStat : 0.0);
                }
            }
        }
        kkt_.resize(nn, nn);
        kkt_.setFromTriplets(trips.begin(), trips.end());
        kkt_.makeCompressed();

        lp_ptrs_.clear();
        lp_ptrs_.reserve(static_cast<std::size_t>(layout_.n_lp));
        for (int i = 0; i < layout_.n_lp; ++i) {
            lp_ptrs_.push_back(&kkt_.coeffRef(base + i, base + i));
        }
        soc_ptrs_.clear();
        soc_ptrs_.resize(layout_.dims.size());
        for (std::size_t k = 0; k < layout_.dims.size(); ++k) {
            const int off = base + layout_.starts[k];
            const int d = layout_.dims[k];
            soc_ptrs_[k].reserve(static_cast<std::size_t>(d * (d + 1) / 2));
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j <= i; ++j) {
                    soc_ptrs_[k].push_back(&kkt_.coeffRef(off + i, off + j));
                }
            }
        }
        ldlt_.analyzePattern(kkt_);
    }

    void set_identity_scaling() {
        for (double* ptr : lp_ptrs_) *ptr = -1.0 - kDeltaStat;
        for (std::size_t k = 0; k < soc_ptrs_.size(); ++k) {
            const int d = layout_.dims[k];
            std::size_t idx = 0;
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j <= i; ++j) {
                    *soc_ptrs_[k][idx++] = (i == j) ? -1.0 - kDeltaStat : 0.0;
                }
            }
        }
    }

    void update_kkt_scaling() {
        for (int i = 0; i < layout_.n_lp; ++i) {
            *lp_ptrs_[static_cast<std::size_t>(i)] =
                -scaling_.lp_wsq(i) - kDeltaStat;
        }
        for (std::size_t k = 0; k < soc_ptrs_.size(); ++k) {
            const Eigen::MatrixXd wsq = scaling_.soc_wsq(k);
            const int d = layout_.dims[k];
            std::size_t idx = 0;
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j <= i; ++j) {
                    *soc_ptrs_[k][idx++] =
                        -wsq(i, j) - (i == j ? kDeltaStat : 0.0);
                }
            }
        }
    }

    bool factorize() {
        ldlt_.factorize(kkt_);
        return ldlt_.info() == Eigen::Success;
    }

    Eigen::VectorXd solve_kkt(const Eigen::VectorXd& rhs) const {
        Eigen::VectorXd sol = ldlt_.solve(rhs);
        const double target =
            (1.0 + rhs.lpNorm<Eigen::Infinity>()) * kLinsysAcc;
        Eigen::VectorXd resid =
            rhs - kkt_.selfadjointView<Eigen::Lower>() * sol;
        double err = resid.lpNorm<Eigen::Infinity>();
        for (int it = 0; it < kMaxRefine && err > target; ++it) {
            Eigen::VectorXd cand = sol + ldlt_.solve(resid);
            Eigen::VectorXd resid_cand =
                rhs - kkt_.selfadjointView<Eigen::Lower>() * cand;
            const double err_cand = resid_cand.lpNorm<Eigen::Infinity>();
            if (err_cand >= err) break;
            sol.swap(cand);
            resid.swap(resid_cand);
            err = err_cand;
        }
        return sol;
    }

    // ---- interior-point iteration ----------------------------------------

    bool initialize(std::string* failure) {
        set_identity_scaling();
        if (!factorize()) {
            *failure = "identity-scaled KKT factorization";
            return false;
        }
        rhs_static_.resize(n_ + p_ + m_);
        rhs_static_.head(n_).setZero();
        rhs_static_.segment(n_, p_) = sf_.b;
        rhs_static_.tail(m_) = sf_.h;
        Eigen::VectorXd sol = solve_kkt(rhs_static_);
        x_ = sol.head(n_);
        s_ = -sol.tail(m_);
        bring_to_cone(layout_, s_);

        Eigen::VectorXd rhs_dual = Eigen::VectorXd::Zero(n_ + p_ + m_);
        rhs_dual.head(n_) = -sf_.c;
        sol = solve_kkt(rhs_dual);
        y_ = sol.segment(n_, p_);
        z_ = sol.tail(m_);
        bring_to_cone(layout_, z_);

        tau_ = 1.0;
        kappa_ = 1.0;
        rhs_static_.head(n_) = -sf_.c;
        return true;
    }

    void compute_residuals() {
        rx_ = -(at_ * y_) - gt_ * z_;
        hresx_ = rx_.norm();
        rx_ -= tau_ * sf_.c;
        ry_ = sf_.A * x_;
        hresy_ = ry_.norm();
        ry_ -= tau_ * sf_.b;
        rz_ = s_ + sf_.G * x_;
        hresz_ = rz_.norm();
        rz_ -= tau_ * sf_.h;
        rt_ = kappa_ + sf_.c.dot(x_) + sf_.b.dot(y_) + sf_.h.dot(z_);
    }

    void update_statistics() {
        cx_ = sf_.c.dot(x_);
        by_ = sf_.b.dot(y_);
        hz_ = sf_.h.dot(z_);
        gap_ = s_.dot(z_);
        mu_ = (gap_ + kappa_ * tau_) / (layout_.degree() + 1);
        pcost_ = cx_ / tau_;
        dcost_ = -(hz_ + by_) / tau_;
        relgap_ = nan_value();
        if (pcost_ < 0.0) {
            relgap_ = gap_ / (-pcost_);
        } else if (dcost_ > 0.0) {
            relgap_ = gap_ / dcost_;
        }
        const double nx = x_.norm();
        const double ny = y_.norm();
        const double nz = z_.norm();
        const double ns = s_.norm();
        pres_ = std::max(ry_.norm() / std::max(resy0_ + nx, 1.0),
                         rz_.norm() / std::max(resz0_ + nx + ns, 1.0)) /
                tau_;
        dres_ = rx_.norm() / std::max(resx0_ + ny + nz, 1.0) / tau_;
        pinfres_ = nan_value();
        if ((by_ + hz_) / std::max(ny + nz, 1.0) < -settings_.gap_tol) {
            pinfres_ = hresx_ / std::max(ny + nz, 1.0);
        }
        dinfres_ = nan_value();
        if (cx_ / std::max(nx, 1.0) < -settings_.gap_tol) {
            dinfres_ = std::max(hresy_ / std::max(nx, 1.0),
                                hresz_ / std::max(nx + ns, 1.0));
        }
    }

    std::optional<SolveStatus> check_exit(bool reduced) const {
        const double feastol = reduced ? kFeastolInacc : settings_.feas_tol;
        const double abstol = reduced ? kAbstolInacc : settings_.gap_tol;
        const double reltol = reduced ? kReltolInacc : settings_.gap_tol;
        const bool dual_sane = (-cx_ > 0.0) || (-by_ - hz_ >= -abstol);
        if (pres_ < feastol && dres_ < feastol && dual_sane &&
            (gap_ < abstol || (!std::isnan(relgap_) && relgap_ < reltol))) {
            return SolveStatus::optimal;
        }
        if (!std::isnan(pinfres_) && pinfres_ < feastol &&
            (tau_ < kappa_ ||
             (tau_ < feastol && kappa_ < feastol))) {
            return SolveStatus::infeasible;
        }
        if (!std::isnan(dinfres_) && dinfres_ < feastol && tau_ < kappa_) {
            return SolveStatus::unbounded;
        }
        return std::nullopt;
    }

    double line_search(const Eigen::VectorXd& ds_scaled,
                       const Eigen::VectorXd& dz_scaled, double dtau,
                       double dkap) const {
        double alpha = scaling_.scaled_max_step(ds_scaled, dz_scaled);
        if (dtau < 0.0) alpha = std::min(alpha, -tau_ / dtau);
        if (dkap < 0.0) alpha = std::min(alpha, -kappa_ / dkap);
        return std::min(alpha, 1.0);
    }

    /// Raw-space feasibility of the recovered primal against the original
    /// program (true when no program or the audit is disabled).
    bool audit_ok() const {
        if (program_ == nullptr || settings_.audit_tol <= 0.0 || !(tau_ > 0.0))
            return true;
        std::vector<double> cand(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i)
            cand[static_cast<std::size_t>(i)] = x_[i] / (x_equil_[i] * tau_);
        return audit_feasibility(*program_, cand).worst <= settings_.audit_tol;
    }

    void save_best() {
        best_ = {x_, y_, z_, s_, tau_, kappa_};
    }

    void restore_best() {
        x_ = best_.x;
        y_ = best_.y;
        z_ = best_.z;
        s_ = best_.s;
        tau_ = best_.tau;
        kappa_ = best_.kappa;
    }

    /// Falls back to the best iterate seen, re-checks the exit conditions
    /// with relaxed tolerances, and reports the resulting status.
    std::pair<SolveStatus, std::string> finish_degraded(
        const std::string& why) {
        restore_best();
        compute_residuals();
        update_statistics();
        if (auto st = check_exit(true)) {
            return {*st, describe(*st, true) + " (" + why + ")"};
        }
        return {SolveStatus::numerical_limit, why};
    }

    static std::string describe(SolveStatus status, bool reduced) {
        std::string base;
        switch (status) {
            case SolveStatus::optimal: base = "optimal"; break;
            case SolveStatus::infeasible:
                base = "primal infeasibility certificate found";
                break;
            case SolveStatus::unbounded:
                base = "dual infeasibility certificate found (unbounded)";
                break;
            case SolveStatus::numerical_limit:
                base = "numerical limit";
                break;
        }
        if (reduced) base += " at reduced accuracy";
        return base;
    }

    void print_progress(int iter) const {
        std::ostringstream line;
        line.setf(std::ios::scientific);
        line.precision(3);
        line << "hsd iter " << iter << ": pcost=" << pcost_
             << " dcost=" << dcost_ << " gap=" << gap_ << " pres=" << pres_
             << " dres=" << dres_ << " tau=" << tau_ << " kappa=" << kappa_;
        std::cerr << line.str() << '\n';
    }

    struct Snapshot {
        Eigen::VectorXd x, y, z, s;
        double tau = 1.0;
        double kappa = 1.0;
    };

    StandardForm sf_;
    SolverSettings settings_;
    const ConvexProgram* program_ = nullptr;
    ConeLayout layout_;
    NTScaling scaling_;
    int n_, p_, m_;

    Eigen::SparseMatrix<double> at_, gt_;
    Eigen::VectorXd x_equil_;
    Eigen::VectorXd e_cone_;
    double resx0_ = 1.0, resy0_ = 1.0, resz0_ = 1.0;

    Eigen::SparseMatrix<double> kkt_;
    std::vector<double*> lp_ptrs_;
    std::vector<std::vector<double*>> soc_ptrs_;
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt_;
    Eigen::VectorXd rhs_static_;

    Eigen::VectorXd x_, y_, z_, s_;
    double tau_ = 1.0, kappa_ = 1.0;
    Snapshot best_;

    Eigen::VectorXd rx_, ry_, rz_;
    double rt_ = 0.0;
    double hresx_ = 0.0, hresy_ = 0.0, hresz_ = 0.0;
    double cx_ = 0.0, by_ = 0.0, hz_ = 0.0;
    double gap_ = 0.0, mu_ = 0.0, pcost_ = 0.0, dcost_ = 0.0;
    double relgap_ = 0.0, pres_ = 0.0, dres_ = 0.0;
    double pinfres_ = 0.0, dinfres_ = 0.0;
};

}  // namespace

SolveResult solve_hsd(const ConvexProgram& program,
                      const SolverSettings& settings) {
    StandardForm sf = to_standard_form(program);
    if (sf.n_vars() == 0) {
        SolveResult result;
        result.status = SolveStatus::optimal;
        result.objective_value = sf.obj_constant;
        result.message = "empty program";
        return result;
    }
    const StandardForm native = sf;  // keep unscaled copy for the objective
    HsdSolver solver(std::move(sf), settings, &program);
    SolveResult result = solver.run();
    if (!result.primal.empty()) {
        Eigen::Map<const Eigen::VectorXd> x(result.primal.data(),
                                            static_cast<int>(
                                                result.primal.size()));
        result.objective_value = native.objective_at(x);
    }
    return result;
}

}  // namespace stratosar::conic::detail
