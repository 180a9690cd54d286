// Internal helpers shared by the conic backends: product-cone layout,
// Jordan-algebra arithmetic for the nonnegative orthant + second-order cones,
// and Nesterov-Todd scalings.  Not part of the installed API.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <vector>

#include "stratosar/conic/standard_form.hpp"

namespace stratosar::conic::detail {

struct ConeLayout {
    int n_lp = 0;
    std::vector<int> dims;    ///< second-order cone sizes
    std::vector<int> starts;  ///< offset of each cone in the slack vector
    int total = 0;

    /// Barrier degree: one per orthant row, one per second-order cone.
    int degree() const { return n_lp + static_cast<int>(dims.size()); }

    static ConeLayout make(const StandardForm& sf) {
        ConeLayout layout;
        layout.n_lp = sf.n_lp;
        layout.dims = sf.soc_dims;
        int offset = sf.n_lp;
        layout.starts.reserve(layout.dims.size());
        for (int d : layout.dims) {
            layout.starts.push_back(offset);
            offset += d;
        }
        layout.total = offset;
        return layout;
    }
};

/// Identity element of the product cone (ones on the orthant, (1,0,..) per
/// second-order cone).
inline Eigen::VectorXd cone_identity(const ConeLayout& layout) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(layout.total);
    e.head(layout.n_lp).setOnes();
    for (std::size_t k = 0; k < layout.dims.size(); ++k) {
        e[layout.starts[k]] = 1.0;
    }
    return e;
}

inline bool strictly_interior(const ConeLayout& layout,
                              const Eigen::VectorXd& v) {
    for (int i = 0; i < layout.n_lp; ++i) {
        if (v[i] <= 0.0) return false;
    }
    for (std::size_t k = 0; k < layout.dims.size(); ++k) {
        const int off = layout.starts[k];
        const int d = layout.dims[k];
        if (v[off] <= 0.0) return false;
        double res = v[off] * v[off] - v.segment(off + 1, d - 1).squaredNorm();
        if (res <= 0.0) return false;
    }
    return true;
}

/// Shifts v along the cone identity until it is interior: v + (1 + alpha) e
/// where alpha is the largest boundary violation (-1 when already interior,
/// leaving v unchanged).
inline void bring_to_cone(const ConeLayout& layout, Eigen::VectorXd& v) {
    double alpha = -1.0;
    for (int i = 0; i < layout.n_lp; ++i) {
        if (v[i] <= 0.0) alpha = std::max(alpha, -v[i]);
    }
    for (std::size_t k = 0; k < layout.dims.size(); ++k) {
        const int off = layout.starts[k];
        const int d = layout.dims[k];
        double res = v[off] - v.segment(off + 1, d - 1).norm();
        if (res <= 0.0) alpha = std::max(alpha, -res);
    }
    if (alpha > -1.0) {
        const double shift = 1.0 + alpha;
        v.head(layout.n_lp).array() += shift;
        for (std::size_t k = 0; k < layout.dims.size(); ++k) {
            v[layout.starts[k]] += shift;
        }
    }
}

/// Jordan product u o v for the product cone.
inline Eigen::VectorXd conic_product(const ConeLayout& layout,
                                     const Eigen::VectorXd& u,
                                     const Eigen::VectorXd& v) {
    Eigen::VectorXd w(layout.total);
    w.head(layout.n_lp) =
        u.head(layout.n_lp).cwiseProduct(v.head(layout.n_lp));
    for (std::size_t k = 0; k < layout.dims.size(); ++k) {
        const int off = layout.starts[k];
        const int d = layout.dims[k];
        w[off] = u.segment(off, d).dot(v.segment(off, d));
        w.segment(off + 1, d - 1) = u[off] * v.segment(off + 1, d - 1) +
                                    v[off] * u.segment(off + 1, d - 1);
    }
    return w;
}

/// Jordan division u^{-1} o w.
inline Eigen::VectorXd conic_division(const ConeLayout& layout,
                                      const Eigen::VectorXd& u,
                                      const Eigen::VectorXd& w) {
    Eigen::VectorXd v(layout.total);
    v.head(layout.n_lp) =
        w.head(layout.n_lp).cwiseQuotient(u.head(layout.n_lp));
    for (std::size_t k = 0; k < layout.dims.size(); ++k) {
        const int off = layout.starts[k];
        const int d = layout.dims[k];
        const auto u1 = u.segment(off + 1, d - 1);
        const auto w1 = w.segment(off + 1, d - 1);
        const double rho = u[off] * u[off] - u1.squaredNorm();
        const double zeta = u1.dot(w1);
        v[off] = (u[off] * w[off] - zeta) / rho;
        v.segment(off + 1, d - 1) =
            ((zeta / u[off] - w[off]) / rho) * u1 + w1 / u[off];
    }
    return v;
}

/// Largest step alpha such that v + alpha dv stays in the cone
/// (+infinity when the ray never leaves).  v must be strictly interior.
inline double max_step_to_boundary(const ConeLayout& layout,
                                   const Eigen::VectorXd& v,
                                   const Eigen::VectorXd& dv) {
    double alpha = std::numeric_limits<double>::infinity();
    for (int i = 0; i < layout.n_lp; ++i) {
        if (dv[i] < 0.0) alpha = std::min(alpha, -v[i] / dv[i]);
    }
    for (std::size_t k = 0; k < layout.dims.size(); ++k) {
        const int off = layout.starts[k];
        const int d = layout.dims[k];
        const auto v1 = v.segment(off + 1, d - 1);
        const auto d1 = dv.segment(off + 1, d - 1);
        // (v0 + a d0)^2 - ||v1 + a dv1||^2 = qa a^2 + qb a + qc, qc > 0.
        const double qa = dv[off] * dv[off] - d1.squaredNorm();
        const double qb = 2.0 * (v[off] * dv[off] - v1.dot(d1));
        const double qc = v[off] * v[off] - v1.squaredNorm();
        double root = std::numeric_limits<double>::infinity();
        if (std::abs(qa) < 1e-300) {
            if (qb < 0.0) root = -qc / qb;
        } else {
            const double disc = qb * qb - 4.0 * qa * qc;
            if (disc >= 0.0) {
                const double sq = std::sqrt(disc);
                // Numerically stable pair of roots.
                const double r0 = (qb >= 0.0) ? (-qb - sq) / (2.0 * qa)
                                              : (2.0 * qc) / (-qb + sq);
                const double r1 = (qb >= 0.0) ? (2.0 * qc) / (-qb - sq)
                                              : (-qb + sq) / (2.0 * qa);
                double lo = std::min(r0, r1);
                double hi = std::max(r0, r1);
                if (lo > 0.0) {
                    root = lo;
                } else if (hi > 0.0) {
                    root = hi;
                }
            }
        }
        alpha = std::min(alpha, root);
    }
    return alpha;
}

/// Nesterov-Todd scaling for the product cone.  W is symmetric positive
/// definite with W z = W^{-1} s = lambda.
class NTScaling {
public:
    explicit NTScaling(const ConeLayout& layout)
        : layout_(layout),
          w_lp_(Eigen::VectorXd::Ones(layout.n_lp)),
          lambda_(Eigen::VectorXd::Zero(layout.total)) {
        socs_.resize(layout.dims.size());
        for (std::size_t k = 0; k < layout.dims.size(); ++k) {
            socs_[k].q = Eigen::VectorXd::Zero(layout.dims[k] - 1);
        }
    }

    /// Recomputes the scaling at (s, z); false when either point has left
    /// the interior of the cone.
    bool update(const Eigen::VectorXd& s, const Eigen::VectorXd& z) {
        for (int i = 0; i < layout_.n_lp; ++i) {
            if (s[i] <= 0.0 || z[i] <= 0.0) return false;
            w_lp_[i] = std::sqrt(s[i] / z[i]);
            lambda_[i] = std::sqrt(s[i] * z[i]);
        }
        for (std::size_t k = 0; k < layout_.dims.size(); ++k) {
            const int off = layout_.starts[k];
            const int d = layout_.dims[k];
            const auto sk = s.segment(off, d);
            const auto zk = z.segment(off, d);
            const double sres =
                sk[0] * sk[0] - sk.tail(d - 1).squaredNorm();
            const double zres =
                zk[0] * zk[0] - zk.tail(d - 1).squaredNorm();
            if (sres <= 0.0 || zres <= 0.0 || sk[0] <= 0.0 || zk[0] <= 0.0) {
                return false;
            }
            const double snorm = std::sqrt(sres);
            const double znorm = std::sqrt(zres);
            SocScaling& sc = socs_[k];
            sc.eta2 = snorm / znorm;
            sc.eta = std::sqrt(sc.eta2);
            Eigen::VectorXd skbar = sk / snorm;
            Eigen::VectorXd zkbar = zk / znorm;
            const double gamma =
                std::sqrt(0.5 * (1.0 + skbar.dot(zkbar)));
            sc.a = (skbar[0] + zkbar[0]) / (2.0 * gamma);
            sc.q = (skbar.tail(d - 1) - zkbar.tail(d - 1)) / (2.0 * gamma);
            // lambda = W z.
            const double qz = sc.q.dot(zk.tail(d - 1));
            lambda_[off] = sc.eta * (sc.a * zk[0] + qz);
            lambda_.segment(off + 1, d - 1) =
                sc.eta *
                (zk.tail(d - 1) + (zk[0] + qz / (1.0 + sc.a)) * sc.q);
        }
        return true;
    }

    /// out = W v.
    Eigen::VectorXd apply(const Eigen::VectorXd& v) const {
        Eigen::VectorXd out(layout_.total);
        out.head(layout_.n_lp) =
            w_lp_.cwiseProduct(v.head(layout_.n_lp));
        for (std::size_t k = 0; k < layout_.dims.size(); ++k) {
            const int off = layout_.starts[k];
            const int d = layout_.dims[k];
            const SocScaling& sc = socs_[k];
            const auto v1 = v.segment(off + 1, d - 1);
            const double qv = sc.q.dot(v1);
            out[off] = sc.eta * (sc.a * v[off] + qv);
            out.segment(off + 1, d - 1) =
                sc.eta * (v1 + (v[off] + qv / (1.0 + sc.a)) * sc.q);
        }
        return out;
    }

    /// out = W^{-1} v.  W^{-1} has the same structure with the reflected
    /// scaling point (a, -q) and 1/eta.
    Eigen::VectorXd apply_inverse(const Eigen::VectorXd& v) const {
        Eigen::VectorXd out(layout_.total);
        out.head(layout_.n_lp) =
            v.head(layout_.n_lp).cwiseQuotient(w_lp_);
        for (std::size_t k = 0; k < layout_.dims.size(); ++k) {
            const int off = layout_.starts[k];
            const int d = layout_.dims[k];
            const SocScaling& sc = socs_[k];
            const auto v1 = v.segment(off + 1, d - 1);
            const double qv = sc.q.dot(v1);
            out[off] = (sc.a * v[off] - qv) / sc.eta;
            out.segment(off + 1, d - 1) =
                (v1 + (-v[off] + qv / (1.0 + sc.a)) * sc.q) / sc.eta;
        }
        return out;
    }

    /// Dense W^2 block of one second-order cone:
    /// eta^2 (2 wbar wbar' - J) with wbar = (a, q).
    Eigen::MatrixXd soc_wsq(std::size_t k) const {
        const SocScaling& sc = socs_[k];
        const int d = layout_.dims[k];
        Eigen::MatrixXd block(d, d);
        block(0, 0) = sc.eta2 * (2.0 * sc.a * sc.a - 1.0);
        for (int i = 1; i < d; ++i) {
            const double v = sc.eta2 * 2.0 * sc.a * sc.q[i - 1];
            block(i, 0) = v;
            block(0, i) = v;
            for (int j = 1; j <= i; ++j) {
                double e = sc.eta2 * 2.0 * sc.q[i - 1] * sc.q[j - 1];
                if (i == j) e += sc.eta2;
                block(i, j) = e;
                block(j, i) = e;
            }
        }
        return block;
    }

    double lp_wsq(int i) const { return w_lp_[i] * w_lp_[i]; }

    const Eigen::VectorXd& lambda() const { return lambda_; }

    /// Largest step alpha with lambda + alpha d staying in the cone, for
    /// directions expressed in the scaled space (ECOS-style line search).
    double scaled_max_step(const Eigen::VectorXd& ds,
                           const Eigen::VectorXd& dz) const {
        double step_bound = 0.0;  // 1/alpha, grows with worse directions
        for (int i = 0; i < layout_.n_lp; ++i) {
            const double rho = ds[i] / lambda_[i];
            const double sig = dz[i] / lambda_[i];
            step_bound = std::max(step_bound, std::max(-rho, -sig));
        }
        for (std::size_t k = 0; k < layout_.dims.size(); ++k) {
            const int off = layout_.starts[k];
            const int d = layout_.dims[k];
            const auto lk = lambda_.segment(off, d);
            const double lknorm2 =
                lk[0] * lk[0] - lk.tail(d - 1).squaredNorm();
            const double lknorm = std::sqrt(lknorm2);
            Eigen::VectorXd lkbar = lk / lknorm;
            for (const auto* dir : {&ds, &dz}) {
                const auto dk = dir->segment(off, d);
                const double lorentz =
                    lkbar[0] * dk[0] - lkbar.tail(d - 1).dot(dk.tail(d - 1));
                const double rho0 = lorentz / lknorm;
                const double factor = (lorentz + dk[0]) / (lkbar[0] + 1.0);
                const Eigen::VectorXd rho_tail =
                    (dk.tail(d - 1) - factor * lkbar.tail(d - 1)) / lknorm;
                step_bound = std::max(step_bound, rho_tail.norm() - rho0);
            }
        }
        if (step_bound <= 0.0) return std::numeric_limits<double>::infinity();
        return 1.0 / step_bound;
    }

private:
    struct SocScaling {
        double eta2 = 1.0;
        double eta = 1.0;
        double a = 1.0;
        Eigen::VectorXd q;
    };

    ConeLayout layout_;
    Eigen::VectorXd w_lp_;
    std::vector<SocScaling> socs_;
    Eigen::VectorXd lambda_;
};

}  // namespace stratosar::conic::detail
