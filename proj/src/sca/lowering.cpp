#include "stratosar/sca/lowering.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <utility>

#include "stratosar/errors.hpp"

namespace stratosar::sca {

namespace {

constexpr int kLevels = 36;
constexpr double kInf = std::numeric_limits<double>::infinity();

/// Builds an expression bounded above by a^(k/2^level) * b^(1-k/2^level)
/// whenever a, b >= 0, out of rotated cones g^2 <= left*right.  Nodes are
/// memoized on (level, k); a top-level call creates at most ~2 new
/// variables per level.
class GmTower {
public:
    GmTower(conic::ConvexProgram& program, conic::LinExpr a, conic::LinExpr b,
            std::string tag)
        : program_(program), a_(std::move(a)), b_(std::move(b)),
          tag_(std::move(tag)) {}

    conic::LinExpr node(std::uint64_t k, int level) {
        if (level == 0) return k != 0 ? a_ : b_;
        const std::uint64_t full = std::uint64_t{1} << level;
        if (k == 0) return b_;
        if (k == full) return a_;
        if ((k & 1u) == 0) return node(k >> 1, level - 1);
        const auto key = std::make_pair(level, k);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        conic::LinExpr left = node(k >> 1, level - 1);
        conic::LinExpr right = node((k >> 1) + 1, level - 1);
        const conic::VarId mean = program_.add_variable(
            tag_ + ".gm" + std::to_string(counter_++), 0.0, kInf,
            conic::VarRole::aux);
        conic::add_rotated_cone(program_, 0.5 * left, right, {conic::LinExpr(mean)},
                                tag_ + "/gm");
        conic::LinExpr expr{mean};
        memo_.emplace(key, expr);
        return expr;
    }

private:
    conic::ConvexProgram& program_;
    conic::LinExpr a_, b_;
    std::string tag_;
    int counter_ = 0;
    std::map<std::pair<int, std::uint64_t>, conic::LinExpr> memo_;
};

void require_positive_coef(double coef, const char* what) {
    if (!(coef > 0.0)) {
        throw LogicError(std::string("epigraph coefficient for ") + what +
                         " must be positive");
    }
}

}  // namespace

int dyadic_levels() { return kLevels; }

void add_pow32_epigraph(conic::ConvexProgram& program, const conic::LinExpr& y,
                        const conic::LinExpr& x, double coef,
                        const std::string& tag) {
    require_positive_coef(coef, "x^(3/2)");
    // y/coef >= x^(3/2)  <=>  exists w >= 0: x^2 <= (y/coef)*w, w^2 <= x.
    const conic::VarId w =
        program.add_variable(tag + ".w32", 0.0, kInf, conic::VarRole::aux);
    conic::add_rotated_cone(program, (0.5 / coef) * y, conic::LinExpr(w), {x},
                            tag + "/p32a");
    conic::add_rotated_cone(program, 0.5 * x, 1.0, {conic::LinExpr(w)},
                            tag + "/p32b");
}

void add_invsqrt_epigraph(conic::ConvexProgram& program, const conic::LinExpr& y,
                          const conic::LinExpr& x, double coef,
                          const std::string& tag) {
    require_positive_coef(coef, "x^(-1/2)");
    // y/coef >= x^(-1/2)  <=>  exists v >= 0: (y/coef)*v >= 1, v^2 <= x.
    const conic::VarId v =
        program.add_variable(tag + ".vis", 0.0, kInf, conic::VarRole::aux);
    conic::add_rotated_cone(program, (0.5 / coef) * y, conic::LinExpr(v),
                            {conic::LinExpr(1.0)}, tag + "/isqa");
    conic::add_rotated_cone(program, 0.5 * x, 1.0, {conic::LinExpr(v)},
                            tag + "/isqb");
}

void add_negative_power_epigraph(conic::ConvexProgram& program,
                                 const conic::LinExpr& y,
                                 const conic::LinExpr& t, double coef, double p,
                                 const std::string& tag) {
    require_positive_coef(coef, "t^(-p)");
    if (!(p > 0.0)) throw LogicError("negative-power epigraph needs p > 0");
    // y >= coef*t^(-p) on t >= 1 is implied by (y/coef)^theta * t^(1-theta)
    // >= 1 with theta = 1/(p+1).  Rounding theta *up* keeps the implication
    // valid for t >= 1 (the effective exponent -(1-theta~)/theta~ >= -p).
    const double theta = 1.0 / (p + 1.0);
    const std::uint64_t full = std::uint64_t{1} << kLevels;
    std::uint64_t k = static_cast<std::uint64_t>(std::ceil(theta * static_cast<double>(full)));
    k = std::max<std::uint64_t>(1, std::min(k, full - 1));
    GmTower tower(program, (1.0 / coef) * y, t, tag);
    conic::LinExpr top = tower.node(k, kLevels);
    program.add_inequality(1.0 - top, tag + "/floor");
}

void add_positive_power_epigraph(conic::ConvexProgram& program,
                                 const conic::LinExpr& y,
                                 const conic::LinExpr& t, double coef, double p,
                                 const std::string& tag) {
    require_positive_coef(coef, "t^(+p)");
    if (!(p >= 1.0)) throw LogicError("positive-power epigraph needs p >= 1");
    // y >= coef*t^p on t >= 1 is implied by (y/coef)^theta >= t with
    // theta = 1/p.  Rounding theta *down* keeps the implication valid since
    // the tower then certifies (y/coef)^theta~ >= t with 1/theta~ >= p and
    // y/coef >= 1 at any feasible point.
    const double theta = 1.0 / p;
    const std::uint64_t full = std::uint64_t{1} << kLevels;
    std::uint64_t k = static_cast<std::uint64_t>(std::floor(theta * static_cast<double>(full)));
    k = std::max<std::uint64_t>(1, std::min(k, full));
    GmTower tower(program, (1.0 / coef) * y, conic::LinExpr(1.0), tag);
    conic::LinExpr top = tower.node(k, kLevels);
    program.add_inequality(t - top, tag + "/floor");
}

}  // namespace stratosar::sca
