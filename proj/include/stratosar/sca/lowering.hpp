// Second-order-cone epigraphs of the power-law terms the planner needs:
// v^(3/2) and v^(-1/2) exactly, and t^(+-p) for fractional p via dyadic
// weighted geometric-mean towers with conservatively rounded weights.
#pragma once

#include <string>

#include "stratosar/conic/program.hpp"

namespace stratosar::sca {

/// Dyadic resolution of the geometric-mean towers (weight granularity
/// 2^-levels); exposed so tests can bound the rounding gap.
int dyadic_levels();

/// Adds rows enforcing y >= coef * x^(3/2); exact (two rotated cones).
/// The cones imply x >= 0.  coef must be positive.
void add_pow32_epigraph(conic::ConvexProgram& program, const conic::LinExpr& y,
                        const conic::LinExpr& x, double coef,
                        const std::string& tag);

/// Adds rows enforcing y >= coef / sqrt(x) for x > 0; exact.
/// coef must be positive.
void add_invsqrt_epigraph(conic::ConvexProgram& program, const conic::LinExpr& y,
                          const conic::LinExpr& x, double coef,
                          const std::string& tag);

/// Adds rows enforcing y >= coef * t^(-p) for t >= 1 and p > 0 (the
/// air-density altitude shape).  The dyadic weight is rounded so that the
/// encoded set is a subset of the true epigraph (conservative); the gap is
/// O(2^-levels) in the exponent.
void add_negative_power_epigraph(conic::ConvexProgram& program,
                                 const conic::LinExpr& y,
                                 const conic::LinExpr& t, double coef, double p,
                                 const std::string& tag);

/// Adds rows enforcing y >= coef * t^(+p) for t >= 1 and p >= 1 (the
/// reciprocal-density shape), with conservative dyadic rounding.
void add_positive_power_epigraph(conic::ConvexProgram& program,
                                 const conic::LinExpr& y,
                                 const conic::LinExpr& t, double coef, double p,
                                 const std::string& tag);

}  // namespace stratosar::sca
