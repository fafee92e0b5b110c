#ifndef TBVP_L2MIN_HPP
#define TBVP_L2MIN_HPP

#include "tbvp/grid.hpp"
#include "tbvp/problem.hpp"
#include "tbvp/shifts.hpp"

namespace tbvp {

struct L2Solution {
    GridFunction v;
    double A1;
    GridFunction mean_shift;  ///< (1/K) sum_i t_i
    double objective;         ///< sum_i integral of (t_i - v)^2
};

/// A1 = A - integral of the mean shift.
double a1_constant(const ShiftSequence& ts, double A, double T);

/// v = mean shift + A1 / (2T), the unique L^2 minimizer.
L2Solution l2_minimizer(const ShiftSequence& ts, double A, double T);

enum class MsVerdict { ms_exists, pms_only };

const char* to_string(MsVerdict v);

struct EndpointDefects {
    double value;  ///< |v(T) - v(-T) - c1|
    double slope;  ///< |v'(T) - v'(-T) - c2|
};

/// Endpoint slopes by one-sided fourth-order stencils.
EndpointDefects endpoint_defects(const GridFunction& v, const ProblemSpec& spec);

MsVerdict l2_ms_check(const L2Solution& sol, const ProblemSpec& spec, double tol_val = 1e-8,
                      double tol_der = 1e-6);

}  // namespace tbvp

#endif  // TBVP_L2MIN_HPP
