#ifndef TBVP_L1MIN_HPP
#define TBVP_L1MIN_HPP

#include "tbvp/grid.hpp"
#include "tbvp/shifts.hpp"

#include <vector>

namespace tbvp {

/// Pointwise order statistics of a shift sequence: envelope j (0-based here,
/// a_{j+1} in 1-based notation) is the (j+1)-th largest member at each node.
struct OrderEnvelopes {
    std::vector<GridFunction> a;   ///< a[0] >= a[1] >= ... >= a[K-1]
    std::vector<double> integrals; ///< integrals[j] = integral of a[j]
    /// labels(x, j): member index that supplied a[j] at node x (ties by ascending index).
    Eigen::MatrixXi labels;
    /// Sorted points where two members of the family cross (sign change of
    /// t_i - t_k, located by linear interpolation). Envelopes may kink there.
    std::vector<double> crossings;

    int K() const { return static_cast<int>(a.size()); }
    /// 1-based access matching the strip notation; 0 and K+1 are invalid here.
    const GridFunction& envelope(int j) const { return a[j - 1]; }
    /// 1-based integral with sentinels +inf (j = 0) and -inf (j = K + 1).
    double integral(int j) const;
};

OrderEnvelopes order_envelopes(const ShiftSequence& ts);

/// Smallest strip j in {0..K} with integral(j) >= A >= integral(j + 1), where
/// j = 0 only for A above every envelope integral and j = K only below all.
int select_strip(const OrderEnvelopes& env, double A);

enum class BoundaryCase { interior, on_upper, on_lower, scaled_top, scaled_bottom, shifted_top,
                          shifted_bottom };

const char* to_string(BoundaryCase c);

/// Continuous function pinched between two consecutive envelopes with the
/// prescribed integral.
struct StripSolution {
    int j;                     ///< strip order, 0..K
    GridFunction lower;        ///< a_{j+1}; -inf sentinel encoded as has_lower = false
    GridFunction upper;        ///< a_j; +inf sentinel encoded as has_upper = false
    bool has_lower;
    bool has_upper;
    GridFunction h;            ///< the constructed minimizer
    double objective;          ///< I[h], filled by l1_solve; NaN from construct_h alone
    BoundaryCase boundary_case;
    /// Envelopes j and j+1 coincide on more than one cell: the slopes of U
    /// are no longer strictly ordered there.
    bool degenerate;
};

/// Edge strips scale the outermost envelope by A / p; DegenerateScaling when
/// that integral vanishes and A != 0. When the scaled curve leaves the strip
/// although j is the selected strip, the envelope is shifted by a constant
/// instead.
StripSolution construct_h(const OrderEnvelopes& env, int j, double A);

/// Integral over [-T, T] of U(v, x) = sum_i |t_i(x) - v(x)|.
double l1_objective(const GridFunction& v, const ShiftSequence& ts);

/// Envelope selection, construction, and objective in one call.
StripSolution l1_solve(const ShiftSequence& ts, double A);

struct StripMeasure {
    double inside;
    double outside;
};

/// Trapezoid-weighted node count of {a_{j+1} <= v <= a_j} and its complement,
/// with a 1e-10 band at the strip edges.
StripMeasure strip_membership(const GridFunction& v, const OrderEnvelopes& env, int j);

enum class EndpointVerdict { possible, obstructed };

/// Necessary condition for a strip-j input to satisfy v(T) = v(-T) + c1:
/// c1 must lie in [a_{j+1}(T) - a_j(-T), a_j(T) - a_{j+1}(-T)]. Requires 1 <= j <= K-1.
EndpointVerdict ms_endpoint_check(const OrderEnvelopes& env, int j, double c1);

/// integral of U(a_ref, x) dx + (K - 2j)(A - integral of a_ref), with a_ref =
/// a_{j+1} for j < K and a_K for j = K: the lower bound every feasible
/// continuous input satisfies, attained exactly on the strip.
double l1_lower_bound(const OrderEnvelopes& env, const ShiftSequence& ts, int j, double A);

/// U(value, x_i) at node i.
double pointwise_u(const ShiftSequence& ts, int i, double value);

}  // namespace tbvp

#endif  // TBVP_L1MIN_HPP
