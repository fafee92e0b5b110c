#ifndef TBVP_EXTENSION_HPP
#define TBVP_EXTENSION_HPP

#include "tbvp/grid.hpp"
#include "tbvp/problem.hpp"
#include "tbvp/shifts.hpp"

#include <vector>

namespace tbvp {

/// Junction x = (2P + 1) T between two consecutive 2T periods of the window.
struct Seam {
    double x;
    double left_value;   ///< limit from the left (end of the earlier period)
    double right_value;  ///< value propagated into the later period
    double value_jump;   ///< |left_value - right_value|
    double left_slope;
    double right_slope;
    double slope_jump;
};

/// Decision-interval input carried to the whole window by the recurrence.
///
/// Period P (P = -K1 .. K2) covers [(2P - 1) T, (2P + 1) T] and holds
/// v(x) - t_P(x) at the shifted decision nodes. Each seam node of the window
/// grid stores the value propagated into the later period (half-open periods
/// [(2P - 1) T, (2P + 1) T)); the left limits live in seams().
class ExtendedInput {
public:
    ExtendedInput(const ProblemSpec& spec, Eigen::MatrixXd periods, Eigen::MatrixXd slopes);

    int K1() const { return K1_; }
    int K2() const { return K2_; }
    int K() const { return K1_ + K2_ + 1; }
    double T() const { return T_; }
    /// Nodes per period (the decision grid size).
    int nodes_per_period() const { return static_cast<int>(periods_.rows()); }

    /// Samples on the whole window with the seam convention above.
    const GridFunction& window() const { return window_; }
    const std::vector<Seam>& seams() const { return seams_; }

    /// Samples of period P on its own closed interval (right end = left limit).
    GridFunction period(int P) const;
    const Eigen::MatrixXd& period_matrix() const { return periods_; }
    const Eigen::MatrixXd& slope_matrix() const { return slopes_; }
    int column_of(int P) const { return P + K1_; }

private:
    int K1_;
    int K2_;
    double T_;
    Eigen::MatrixXd periods_;
    Eigen::MatrixXd slopes_;
    GridFunction window_;
    std::vector<Seam> seams_;
};

/// Extends v on [-T, T] to [-(2 K1 + 1) T, (2 K2 + 1) T]. GridError when v's
/// grid is not the decision grid of ts (or ts carries no problem).
ExtendedInput extend_input(const GridFunction& v, const ShiftSequence& ts);
ExtendedInput extend_input(const GridFunction& v, const ProblemSpec& spec);

/// Sum over periods of the Simpson integral of |v_ext|^p, each period using
/// its own left limits at the seams.
double window_lp_power(const ExtendedInput& ext, int p);

/// Integral of the extension over each period, ordered P = -K1 .. K2.
std::vector<double> period_integrals(const ExtendedInput& ext);

/// 2 fT(2PT) - f0((2P + 1) T) - f0((2P - 1) T): the per-period integral any
/// input satisfying the integral condition must have.
double equilibrium_value(const ProblemSpec& spec, int P);

}  // namespace tbvp

#endif  // TBVP_EXTENSION_HPP
