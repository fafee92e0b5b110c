#ifndef TBVP_SOLUTION_FIELD_HPP
#define TBVP_SOLUTION_FIELD_HPP

#include "tbvp/extension.hpp"

#include <memory>

namespace tbvp {

/// u(t, x) = (f0(x + t) + f0(x - t)) / 2 + (1/2) * integral of v_ext over [x - t, x + t],
/// defined on the trapezoid
///   Omega = { lo <= x <= hi, 0 <= t <= min(x - lo, T, hi - x) }.
///
/// The antiderivative of v_ext is tabulated per period with the cubic-Hermite
/// corrected trapezoid rule (h/2 (y0 + y1) + h^2/12 (y0' - y1') per cell),
/// which is exact for cubics; off-node limits integrate the same cubic.
class SolutionField {
public:
    SolutionField(const ProblemSpec& spec, ExtendedInput ext);

    bool contains(double t, double x) const;
    /// Throws OutOfRegion outside Omega.
    double operator()(double t, double x) const;

    /// Integral of v_ext from the left end of the window to s.
    double antiderivative(double s) const;

    const ExtendedInput& extension() const { return ext_; }
    const ProblemSpec& spec() const { return *spec_; }

private:
    std::shared_ptr<const ProblemSpec> spec_;
    ExtendedInput ext_;
    Eigen::MatrixXd cumulative_;  // per period, from the period's left end
    Vector offsets_;              // integral of all earlier periods
};

SolutionField dalembert(const GridFunction& v, const ProblemSpec& spec);
SolutionField dalembert(const GridFunction& v, const ShiftSequence& ts);

}  // namespace tbvp

#endif  // TBVP_SOLUTION_FIELD_HPP
