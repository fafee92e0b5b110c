#ifndef TBVP_HERMITE_HPP
#define TBVP_HERMITE_HPP

namespace tbvp {

/// Cubic on [x0, x1] matching values y0, y1 and slopes s0, s1.
struct CubicHermite {
    double x0, x1;
    double y0, s0;
    double y1, s1;

    double value(double x) const;
    double d1(double x) const;
    /// Exact integral over [x0, x1].
    double integral() const;
};

}  // namespace tbvp

#endif  // TBVP_HERMITE_HPP
