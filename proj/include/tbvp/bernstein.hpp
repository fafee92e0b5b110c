#ifndef TBVP_BERNSTEIN_HPP
#define TBVP_BERNSTEIN_HPP

#include "tbvp/grid.hpp"

namespace tbvp {

/// sum_k coef[k] C(m, k) u^k (1 - u)^(m - k) by de Casteljau, O(m^2).
double de_casteljau(const Vector& coef, double u);

/// Degree-m Bernstein polynomial on [a, b] with the given m + 1 coefficients.
///
/// Low degrees use de Casteljau. High degrees sum the binomial weights in a
/// window around the mode: weights come from the ratio recurrence, are
/// truncated once they fall below 1e-18 of the mode and are normalised by
/// their own sum, so no factorials appear. Endpoints return the end
/// coefficients exactly.
class BernsteinPoly {
public:
    BernsteinPoly(double a, double b, Vector coef);

    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    double a() const { return a_; }
    double b() const { return b_; }
    const Vector& coefficients() const { return coef_; }

    double value(double x) const;
    double d1(double x) const;
    /// Exact integral over [a, b]: (b - a) / (m + 1) * sum of coefficients.
    double integral() const;
    /// Exact integral over [x, b] via the degree m + 1 antiderivative.
    double integral_from(double x) const;

private:
    double a_;
    double b_;
    Vector coef_;
};

}  // namespace tbvp

#endif  // TBVP_BERNSTEIN_HPP
