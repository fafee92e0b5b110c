#ifndef TBVP_APPROX_HPP
#define TBVP_APPROX_HPP

#include "tbvp/bernstein.hpp"
#include "tbvp/errors.hpp"
#include "tbvp/grid.hpp"
#include "tbvp/hermite.hpp"

#include <memory>

namespace tbvp {

/// Samples of a C^1 function: values and first derivatives at the nodes.
struct C1Grid {
    GridFunction g;
    Vector d1;
};

// Grid-level stages. f is read as its piecewise-linear interpolant.

/// f on [a, b - delta], then the line from f(b - delta) to f(a) + c1.
/// BadDelta unless 0 < delta <= (b - a) / 2.
GridFunction linear_tail(const GridFunction& f, double c1, double delta);

/// g - (integral of g - target) / (b - a), integral by Simpson.
GridFunction integral_shift(const GridFunction& g, double target);
C1Grid integral_shift(const C1Grid& g, double target);

/// Degree-m Bernstein polynomial of g evaluated at g's nodes.
C1Grid bernstein(const GridFunction& g, int m);

struct DegreeChoice {
    int m;
    double error;  ///< max node error |B_m g - g|
    bool reached;  ///< error < tol
};

/// First m in 8, 16, ..., m_max with max node error below tol.
DegreeChoice choose_bernstein_degree(const GridFunction& g, double tol, int m_max = 4096);

/// g4 on [a, b - delta]; on [b - delta, b] the cubic Hermite with the values
/// and slopes of g4 at both ends except H'(b) = g4'(a) + c2.
C1Grid hermite_patch(const C1Grid& g4, double c2, double delta);

// Continuous pipeline.

struct ApproxRequest {
    GridFunction f;
    double c1 = 0.0;
    double c2 = 0.0;
    double target_integral = 0.0;
    double epsilon = 1e-3;
    int p = 2;
};

struct ApproxOptions {
    double initial_fraction = 1.0 / 64.0;  ///< delta = delta_H = (b - a) * fraction at first
    int m_max = 4096;                      ///< degree ceiling of the first attempt
    int m_cap = 1 << 24;                   ///< absolute degree ceiling
    int max_attempts = 16;
    int min_delta_exponent = 44;           ///< delta >= (b - a) 2^-44
};

struct ApproxStages {
    double delta = 0.0;
    int m = 0;
    double delta_hermite = 0.0;
    int attempts = 0;
    double error_g2 = 0.0;  ///< ||g2 - f||_p
    double error_g4 = 0.0;  ///< ||g4 - f||_p
};

/// g = g5 - r3 / (b - a) where g5 is the Bernstein polynomial of the tailed
/// input, shifted to the target integral, with the Hermite patch on
/// [b - delta_H, b].
class C1Approximant {
public:
    C1Approximant(std::shared_ptr<const BernsteinPoly> poly, double shift4, CubicHermite patch,
                  double shift);

    double a() const { return poly_->a(); }
    double b() const { return poly_->b(); }
    double value(double x) const;
    double d1(double x) const;
    /// Exact integral over [a, b].
    double integral() const;

    const BernsteinPoly& polynomial() const { return *poly_; }
    const CubicHermite& patch() const { return patch_; }
    /// g4 = polynomial - shift4, the curve the patch departs from.
    double g4(double x) const { return poly_->value(x) - shift4_; }
    double g4_d1(double x) const { return poly_->d1(x); }
    double final_shift() const { return shift_; }

    C1Grid sample(const GridFunction& grid) const;

private:
    std::shared_ptr<const BernsteinPoly> poly_;
    double shift4_;
    CubicHermite patch_;
    double shift_;
};

struct ApproxResult {
    C1Approximant approximant;
    C1Grid g;                   ///< g on the grid of the request
    double achieved_lp_error;   ///< ||g - f||_p by adaptive quadrature
    double integral_residual;   ///< |integral of g - target|, exact integral
    double endpoint_value_residual;
    double endpoint_deriv_residual;
    double grid_integral_residual;  ///< Simpson on the samples, diagnostic only
    ApproxStages stages;
};

/// Epsilon not reached within the degree and width caps; carries the last
/// (constraint-exact) result.
class ApproxBudgetExceeded : public Error {
public:
    ApproxBudgetExceeded(const std::string& what, ApproxResult best)
        : Error(what), best_(std::make_shared<ApproxResult>(std::move(best))) {}
    const ApproxResult& best() const { return *best_; }

private:
    std::shared_ptr<ApproxResult> best_;
};

/// ||F - f||_p for a continuous F against the linear interpolant of f,
/// by adaptive Gauss-Legendre on grid cells graded towards both ends.
double lp_distance(const std::function<double(double)>& F, const GridFunction& f, int p,
                   double tol);

ApproxResult approximate_c1(const ApproxRequest& req, const ApproxOptions& opts = {});

}  // namespace tbvp

#endif  // TBVP_APPROX_HPP
