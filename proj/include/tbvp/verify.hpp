#ifndef TBVP_VERIFY_HPP
#define TBVP_VERIFY_HPP

#include "tbvp/grid.hpp"
#include "tbvp/problem.hpp"
#include "tbvp/smooth_function.hpp"
#include "tbvp/solution_field.hpp"

#include <vector>

namespace tbvp {

enum class Classification { MS_candidate, pseudo_MS, irregular, infeasible };

const char* to_string(Classification c);

struct Located {
    double x;
    double magnitude;
};

struct VerificationReport {
    double integral_residual;   ///< |integral of v - A|
    double pde_residual_max;
    double pde_budget;          ///< grid-order allowance for the residual
    /// Residual of v sampled at every other node; 0 when that grid is not odd.
    /// A residual falling by a quarter or more under refinement also passes.
    double pde_residual_coarse;
    double boundary0_max;       ///< max |u(0, x) - f0(x)|
    double boundaryT_max;       ///< max |u(T, x) - fT(x)|
    std::vector<Located> seam_value_jumps;
    std::vector<Located> seam_deriv_jumps;
    /// Clusters of flagged interior nodes of v_ext (slope discontinuities),
    /// located at the cluster centre with the largest indicator as magnitude.
    std::vector<Located> kinks;
    std::vector<int> kink_cells;        ///< width of each kink cluster in cells
    /// Flagged clusters whose indicator grows on the coarse grid: jumps of
    /// the second derivative, not of the slope. Reported, not counted.
    std::vector<Located> curvature_features;
    std::vector<double> equilibrium_residuals;  ///< per period P = -K1 .. K2
    double exceptional_measure;         ///< seam cells plus kink cells, times h
    Classification classification;
};

struct VerifyOptions {
    double integral_tol = 1e-8;
    double seam_tol = 1e-6;
    double kink_tol = 1e-6;       ///< added to h^2 to form the kink threshold
    double budget_factor = 1e3;   ///< pde and boundary budget = factor * h^2
};

/// Max over sampled interior points of Omega of |d_tt u - d_xx u|, with
/// dx = h (the grid spacing) and dt = 2h on n_t time levels rounded to
/// multiples of h. At dt = dx a D'Alembert field satisfies the discrete
/// wave equation exactly, so the wider time step is what exposes the h^2 term.
double pde_residual(const SolutionField& u, int n_t);

/// Reconstruction, residuals, seam and kink scan, equilibrium identity and
/// classification. Never throws for inputs on the decision grid.
VerificationReport verify_solution(const GridFunction& v, const ProblemSpec& spec, int n_t,
                                   const VerifyOptions& opts = {});

struct ConvergencePoint {
    int n;
    double pde_residual_max;
};

/// pde_residual of the D'Alembert field of v sampled on each grid.
std::vector<ConvergencePoint> convergence_study(const SmoothFunction& v, const ProblemSpec& spec,
                                                const std::vector<int>& grids, int n_t = 17);

}  // namespace tbvp

#endif  // TBVP_VERIFY_HPP
