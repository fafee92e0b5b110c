#ifndef TBVP_ORACLE_HPP
#define TBVP_ORACLE_HPP

#include "tbvp/grid.hpp"
#include "tbvp/shifts.hpp"

#include <cstdint>

namespace tbvp {

struct OracleReport {
    int p;
    int n;
    double oracle_value;
    double analytic_value;
    double rel_gap;        ///< |oracle - analytic| / max(analytic, 1e-12)
    int iterations;
    bool converged;
    GridFunction v_oracle;
    GridFunction v_analytic;  ///< closed-form minimizer on the oracle grid
    double max_node_diff;     ///< max |v_oracle - v_analytic|
    double constraint_residual;  ///< |sum w v - A| of the returned iterate
};

struct OracleOptions {
    int max_iter = 0;           ///< 0: 1e5 for p = 2, 2e5 for p = 1
    double stall_tol = 1e-12;   ///< improvement over the last `window` iterations
    int window = 100;
};

/// Projected gradient descent on sum_x w_x sum_i (t_i(x) - v_x)^2 subject to
/// sum_x w_x v_x = A (Simpson weights), random start from seed.
OracleReport l2_oracle(const ShiftSequence& ts, double A, int n, std::uint64_t seed,
                       const OracleOptions& opts = {});

/// Projected subgradient descent with steps eta / sqrt(k) on the L^1
/// objective, same constraint, best iterate kept. eta starts at the range of
/// the shifts; on a stall the method restarts from the best iterate with
/// eta / 4 and counts as converged once eta is below 1e-12 of its start.
OracleReport l1_oracle(const ShiftSequence& ts, double A, int n, std::uint64_t seed,
                       const OracleOptions& opts = {});

/// Relative-gap tolerance of each oracle: 1e-6 (p = 2), 1e-4 (p = 1).
double oracle_tolerance(int p);

}  // namespace tbvp

#endif  // TBVP_ORACLE_HPP
