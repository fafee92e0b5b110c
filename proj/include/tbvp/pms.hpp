#ifndef TBVP_PMS_HPP
#define TBVP_PMS_HPP

#include "tbvp/approx.hpp"
#include "tbvp/problem.hpp"

#include <vector>

namespace tbvp {

/// One member v_n of a pre-minimum-input sequence and its norm certificate.
struct PmsEntry {
    double epsilon;
    ApproxResult result;    ///< best effort when budget_exceeded
    bool budget_exceeded;
    double norm_v;          ///< window integral of |v_ext|^p
    double norm_vn;
    double gap;             ///< |norm_vn - norm_v|
    /// p = 1: 2 K T eps; p = 2: M eps.
    double bound;
    /// p = 1: K * ||v_n - v||_1 (the chain before the 2T factor); p = 2: M * ||v_n - v||_2.
    double measured_bound;
    double M;               ///< p = 2: (integral of (sum_i (2 t_i - v_n - v))^2)^(1/2); 0 for p = 1
    bool satisfied;         ///< gap <= bound
};

/// For each epsilon, a C^1 input with the integral and endpoint relations of
/// spec that is epsilon-close to v (read as its linear interpolant) in L^p.
/// Norms, gaps and M are integrated with the same adaptive quadrature, the
/// shifts evaluated pointwise. Entries run in parallel.
std::vector<PmsEntry> pms_sequence(const GridFunction& v, const ProblemSpec& spec,
                                   const std::vector<double>& eps_schedule, int p,
                                   const ApproxOptions& opts = {});

}  // namespace tbvp

#endif  // TBVP_PMS_HPP
