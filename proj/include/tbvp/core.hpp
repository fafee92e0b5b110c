#ifndef TBVP_CORE_HPP
#define TBVP_CORE_HPP

#include "tbvp/extension.hpp"
#include "tbvp/grid.hpp"
#include "tbvp/problem.hpp"
#include "tbvp/shifts.hpp"
#include "tbvp/smooth_function.hpp"
#include "tbvp/solution_field.hpp"

namespace tbvp {

/// Integral over [-T, T] of sum_i |t_i - v|^p, which equals the integral of
/// |v_ext|^p over the whole window. GridError when v is off the shift grid.
double full_norm(const GridFunction& v, const ShiftSequence& ts, int p);
double full_norm(const GridFunction& v, const ProblemSpec& spec, int p);

/// F'(x) = (f0'(x) - v(x)) / 2 for the traveling-wave split u = F(x - t) + G(x + t).
GridFunction f_profile(const GridFunction& v, const ProblemSpec& spec);

}  // namespace tbvp

#endif  // TBVP_CORE_HPP
