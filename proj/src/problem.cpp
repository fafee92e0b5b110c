#include "tbvp/problem.hpp"

#include "tbvp/errors.hpp"

#include <string>

namespace tbvp {

namespace {

Constraints compute_constraints(const SmoothFunction& f0, const SmoothFunction& fT, double T) {
    return {2.0 * fT.value(0.0) - f0.value(T) - f0.value(-T),
            2.0 * fT.d1(0.0) - f0.d1(T) - f0.d1(-T),
            2.0 * fT.d2(0.0) - f0.d2(T) - f0.d2(-T)};
}

}  // namespace

ProblemSpec::ProblemSpec(SmoothFunction f0, SmoothFunction fT, double T, int K1, int K2)
    : f0_(std::move(f0)), fT_(std::move(fT)), T_(T), K1_(K1), K2_(K2), constraints_{} {
    if (!(T_ > 0.0)) throw BadParams("horizon T must be positive");
    if (K1_ < 1 || K2_ < 1) throw BadParams("K1 and K2 must be positive integers");
    const double lo = window_lo(), hi = window_hi();
    if (!f0_.covers(lo, hi))
        throw DomainError("f0 must be defined on [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    // fT is only read on [-2 K1 T, 2 K2 T], but the window is the stated contract.
    if (!fT_.covers(lo, hi))
        throw DomainError("fT must be defined on [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    constraints_ = compute_constraints(f0_, fT_, T_);
}

Constraints derive_constraints(const ProblemSpec& spec) { return spec.constraints(); }

}  // namespace tbvp
