#ifndef TBVP_PROBLEM_HPP
#define TBVP_PROBLEM_HPP

#include "tbvp/smooth_function.hpp"

namespace tbvp {

/// Integral and endpoint constants a decision-interval input must satisfy.
struct Constraints {
    double A;   ///< required integral of v over [-T, T]
    double c1;  ///< v(T) - v(-T)
    double c2;  ///< v'(T) - v'(-T)
};

/// Wave equation u_tt = u_xx (unit speed) with u(0, x) = f0, u(T, x) = fT,
/// posed on the window [-(2 K1 + 1) T, (2 K2 + 1) T].
class ProblemSpec {
public:
    /// Throws BadParams for T <= 0 or K1, K2 < 1, DomainError when f0 or fT
    /// do not cover the window.
    ProblemSpec(SmoothFunction f0, SmoothFunction fT, double T, int K1, int K2);

    const SmoothFunction& f0() const { return f0_; }
    const SmoothFunction& fT() const { return fT_; }
    double T() const { return T_; }
    int K1() const { return K1_; }
    int K2() const { return K2_; }
    /// Number of 2T periods in the window, K1 + K2 + 1.
    int K() const { return K1_ + K2_ + 1; }

    double window_lo() const { return -(2.0 * K1_ + 1.0) * T_; }
    double window_hi() const { return (2.0 * K2_ + 1.0) * T_; }

    const Constraints& constraints() const { return constraints_; }
    double A() const { return constraints_.A; }
    double c1() const { return constraints_.c1; }
    double c2() const { return constraints_.c2; }

private:
    SmoothFunction f0_;
    SmoothFunction fT_;
    double T_;
    int K1_;
    int K2_;
    Constraints constraints_;
};

/// A = 2 fT(0) - f0(T) - f0(-T), c1 and c2 the same combination of first
/// and second derivatives.
Constraints derive_constraints(const ProblemSpec& spec);

}  // namespace tbvp

#endif  // TBVP_PROBLEM_HPP
