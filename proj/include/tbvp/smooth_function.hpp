#ifndef TBVP_SMOOTH_FUNCTION_HPP
#define TBVP_SMOOTH_FUNCTION_HPP

#include "tbvp/grid.hpp"

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace tbvp {

enum class FunctionSource { catalog_analytic, spline_from_samples };

/// A function on a closed interval together with its first two derivatives.
class SmoothFunction {
public:
    using Map = std::function<double(double)>;

    SmoothFunction(Map value, Map d1, Map d2, FunctionSource source,
                   double lo = -std::numeric_limits<double>::infinity(),
                   double hi = std::numeric_limits<double>::infinity());

    double value(double x) const { return value_(x); }
    double d1(double x) const { return d1_(x); }
    double d2(double x) const { return d2_(x); }
    double operator()(double x) const { return value_(x); }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    FunctionSource source() const { return source_; }
    bool covers(double a, double b) const { return lo_ <= a && b <= hi_; }

    /// Same function restricted (or widened) to [lo, hi].
    SmoothFunction with_domain(double lo, double hi) const;

    /// x -> f(x + shift); handy for traveling profiles such as sin(x - T).
    SmoothFunction shifted(double shift) const;

private:
    Map value_;
    Map d1_;
    Map d2_;
    FunctionSource source_;
    double lo_;
    double hi_;
};

/// Analytic families:
///   zero          []
///   const         [c]
///   poly          [c0, c1, ..., cd]           sum c_k x^k
///   sin, cos      [omega, phase]              sin(omega x + phase)
///   gaussian      [amp, center, width]        amp exp(-(x-center)^2 / (2 width^2))
///   tanh-bump     [amp, center, half, steep]  amp/2 (tanh((x-c+half)/steep) - tanh((x-c-half)/steep))
SmoothFunction catalog(const std::string& name, const std::vector<double>& params);

/// Natural cubic spline through (x_k, y_k), x strictly increasing, at least 3 points.
SmoothFunction spline_from_samples(const std::vector<double>& x, const std::vector<double>& y);

/// values[i] = f(x_i) on n uniform nodes; DomainError if [a, b] is not inside f's domain.
GridFunction sample(const SmoothFunction& f, double a, double b, int n);

}  // namespace tbvp

#endif  // TBVP_SMOOTH_FUNCTION_HPP
