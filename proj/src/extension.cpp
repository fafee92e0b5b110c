#include "tbvp/extension.hpp"

#include "tbvp/errors.hpp"

#include <cmath>

namespace tbvp {

namespace {

GridFunction assemble_window(const Eigen::MatrixXd& periods, double lo, double hi) {
    const int n = static_cast<int>(periods.rows());
    const int K = static_cast<int>(periods.cols());
    Vector w(K * (n - 1) + 1);
    for (int c = 0; c < K; ++c) w.segment(c * (n - 1), n - 1) = periods.col(c).head(n - 1);
    w[w.size() - 1] = periods(n - 1, K - 1);
    return GridFunction(lo, hi, std::move(w));
}

}  // namespace

ExtendedInput::ExtendedInput(const ProblemSpec& spec, Eigen::MatrixXd periods,
                             Eigen::MatrixXd slopes)
    : K1_(spec.K1()), K2_(spec.K2()), T_(spec.T()), periods_(std::move(periods)),
      slopes_(std::move(slopes)),
      window_(assemble_window(periods_, spec.window_lo(), spec.window_hi())) {
    const int n = nodes_per_period();
    for (int c = 0; c + 1 < K(); ++c) {
        Seam s{};
        s.x = spec.window_lo() + 2.0 * (c + 1) * T_;
        s.left_value = periods_(n - 1, c);
        s.right_value = periods_(0, c + 1);
        s.value_jump = std::abs(s.left_value - s.right_value);
        s.left_slope = slopes_(n - 1, c);
        s.right_slope = slopes_(0, c + 1);
        s.slope_jump = std::abs(s.left_slope - s.right_slope);
        seams_.push_back(s);
    }
}

GridFunction ExtendedInput::period(int P) const {
    const double lo = (2.0 * P - 1.0) * T_;
    return GridFunction(lo, lo + 2.0 * T_, periods_.col(column_of(P)));
}

ExtendedInput extend_input(const GridFunction& v, const ShiftSequence& ts) {
    const ProblemSpec* spec = ts.spec();
    if (!spec) throw GridError("extension needs a shift sequence derived from a problem");
    if (!ts.same_grid(v))
        throw GridError("input grid must match the decision grid [-T, T] of the shift sequence");

    const int n = v.size();
    const int K = spec->K();
    const Vector dv = derivative(v);
    Eigen::MatrixXd periods(n, K), slopes(n, K);
    for (int c = 0; c < K; ++c) {
        const int i = ts.index_of_period(c - spec->K1());
        periods.col(c) = v.values() - ts[i].values();
        slopes.col(c) = dv - ts.slopes(i);
    }
    return ExtendedInput(*spec, std::move(periods), std::move(slopes));
}

ExtendedInput extend_input(const GridFunction& v, const ProblemSpec& spec) {
    const double T = spec.T();
    if (v.a() != -T || v.b() != T) throw GridError("input must be sampled on [-T, T]");
    return extend_input(v, shift_sequence(spec, v.size()));
}

double window_lp_power(const ExtendedInput& ext, int p) {
    double total = 0.0;
    for (int P = -ext.K1(); P <= ext.K2(); ++P) total += lp_power(ext.period(P), p);
    return total;
}

std::vector<double> period_integrals(const ExtendedInput& ext) {
    std::vector<double> out;
    for (int P = -ext.K1(); P <= ext.K2(); ++P) out.push_back(integrate(ext.period(P)));
    return out;
}

double equilibrium_value(const ProblemSpec& spec, int P) {
    const double T = spec.T();
    return 2.0 * spec.fT().value(2.0 * P * T) - spec.f0().value((2.0 * P + 1.0) * T) -
           spec.f0().value((2.0 * P - 1.0) * T);
}

}  // namespace tbvp
