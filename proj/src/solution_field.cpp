#include "tbvp/solution_field.hpp"

#include "tbvp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tbvp {

namespace {

// Integral over [0, theta] (in units of the cell) of the cubic Hermite interpolant.
double hermite_partial(double y0, double s0, double y1, double s1, double h, double theta) {
    const double t2 = theta * theta, t3 = t2 * theta, t4 = t3 * theta;
    const double H00 = t4 / 2.0 - t3 + theta;
    const double H10 = t4 / 4.0 - 2.0 * t3 / 3.0 + t2 / 2.0;
    const double H01 = -t4 / 2.0 + t3;
    const double H11 = t4 / 4.0 - t3 / 3.0;
    return h * (y0 * H00 + h * s0 * H10 + y1 * H01 + h * s1 * H11);
}

}  // namespace

SolutionField::SolutionField(const ProblemSpec& spec, ExtendedInput ext)
    : spec_(std::make_shared<const ProblemSpec>(spec)), ext_(std::move(ext)) {
    const auto& Y = ext_.period_matrix();
    const auto& S = ext_.slope_matrix();
    const int n = ext_.nodes_per_period();
    const int K = ext_.K();
    const double h = 2.0 * ext_.T() / (n - 1);
    cumulative_.resize(n, K);
    offsets_.resize(K + 1);
    offsets_[0] = 0.0;
    for (int c = 0; c < K; ++c) {
        cumulative_(0, c) = 0.0;
        for (int i = 0; i + 1 < n; ++i) {
            cumulative_(i + 1, c) = cumulative_(i, c) + 0.5 * h * (Y(i, c) + Y(i + 1, c)) +
                                    h * h / 12.0 * (S(i, c) - S(i + 1, c));
        }
        offsets_[c + 1] = offsets_[c] + cumulative_(n - 1, c);
    }
}

double SolutionField::antiderivative(double s) const {
    const double T = ext_.T();
    const double lo = spec_->window_lo();
    const int n = ext_.nodes_per_period();
    const int K = ext_.K();
    const double h = 2.0 * T / (n - 1);

    int c = static_cast<int>(std::floor((s - lo) / (2.0 * T)));
    c = std::clamp(c, 0, K - 1);
    const double r = s - (lo + 2.0 * T * c);
    int i = static_cast<int>(std::floor(r / h));
    i = std::clamp(i, 0, n - 2);
    const double theta = std::clamp(r / h - i, 0.0, 1.0);

    const auto& Y = ext_.period_matrix();
    const auto& S = ext_.slope_matrix();
    return offsets_[c] + cumulative_(i, c) +
           hermite_partial(Y(i, c), S(i, c), Y(i + 1, c), S(i + 1, c), h, theta);
}

bool SolutionField::contains(double t, double x) const {
    const double lo = spec_->window_lo(), hi = spec_->window_hi();
    const double tol = 1e-12 * (hi - lo);
    if (x < lo - tol || x > hi + tol) return false;
    const double cap = std::min({x - lo, spec_->T(), hi - x});
    return t >= -tol && t <= cap + tol;
}

double SolutionField::operator()(double t, double x) const {
    if (!contains(t, x))
        throw OutOfRegion("(t, x) = (" + std::to_string(t) + ", " + std::to_string(x) +
                          ") lies outside the trapezoidal region");
    const auto& f0 = spec_->f0();
    const double lo = spec_->window_lo(), hi = spec_->window_hi();
    const double right = std::min(x + t, hi);
    const double left = std::max(x - t, lo);
    return 0.5 * (f0.value(right) + f0.value(left)) +
           0.5 * (antiderivative(right) - antiderivative(left));
}

SolutionField dalembert(const GridFunction& v, const ProblemSpec& spec) {
    return SolutionField(spec, extend_input(v, spec));
}

SolutionField dalembert(const GridFunction& v, const ShiftSequence& ts) {
    if (!ts.spec()) throw GridError("D'Alembert reconstruction needs a problem-derived sequence");
    return SolutionField(*ts.spec(), extend_input(v, ts));
}

}  // namespace tbvp
